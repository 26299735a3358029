#pragma once

#include <cstdint>
#include <random>

namespace llshock {

/// Seeded stream used throughout the library. Callers own it; never share one
/// instance between threads.
using Rng = std::mt19937_64;

/// Default master seed for the CLI and sweeps.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Uniform draw on the open interval (0,1) from the top 53 bits of one word.
/// Spelled out instead of std::uniform_real_distribution so streams are
/// reproducible across standard libraries.
inline double uniform01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// SplitMix64 finalizer; derives independent child seeds from a counter.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

}  // namespace llshock
