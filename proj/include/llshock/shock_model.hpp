#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "llshock/log_lindley.hpp"
#include "llshock/random.hpp"

namespace llshock {

/**
 * Component lifetime X = I*T under a random shock: T ~ LL(sigma, lambda) and
 * I ~ Bernoulli(p) independent of T. With probability 1 - p the component is
 * dead at time 0, so the lifetime law has an atom of mass 1 - p at zero.
 */
struct ShockedComponent {
  LLParams ll;
  double p;

  ShockedComponent(LLParams params, double survive_prob) : ll(params), p(survive_prob) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("shock probability must lie in (0,1], got " + std::to_string(p));
    }
  }

  friend bool operator==(const ShockedComponent&, const ShockedComponent&) = default;
};

/// Ordered components of one parallel system (lifetime = max over components).
class SystemSpec {
 public:
  explicit SystemSpec(std::vector<ShockedComponent> components)
      : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("a system needs at least one component");
  }

  /// Builds a system from parallel arrays; throws on unequal lengths.
  static SystemSpec from_arrays(const std::vector<double>& sigma, const std::vector<double>& lambda,
                                const std::vector<double>& p) {
    if (sigma.size() != lambda.size() || sigma.size() != p.size()) {
      throw std::invalid_argument("sigma, lambda and p must have equal lengths");
    }
    std::vector<ShockedComponent> comps;
    comps.reserve(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      comps.emplace_back(LLParams(sigma[i], lambda[i]), p[i]);
    }
    return SystemSpec(std::move(comps));
  }

  std::size_t size() const { return components_.size(); }
  const ShockedComponent& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ShockedComponent>& components() const { return components_; }

  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;

 private:
  std::vector<ShockedComponent> components_;
};

/// w(x; sigma, lambda) = 1 - F(x), with w(0) = 1 and w(1) = 0.
inline double shocked_survival_w(const LLParams& params, double x) {
  return ll_survival(params, x);
}

/// Right-continuous CDF of I*T: 1 - p at t = 0, 1 - p*w(t) for t > 0.
inline double shocked_cdf(const ShockedComponent& c, double t) {
  detail::require_closed_unit(t, "shocked_cdf");
  if (t == 0.0) return 1.0 - c.p;
  return 1.0 - c.p * shocked_survival_w(c.ll, t);
}

inline double parallel_cdf(const SystemSpec& sys, double x) {
  detail::require_closed_unit(x, "parallel_cdf");
  double prod = 1.0;
  for (const auto& c : sys) prod *= shocked_cdf(c, x);
  return prod;
}

namespace detail {

// One component draw from a pair of uniforms: the first decides the shock
// outcome, the second feeds the lifetime quantile (skipped when dead).
inline double component_draw(const ShockedComponent& c, double u_alive, double u_life) {
  return u_alive < c.p ? ll_quantile(c.ll, u_life) : 0.0;
}

}  // namespace detail

/// Monte Carlo draws of max_i I_i*T_i. Each draw consumes exactly two
/// uniforms per component, so the stream layout depends only on (size, n).
inline std::vector<double> parallel_sample(const SystemSpec& sys, Rng& rng, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double best = 0.0;
    for (const auto& c : sys) {
      const double u_alive = uniform01(rng);
      const double u_life = uniform01(rng);
      best = std::max(best, detail::component_draw(c, u_alive, u_life));
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace llshock
