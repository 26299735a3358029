#pragma once

// Reference computations that share no code path with the library under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/lambert_w.hpp>

namespace oracle {

// Density typed in again from the formula, not calling the library.
inline double pdf(double sigma, double lambda, double x) {
  return sigma * sigma / (1.0 + lambda * sigma) * (lambda - std::log(x)) * std::pow(x, sigma - 1.0);
}

inline double cdf(double sigma, double lambda, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return std::pow(x, sigma) * (1.0 + sigma * (lambda - std::log(x))) / (1.0 + lambda * sigma);
}

/// Integral of f over (a, b) by tanh-sinh quadrature.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  static boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b, 1e-14);
}

/// Closed-form quantile: with c = 1 + lambda*sigma,
/// x = exp((c + W_{-1}(-q c e^{-c})) / sigma).
inline double quantile(double sigma, double lambda, double q) {
  if (q <= 0.0) return 0.0;
  if (q >= 1.0) return 1.0;
  const double c = 1.0 + lambda * sigma;
  const double arg = -q * c * std::exp(-c);
  return std::exp((c + boost::math::lambert_wm1(arg)) / sigma);
}

/// Mixture representation: with probability lambda*sigma/(1+lambda*sigma),
/// X = U^{1/sigma}; otherwise X = exp(-G) with G ~ Gamma(shape 2, rate sigma).
inline std::vector<double> mixture_sample(double sigma, double lambda, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::gamma_distribution<double> gamma(2.0, 1.0 / sigma);
  const double w = lambda * sigma / (1.0 + lambda * sigma);
  std::vector<double> out(n);
  for (double& x : out) x = unif(rng) < w ? std::pow(unif(rng), 1.0 / sigma) : std::exp(-gamma(rng));
  return out;
}

/// Kolmogorov-Smirnov distance between a sample and a continuous CDF.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Five-point central difference of f at x with step h.
inline double derivative(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace oracle
