#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "llshock/random.hpp"

namespace llshock {

/**
 * Shape/scale pair of a log-Lindley law LL(sigma, lambda) on (0,1):
 *
 *   f(x) = sigma^2 / (1 + lambda*sigma) * (lambda - ln x) * x^(sigma-1)
 *   F(x) = x^sigma * (1 + sigma*(lambda - ln x)) / (1 + lambda*sigma)
 *
 * The constructor rejects sigma <= 0 and lambda < 0.
 */
class LLParams {
 public:
  LLParams(double sigma, double lambda) : sigma_(sigma), lambda_(lambda) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
      throw std::invalid_argument("log-Lindley shape must be finite and > 0, got " +
                                  std::to_string(sigma));
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("log-Lindley scale must be finite and >= 0, got " +
                                  std::to_string(lambda));
    }
  }

  double sigma() const { return sigma_; }
  double lambda() const { return lambda_; }

  /// 1 / (1 + lambda*sigma), the transformed scale used in the majorization results.
  double transformed_scale() const { return 1.0 / (1.0 + lambda_ * sigma_); }

  friend bool operator==(const LLParams&, const LLParams&) = default;

 private:
  double sigma_;
  double lambda_;
};

namespace detail {

inline void require_closed_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + ": argument must lie in [0,1], got " +
                            std::to_string(x));
  }
}

// CDF as a function of y = ln x, y <= 0.
inline double ll_cdf_log(const LLParams& p, double y) {
  const double s = p.sigma();
  return std::exp(s * y) * (1.0 + s * (p.lambda() - y)) / (1.0 + p.lambda() * s);
}

// dF/dy = x * f(x).
inline double ll_cdf_log_slope(const LLParams& p, double y) {
  const double s = p.sigma();
  return s * s * std::exp(s * y) * (p.lambda() - y) / (1.0 + p.lambda() * s);
}

}  // namespace detail

inline double ll_pdf(const LLParams& p, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("ll_pdf: argument must lie in (0,1), got " + std::to_string(x));
  }
  const double s = p.sigma();
  return s * s / (1.0 + p.lambda() * s) * (p.lambda() - std::log(x)) * std::pow(x, s - 1.0);
}

/// F(0) = 0 by continuity of x^sigma ln x.
inline double ll_cdf(const LLParams& p, double x) {
  detail::require_closed_unit(x, "ll_cdf");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  return detail::ll_cdf_log(p, std::log(x));
}

/// Survival 1 - F(x), written so that it keeps relative accuracy near x = 1:
///   w(x) = 1 - x^sigma + sigma x^sigma ln x / (1 + lambda sigma)
inline double ll_survival(const LLParams& p, double x) {
  detail::require_closed_unit(x, "ll_survival");
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  const double t = p.sigma() * std::log(x);
  return -std::expm1(t) + std::exp(t) * t / (1.0 + p.lambda() * p.sigma());
}

/**
 * Inverse CDF. Safeguarded Newton iteration in y = ln x: the bracket starts
 * at y_hi = ln(q)/sigma (F(x) >= x^sigma bounds the root from above) and a
 * lower end found by doubling steps; any Newton step leaving the bracket is
 * replaced by bisection. Stops when |F(x) - q| <= 1e-13 * q (so small
 * quantiles keep relative accuracy), when the bracket is a few ulps wide, or
 * after 200 steps.
 */
inline double ll_quantile(const LLParams& p, double q) {
  detail::require_closed_unit(q, "ll_quantile");
  if (q == 0.0) return 0.0;
  if (q == 1.0) return 1.0;

  constexpr double kTol = 1e-13;
  constexpr int kMaxIter = 200;

  double hi = std::log(q) / p.sigma();
  double lo = hi;
  for (double step = 1.0; detail::ll_cdf_log(p, lo) > q; step *= 2.0) {
    hi = lo;
    lo -= step;
  }

  double y = hi;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    const double f = detail::ll_cdf_log(p, y) - q;
    if (std::abs(f) <= kTol * q) break;
    if (f < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo))) {
      break;
    }
    const double slope = detail::ll_cdf_log_slope(p, y);
    double next = slope > 0.0 ? y - f / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    y = next;
  }
  return std::exp(y);
}

/// Inverse-transform draws; output is a pure function of the stream state.
inline std::vector<double> ll_sample(const LLParams& p, Rng& rng, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(ll_quantile(p, uniform01(rng)));
  return out;
}

}  // namespace llshock
