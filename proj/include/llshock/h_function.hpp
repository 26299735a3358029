#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace llshock {

enum class Monotonicity { kIncreasing, kDecreasing };

inline const char* to_string(Monotonicity m) {
  return m == Monotonicity::kIncreasing ? "increasing" : "decreasing";
}

/**
 * Differentiable, strictly convex, strictly monotone map h : (0,1] -> R+
 * used to transform shock probabilities (u_i = h(p_i)). Carries h, its
 * inverse and the derivative of the inverse.
 *
 * Construction validates the contract numerically on a 1001-point probe
 * grid over (0,1]: second differences > 1e-12, h^{-1}(h(u)) = u within
 * 1e-10, values positive and finite, and the declared monotonicity.
 */
class HFunction {
 public:
  using Fn = std::function<double(double)>;

  HFunction(std::string name, Monotonicity mono, Fn eval, Fn inverse, Fn inverse_derivative)
      : name_(std::move(name)),
        mono_(mono),
        eval_(std::move(eval)),
        inverse_(std::move(inverse)),
        dinverse_(std::move(inverse_derivative)) {
    validate();
  }

  const std::string& name() const { return name_; }
  Monotonicity monotonicity() const { return mono_; }
  bool increasing() const { return mono_ == Monotonicity::kIncreasing; }

  double operator()(double u) const { return eval_(u); }
  double inverse(double y) const { return inverse_(y); }
  double inverse_derivative(double y) const { return dinverse_(y); }

  /// Image of the probability interval [p_lo, p_hi] as an ordered pair.
  std::pair<double, double> range(double p_lo, double p_hi) const {
    const double a = eval_(p_lo);
    const double b = eval_(p_hi);
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  std::vector<double> apply(const std::vector<double>& p) const {
    std::vector<double> out;
    out.reserve(p.size());
    for (double v : p) out.push_back(eval_(v));
    return out;
  }

  std::vector<double> invert(const std::vector<double>& u) const {
    std::vector<double> out;
    out.reserve(u.size());
    for (double v : u) out.push_back(inverse_(v));
    return out;
  }

 private:
  void validate() const {
    constexpr int kProbes = 1001;
    std::vector<double> h(kProbes);
    for (int k = 0; k < kProbes; ++k) {
      const double u = static_cast<double>(k + 1) / kProbes;
      h[k] = eval_(u);
      if (!std::isfinite(h[k]) || !(h[k] > 0.0 || (h[k] == 0.0 && u == 1.0))) {
        throw std::invalid_argument("h '" + name_ + "' must map (0,1] into R+");
      }
      if (std::abs(inverse_(h[k]) - u) > 1e-10) {
        throw std::invalid_argument("h '" + name_ + "': inverse does not invert h");
      }
      if (k > 0) {
        const bool up = h[k] > h[k - 1];
        if (up != increasing()) {
          throw std::invalid_argument("h '" + name_ + "' is not " + to_string(mono_));
        }
      }
      if (k > 1 && !(h[k] - 2.0 * h[k - 1] + h[k - 2] > 1e-12)) {
        throw std::invalid_argument("h '" + name_ + "' is not strictly convex");
      }
    }
  }

  std::string name_;
  Monotonicity mono_;
  Fn eval_;
  Fn inverse_;
  Fn dinverse_;
};

inline const std::vector<std::string>& builtin_h_names() {
  static const std::vector<std::string> names{"neg_log", "square", "exp"};
  return names;
}

/// neg_log: -ln u (decreasing). square: u^2 (increasing). exp: e^u (increasing).
inline HFunction builtin_h(const std::string& name) {
  if (name == "neg_log") {
    return HFunction(
        name, Monotonicity::kDecreasing, [](double u) { return -std::log(u); },
        [](double y) { return std::exp(-y); }, [](double y) { return -std::exp(-y); });
  }
  if (name == "square") {
    return HFunction(
        name, Monotonicity::kIncreasing, [](double u) { return u * u; },
        [](double y) { return std::sqrt(y); }, [](double y) { return 0.5 / std::sqrt(y); });
  }
  if (name == "exp") {
    return HFunction(
        name, Monotonicity::kIncreasing, [](double u) { return std::exp(u); },
        [](double y) { return std::log(y); }, [](double y) { return 1.0 / y; });
  }
  throw std::invalid_argument("unknown h function '" + name + "' (expected neg_log, square or exp)");
}

}  // namespace llshock
