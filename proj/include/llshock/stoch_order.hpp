#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "llshock/random.hpp"
#include "llshock/shock_model.hpp"

namespace llshock {

/// Sorted, strictly increasing evaluation points in [0,1] that include 0 and 1.
class Grid {
 public:
  explicit Grid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2 || points_.front() != 0.0 || points_.back() != 1.0) {
      throw std::invalid_argument("grid must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (!(points_[i] > points_[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
    }
  }

  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  const std::vector<double>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<double> points_;
};

inline constexpr std::size_t kDefaultGridInterior = 4096;

/**
 * {0} + n_interior uniform points k/(n_interior+1) + 0.5 + geometric
 * clusters 10^-12 .. 10^-1 near both ends + {1}, deduplicated. The clusters
 * hold n_interior/16 points each (at least 8).
 */
inline Grid make_grid(std::size_t n_interior = kDefaultGridInterior) {
  if (n_interior < 2) throw std::invalid_argument("make_grid needs at least 2 interior points");
  std::vector<double> pts{0.0, 0.5, 1.0};
  for (std::size_t k = 1; k <= n_interior; ++k) {
    pts.push_back(static_cast<double>(k) / static_cast<double>(n_interior + 1));
  }
  const std::size_t cluster = std::max<std::size_t>(8, n_interior / 16);
  for (std::size_t k = 0; k < cluster; ++k) {
    const double e = -12.0 + 11.0 * static_cast<double>(k) / static_cast<double>(cluster - 1);
    const double t = std::pow(10.0, e);
    pts.push_back(t);
    pts.push_back(1.0 - t);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return Grid(std::move(pts));
}

enum class Order { kFirstDominates, kSecondDominates, kEqual, kCrossing };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::kFirstDominates: return "FirstDominates";
    case Order::kSecondDominates: return "SecondDominates";
    case Order::kEqual: return "Equal";
    default: return "Crossing";
  }
}

/**
 * Usual stochastic order verdict built from d(x) = F_X(x) - F_Y(x).
 * X >=st Y (FirstDominates) iff d <= tol everywhere and d < -tol somewhere.
 *
 * max_positive_gap = max(0, max d) and max_negative_gap = min(0, min d).
 * The witnesses are the arg-max/arg-min grid points, set only when the
 * corresponding gap exceeds the tolerance there.
 */
struct OrderVerdict {
  Order outcome = Order::kEqual;
  double max_positive_gap = 0.0;
  double max_negative_gap = 0.0;
  std::optional<double> positive_witness;
  std::optional<double> negative_witness;
  double tolerance = 0.0;  // largest tolerance used on the grid

  /// True when the verdict is compatible with X >=st Y (Equal counts).
  bool first_at_least() const { return outcome == Order::kFirstDominates || outcome == Order::kEqual; }
};

struct DiffPoint {
  double x;
  double diff;
};

namespace detail {

// `tol_at(i)` gives the tolerance at grid point i.
template <class TolAt>
OrderVerdict classify(const std::vector<double>& xs, const std::vector<double>& d, TolAt tol_at) {
  OrderVerdict v;
  bool pos = false;
  bool neg = false;
  double best_pos = -1.0;  // largest excess over tolerance
  double best_neg = -1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double tol = tol_at(i);
    v.tolerance = std::max(v.tolerance, tol);
    v.max_positive_gap = std::max(v.max_positive_gap, d[i]);
    v.max_negative_gap = std::min(v.max_negative_gap, d[i]);
    if (d[i] > tol) {
      pos = true;
      if (d[i] - tol > best_pos) {
        best_pos = d[i] - tol;
        v.positive_witness = xs[i];
      }
    }
    if (d[i] < -tol) {
      neg = true;
      if (-d[i] - tol > best_neg) {
        best_neg = -d[i] - tol;
        v.negative_witness = xs[i];
      }
    }
  }
  if (pos && neg) {
    v.outcome = Order::kCrossing;
  } else if (neg) {
    v.outcome = Order::kFirstDominates;
  } else if (pos) {
    v.outcome = Order::kSecondDominates;
  } else {
    v.outcome = Order::kEqual;
  }
  return v;
}

}  // namespace detail

/// (x, F_X(x) - F_Y(x)) over the grid, atom at 0 included.
inline std::vector<DiffPoint> cdf_difference(const SystemSpec& sys_x, const SystemSpec& sys_y, const Grid& grid) {
  std::vector<DiffPoint> out;
  out.reserve(grid.size());
  for (double x : grid) out.push_back({x, parallel_cdf(sys_x, x) - parallel_cdf(sys_y, x)});
  return out;
}

inline constexpr double kDefaultOrderTol = 1e-9;

/// Grid-based decision of the usual stochastic order between two parallel systems.
inline OrderVerdict compare_st(const SystemSpec& sys_x, const SystemSpec& sys_y, const Grid& grid,
                               double tol = kDefaultOrderTol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be finite and > 0");
  std::vector<double> d;
  d.reserve(grid.size());
  for (double x : grid) d.push_back(parallel_cdf(sys_x, x) - parallel_cdf(sys_y, x));
  return detail::classify(grid.points(), d, [tol](std::size_t) { return tol; });
}

/// Coupled lifetimes of two systems: draw k of both uses the same uniforms,
/// component by component (common random numbers).
struct CoupledSamples {
  std::vector<double> x;
  std::vector<double> y;
};

inline CoupledSamples coupled_parallel_sample(const SystemSpec& sys_x, const SystemSpec& sys_y, std::size_t n,
                                              std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t m = std::max(sys_x.size(), sys_y.size());
  CoupledSamples out;
  out.x.reserve(n);
  out.y.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double bx = 0.0;
    double by = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const double u_alive = uniform01(rng);
      const double u_life = uniform01(rng);
      if (c < sys_x.size()) bx = std::max(bx, detail::component_draw(sys_x[c], u_alive, u_life));
      if (c < sys_y.size()) by = std::max(by, detail::component_draw(sys_y[c], u_alive, u_life));
    }
    out.x.push_back(bx);
    out.y.push_back(by);
  }
  return out;
}

inline constexpr std::size_t kMinMonteCarloDraws = 10000;

/**
 * Monte Carlo cross-check of compare_st. Both empirical CDFs come from
 * coupled draws; at each grid point the band is
 *
 *   tol(x) = 5 * sd(x) / sqrt(n) + 1/n,
 *
 * where sd(x)^2 = P(discordant) - d(x)^2 is estimated from the share of
 * draws with exactly one of X_k <= x, Y_k <= x. Identical systems give
 * d == 0 exactly.
 */
inline OrderVerdict compare_st_mc(const SystemSpec& sys_x, const SystemSpec& sys_y, std::size_t n,
                                  std::uint64_t seed, const Grid& grid = make_grid()) {
  if (n < kMinMonteCarloDraws) {
    throw std::invalid_argument("Monte Carlo comparison needs at least " + std::to_string(kMinMonteCarloDraws) +
                                " draws");
  }
  CoupledSamples s = coupled_parallel_sample(sys_x, sys_y, n, seed);
  std::vector<double> both(n);
  for (std::size_t k = 0; k < n; ++k) both[k] = std::max(s.x[k], s.y[k]);
  std::sort(s.x.begin(), s.x.end());
  std::sort(s.y.begin(), s.y.end());
  std::sort(both.begin(), both.end());

  const double nn = static_cast<double>(n);
  std::vector<double> d;
  std::vector<double> tol;
  d.reserve(grid.size());
  tol.reserve(grid.size());
  auto count_le = [](const std::vector<double>& v, double x) {
    return static_cast<double>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
  };
  for (double x : grid) {
    const double cx = count_le(s.x, x);
    const double cy = count_le(s.y, x);
    const double cb = count_le(both, x);
    const double diff = (cx - cy) / nn;
    const double discordant = ((cx - cb) + (cy - cb)) / nn;
    const double var = std::max(0.0, discordant - diff * diff);
    d.push_back(diff);
    tol.push_back(5.0 * std::sqrt(var / nn) + 1.0 / nn);
  }
  return detail::classify(grid.points(), d, [&tol](std::size_t i) { return tol[i]; });
}

}  // namespace llshock
