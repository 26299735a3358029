#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "llshock/random.hpp"

namespace llshock {

using RealVec = std::vector<double>;

/**
 * Outcome of a majorization-type comparison. When the relation fails,
 * `witness` is the 1-based j of the first violated partial-sum inequality
 * (prefix length for majorization / weak supermajorization, suffix start for
 * weak submajorization) and `row` names the failing row of a matrix relation.
 */
struct MajorVerdict {
  bool holds = true;
  std::optional<std::size_t> witness;
  std::optional<std::size_t> row;

  static MajorVerdict ok() { return {}; }
  static MajorVerdict fail(std::size_t j, std::optional<std::size_t> r = std::nullopt) {
    return {false, j, r};
  }
};

namespace detail {

inline void require_same_length(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("vectors must have equal lengths (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw std::invalid_argument("vectors must be non-empty");
}

inline RealVec sorted_increasing(std::span<const double> x) {
  RealVec out(x.begin(), x.end());
  std::stable_sort(out.begin(), out.end());
  return out;
}

// tau = 1e-12 * (1 + max |entry|) over both vectors.
inline double sum_tolerance(std::span<const double> x, std::span<const double> y) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  for (double v : y) m = std::max(m, std::abs(v));
  return 1e-12 * (1.0 + m);
}

}  // namespace detail

/// x majorizes y: prefix sums of the increasing arrangements satisfy
/// sum_{i<=j} x_(i) <= sum_{i<=j} y_(i) for j < n, with equal totals.
inline MajorVerdict majorizes(std::span<const double> x, std::span<const double> y) {
  detail::require_same_length(x, y);
  const RealVec xs = detail::sorted_increasing(x);
  const RealVec ys = detail::sorted_increasing(y);
  const double tau = detail::sum_tolerance(x, y);
  double sx = 0.0;
  double sy = 0.0;
  const std::size_t n = xs.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sx += xs[j];
    sy += ys[j];
    if (sx > sy + tau) return MajorVerdict::fail(j + 1);
  }
  sx += xs[n - 1];
  sy += ys[n - 1];
  if (std::abs(sx - sy) > tau) return MajorVerdict::fail(n);
  return MajorVerdict::ok();
}

/// x weakly supermajorizes y: prefix-sum inequalities for every j = 1..n.
inline MajorVerdict weakly_supermajorizes(std::span<const double> x, std::span<const double> y) {
  detail::require_same_length(x, y);
  const RealVec xs = detail::sorted_increasing(x);
  const RealVec ys = detail::sorted_increasing(y);
  const double tau = detail::sum_tolerance(x, y);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sx += xs[j];
    sy += ys[j];
    if (sx > sy + tau) return MajorVerdict::fail(j + 1);
  }
  return MajorVerdict::ok();
}

/// x weakly submajorizes y: sum_{i>=j} x_(i) >= sum_{i>=j} y_(i) for j = 1..n.
inline MajorVerdict weakly_submajorizes(std::span<const double> x, std::span<const double> y) {
  detail::require_same_length(x, y);
  const RealVec xs = detail::sorted_increasing(x);
  const RealVec ys = detail::sorted_increasing(y);
  const double tau = detail::sum_tolerance(x, y);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t j = xs.size(); j-- > 0;) {
    sx += xs[j];
    sy += ys[j];
    if (sx < sy - tau) return MajorVerdict::fail(j + 1);
  }
  return MajorVerdict::ok();
}

// ---------------------------------------------------------------------------
// Square matrices, doubly stochastic matrices and T-transforms

class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {
    if (n == 0) throw std::invalid_argument("matrix order must be >= 1");
  }

  SquareMatrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
    if (n == 0 || data_.size() != n * n) {
      throw std::invalid_argument("square matrix needs n*n entries");
    }
    for (double v : data_) {
      if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t order() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix orders differ");
    SquareMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const double aik = a(i, k);
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Nonnegative entries (>= -tau) and unit row and column sums within tau.
inline bool is_doubly_stochastic(const SquareMatrix& m, double tau = 1e-12) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) < -tau) return false;
      row += m(i, j);
      col += m(j, i);
    }
    if (std::abs(row - 1.0) > tau || std::abs(col - 1.0) > tau) return false;
  }
  return true;
}

/// mix*I + (1-mix)*Pi where Pi swaps coordinates i and j (0-based).
inline SquareMatrix t_transform(std::size_t n, std::size_t i, std::size_t j, double mix) {
  if (i >= n || j >= n || i == j) {
    throw std::invalid_argument("t_transform needs distinct indices below the order");
  }
  if (!(mix >= 0.0 && mix <= 1.0)) throw std::invalid_argument("t_transform mix must lie in [0,1]");
  SquareMatrix m = SquareMatrix::identity(n);
  m(i, i) = mix;
  m(j, j) = mix;
  m(i, j) = 1.0 - mix;
  m(j, i) = 1.0 - mix;
  return m;
}

/// Row vector times matrix.
inline RealVec operator*(std::span<const double> x, const SquareMatrix& m) {
  if (x.size() != m.order()) throw std::invalid_argument("vector length does not match matrix order");
  RealVec out(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t j = 0; j < x.size(); ++j) out[j] += x[k] * m(k, j);
  return out;
}

// ---------------------------------------------------------------------------
// 2 x n parameter matrices

/// Two-row matrix; the top row holds transformed shock parameters h(p), the
/// bottom row transformed scales v.
struct ParamMatrix {
  RealVec top;
  RealVec bottom;

  ParamMatrix(RealVec top_row, RealVec bottom_row)
      : top(std::move(top_row)), bottom(std::move(bottom_row)) {
    if (top.size() != bottom.size() || top.empty()) {
      throw std::invalid_argument("parameter matrix rows must be non-empty and of equal length");
    }
    for (double v : top)
      if (!std::isfinite(v)) throw std::invalid_argument("parameter matrix entries must be finite");
    for (double v : bottom)
      if (!std::isfinite(v)) throw std::invalid_argument("parameter matrix entries must be finite");
  }

  std::size_t cols() const { return top.size(); }
  const RealVec& row(std::size_t r) const { return r == 0 ? top : bottom; }

  friend ParamMatrix operator*(const ParamMatrix& a, const SquareMatrix& m) {
    return ParamMatrix(std::span<const double>(a.top) * m, std::span<const double>(a.bottom) * m);
  }
};

/// B = A * T1 * ... * Tk. Every factor must be a doubly stochastic matrix of
/// order A.cols() (T-transforms in the intended use).
inline ParamMatrix chain_majorize_apply(const ParamMatrix& a, const std::vector<SquareMatrix>& transforms) {
  ParamMatrix b = a;
  for (const auto& t : transforms) {
    if (t.order() != a.cols()) throw std::invalid_argument("transform order does not match matrix width");
    if (!is_doubly_stochastic(t)) throw std::invalid_argument("chain factor is not doubly stochastic");
    b = b * t;
  }
  return b;
}

namespace detail {

inline void require_same_shape(const ParamMatrix& a, const ParamMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("parameter matrices differ in width");
}

template <class Relation>
MajorVerdict rowwise(const ParamMatrix& a, const ParamMatrix& b, Relation rel) {
  require_same_shape(a, b);
  for (std::size_t r = 0; r < 2; ++r) {
    MajorVerdict v = rel(a.row(r), b.row(r));
    if (!v.holds) {
      v.row = r;
      return v;
    }
  }
  return MajorVerdict::ok();
}

}  // namespace detail

/// Every row of A majorizes the matching row of B.
inline MajorVerdict row_majorizes(const ParamMatrix& a, const ParamMatrix& b) {
  return detail::rowwise(a, b, [](const RealVec& x, const RealVec& y) { return majorizes(x, y); });
}

/// Every row of A weakly supermajorizes the matching row of B.
inline MajorVerdict row_weakly_majorizes(const ParamMatrix& a, const ParamMatrix& b) {
  return detail::rowwise(a, b, [](const RealVec& x, const RealVec& y) { return weakly_supermajorizes(x, y); });
}

/// Rows similarly ordered: (top_i - top_j)(bottom_i - bottom_j) >= 0 for all i, j.
inline bool in_U_n(const ParamMatrix& m) {
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if ((m.top[i] - m.top[j]) * (m.bottom[i] - m.bottom[j]) < 0.0) return false;
  return true;
}

/// Rows oppositely ordered. No result consumes this set; provided for completeness.
inline bool in_V_n(const ParamMatrix& m) {
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if ((m.top[i] - m.top[j]) * (m.bottom[i] - m.bottom[j]) > 0.0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Monotone cones

/// D+: x1 >= ... >= xn > 0.  E+: 0 < x1 <= ... <= xn.
enum class Cone { kNone, kDecreasing, kIncreasing };

inline Cone opposite(Cone c) {
  switch (c) {
    case Cone::kDecreasing: return Cone::kIncreasing;
    case Cone::kIncreasing: return Cone::kDecreasing;
    default: return Cone::kNone;
  }
}

inline const char* to_string(Cone c) {
  switch (c) {
    case Cone::kDecreasing: return "D+";
    case Cone::kIncreasing: return "E+";
    default: return "none";
  }
}

inline bool in_cone(std::span<const double> x, Cone c) {
  if (c == Cone::kNone) return true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) return false;
    if (i > 0) {
      if (c == Cone::kDecreasing && x[i] > x[i - 1]) return false;
      if (c == Cone::kIncreasing && x[i] < x[i - 1]) return false;
    }
  }
  return true;
}

inline void sort_into(RealVec& x, Cone c) {
  if (c == Cone::kIncreasing) std::stable_sort(x.begin(), x.end());
  if (c == Cone::kDecreasing) std::stable_sort(x.begin(), x.end(), std::greater<>());
}

// ---------------------------------------------------------------------------
// Instance generators

enum class PairKind { kMajorize, kWeakSuper, kWeakSub, kChain, kRowWeak };

/// Closed interval that generated entries must stay in.
struct Bounds {
  double lo = 0.01;
  double hi = 10.0;
};

/// One T-transform described by its indices (0-based) and mix weight.
struct TTransform {
  std::size_t n;
  std::size_t i;
  std::size_t j;
  double mix;

  SquareMatrix matrix() const { return t_transform(n, i, j, mix); }
};

namespace detail {

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

inline double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

// Random T-transforms on arbitrary coordinate pairs; the result is majorized by x.
inline RealVec random_majorized(std::span<const double> x, Rng& rng) {
  RealVec z(x.begin(), x.end());
  const std::size_t n = z.size();
  if (n < 2) return z;
  const std::size_t count = uniform_index(rng, 2 * n + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = uniform_index(rng, n);
    std::size_t j = uniform_index(rng, n - 1);
    if (j >= i) ++j;
    z = std::span<const double>(z) * t_transform(n, i, j, uniform01(rng));
  }
  return z;
}

}  // namespace detail

/**
 * Partner y for a base vector x such that (x, y) satisfies `kind`
 * (kMajorize, kWeakSuper or kWeakSub), all entries inside `b`.
 *
 * y starts as x pushed through random T-transforms (x majorizes it), then
 * for the weak relations gets a random nonnegative shift: upward for weak
 * supermajorization, downward for weak submajorization. Each stage is
 * skipped with probability 1/4 so the boundary cases (pure majorization,
 * pure shift, y == x) are exercised.
 */
inline RealVec vector_partner(PairKind kind, std::span<const double> x, Bounds b, Rng& rng) {
  const bool mix_stage = uniform01(rng) >= 0.25;
  const bool shift_stage = uniform01(rng) >= 0.25;
  RealVec y = mix_stage ? detail::random_majorized(x, rng) : RealVec(x.begin(), x.end());
  if (kind == PairKind::kMajorize || !shift_stage) return y;
  const double scale = uniform01(rng);
  for (double& v : y) {
    const double u = uniform01(rng) * scale;
    if (kind == PairKind::kWeakSuper) {
      v += u * std::max(0.0, b.hi - v);
    } else if (kind == PairKind::kWeakSub) {
      v -= u * std::max(0.0, v - b.lo);
    } else {
      throw std::invalid_argument("vector_partner handles vector relations only");
    }
  }
  return y;
}

/// Random (x, y) satisfying `kind`, both sorted into `cone`. Requires b.lo > 0
/// when a cone is requested.
inline std::pair<RealVec, RealVec> gen_vector_pair(PairKind kind, std::size_t n, Cone cone, Rng& rng,
                                                   Bounds b = {}) {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  RealVec x(n);
  for (double& v : x) v = detail::uniform_in(rng, b.lo, b.hi);
  RealVec y = vector_partner(kind, x, b, rng);
  sort_into(x, cone);
  sort_into(y, cone);
  return {std::move(x), std::move(y)};
}

/// A ordered above B; `transforms` is filled for chain pairs, B = A*T1*...*Tk.
struct MatrixPair {
  ParamMatrix a;
  ParamMatrix b;
  std::vector<TTransform> transforms;
};

namespace detail {

inline ParamMatrix permute_columns(const ParamMatrix& m, const std::vector<std::size_t>& perm) {
  RealVec top(m.cols());
  RealVec bottom(m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    top[perm[k]] = m.top[k];
    bottom[perm[k]] = m.bottom[k];
  }
  return ParamMatrix(std::move(top), std::move(bottom));
}

}  // namespace detail

/**
 * Chain partner of a matrix whose columns are jointly sorted into a cone:
 * T-transforms act on adjacent columns with mix in [0.5, 1], which keeps
 * every column between its neighbours, so B stays sorted and in U_n.
 */
inline MatrixPair chain_partner(const ParamMatrix& a, Rng& rng) {
  const std::size_t n = a.cols();
  MatrixPair out{a, a, {}};
  if (n < 2) return out;
  const std::size_t count = detail::uniform_index(rng, 2 * n + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t i = detail::uniform_index(rng, n - 1);
    const double mix = 0.5 + 0.5 * uniform01(rng);
    out.transforms.push_back({n, i, i + 1, mix});
    out.b = out.b * out.transforms.back().matrix();
  }
  return out;
}

/// Row-weak partner: each row independently gets a weak-supermajorized
/// partner, then both rows are re-sorted into `cone` (placing B in U_n).
inline MatrixPair row_weak_partner(const ParamMatrix& a, Cone cone, Bounds top_bounds,
                                   Bounds bottom_bounds, Rng& rng) {
  RealVec top = vector_partner(PairKind::kWeakSuper, a.top, top_bounds, rng);
  RealVec bottom = vector_partner(PairKind::kWeakSuper, a.bottom, bottom_bounds, rng);
  const Cone c = cone == Cone::kNone ? Cone::kIncreasing : cone;
  sort_into(top, c);
  sort_into(bottom, c);
  return {a, ParamMatrix(std::move(top), std::move(bottom)), {}};
}

/**
 * Random 2 x n pair ordered by `kind` (kChain or kRowWeak). Both matrices
 * are in U_n; with a cone both rows of both matrices are sorted into it,
 * with Cone::kNone the columns of A and B share one random permutation.
 */
inline MatrixPair gen_matrix_pair(PairKind kind, std::size_t n, Cone cone, Rng& rng, Bounds top_bounds = {},
                                  Bounds bottom_bounds = {}) {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (kind != PairKind::kChain && kind != PairKind::kRowWeak) {
    throw std::invalid_argument("gen_matrix_pair handles matrix relations only");
  }
  RealVec top(n);
  RealVec bottom(n);
  for (double& v : top) v = detail::uniform_in(rng, top_bounds.lo, top_bounds.hi);
  for (double& v : bottom) v = detail::uniform_in(rng, bottom_bounds.lo, bottom_bounds.hi);
  const Cone sorted = cone == Cone::kNone ? Cone::kIncreasing : cone;
  sort_into(top, sorted);
  sort_into(bottom, sorted);
  const ParamMatrix a(std::move(top), std::move(bottom));

  MatrixPair out = kind == PairKind::kChain ? chain_partner(a, rng)
                                            : row_weak_partner(a, sorted, top_bounds, bottom_bounds, rng);
  if (cone == Cone::kNone) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = n - 1; k > 0; --k) std::swap(perm[k], perm[detail::uniform_index(rng, k + 1)]);
    out.a = detail::permute_columns(out.a, perm);
    out.b = detail::permute_columns(out.b, perm);
    for (auto& t : out.transforms) {
      t.i = perm[t.i];
      t.j = perm[t.j];
    }
  }
  return out;
}

}  // namespace llshock
