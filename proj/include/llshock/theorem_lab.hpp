#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "llshock/h_function.hpp"
#include "llshock/log_lindley.hpp"
#include "llshock/majorization.hpp"
#include "llshock/random.hpp"
#include "llshock/shock_model.hpp"
#include "llshock/stoch_order.hpp"

namespace llshock {

// ---------------------------------------------------------------------------
// Parallel-system CDF in transformed coordinates and its partial derivatives

namespace detail {

inline double checked_prob(const HFunction& h, double u) {
  const double p = h.inverse(u);
  if (!(p > 0.0 && p <= 1.0 + 1e-15)) {
    throw std::domain_error("u = " + std::to_string(u) + " is outside the range of h '" + h.name() + "'");
  }
  return std::min(p, 1.0);
}

inline void require_same_size(std::size_t a, std::size_t b) {
  if (a != b || a == 0) throw std::invalid_argument("parameter vectors must be non-empty and equally long");
}

}  // namespace detail

/// psi(u) = prod_i [1 - h^{-1}(u_i) w(x; lifetime_i)], the parallel-system CDF
/// with shock probabilities p_i = h^{-1}(u_i).
inline double psi(const HFunction& h, std::span<const double> u, std::span<const LLParams> lifetimes, double x) {
  detail::require_same_size(u.size(), lifetimes.size());
  detail::require_closed_unit(x, "psi");
  double prod = 1.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    prod *= 1.0 - detail::checked_prob(h, u[i]) * shocked_survival_w(lifetimes[i], x);
  }
  return prod;
}

/// d psi / d u_i = -(dh^{-1}/du)(u_i) w_i prod_{k != i} [1 - h^{-1}(u_k) w_k].
/// Nonpositive for increasing h, nonnegative for decreasing h.
inline double psi_partial(const HFunction& h, std::span<const double> u, std::span<const LLParams> lifetimes,
                          std::size_t i, double x) {
  detail::require_same_size(u.size(), lifetimes.size());
  detail::require_closed_unit(x, "psi_partial");
  if (i >= u.size()) throw std::invalid_argument("psi_partial: index out of range");
  double rest = 1.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k == i) continue;
    rest *= 1.0 - detail::checked_prob(h, u[k]) * shocked_survival_w(lifetimes[k], x);
  }
  detail::checked_prob(h, u[i]);
  return -h.inverse_derivative(u[i]) * shocked_survival_w(lifetimes[i], x) * rest;
}

namespace detail {

// 1 - x^sigma + v sigma x^sigma ln x, i.e. w with 1/(1 + lambda sigma) replaced by v.
inline double survival_in_v(double sigma, double v, double x) {
  if (x == 0.0) return 1.0;
  if (x == 1.0) return 0.0;
  const double t = sigma * std::log(x);
  return -std::expm1(t) + v * std::exp(t) * t;
}

}  // namespace detail

/// The same CDF parameterized by transformed scales v_i = 1/(1 + lambda_i sigma)
/// with a common shape: prod_i [1 - p_i (1 - x^sigma + v_i sigma x^sigma ln x)].
inline double psi_scale(std::span<const double> p, std::span<const double> v, double sigma, double x) {
  detail::require_same_size(p.size(), v.size());
  detail::require_closed_unit(x, "psi_scale");
  double prod = 1.0;
  for (std::size_t i = 0; i < p.size(); ++i) prod *= 1.0 - p[i] * detail::survival_in_v(sigma, v[i], x);
  return prod;
}

/// d psi_scale / d v_i = -p_i sigma x^sigma ln x prod_{k != i}[...] >= 0.
inline double psi_scale_partial(std::span<const double> p, std::span<const double> v, double sigma,
                                std::size_t i, double x) {
  detail::require_same_size(p.size(), v.size());
  detail::require_closed_unit(x, "psi_scale_partial");
  if (i >= p.size()) throw std::invalid_argument("psi_scale_partial: index out of range");
  if (x == 0.0 || x == 1.0) return 0.0;
  double rest = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k != i) rest *= 1.0 - p[k] * detail::survival_in_v(sigma, v[k], x);
  }
  return -p[i] * sigma * std::pow(x, sigma) * std::log(x) * rest;
}

/// d w / d sigma = x^sigma ln x [-1 + 1/(1+lambda sigma)^2 + sigma ln x/(1+lambda sigma)],
/// nonnegative on (0,1): survival grows with the shape.
inline double w1_partial_sigma(const LLParams& params, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("w1_partial_sigma: argument must lie in (0,1), got " + std::to_string(x));
  }
  const double s = params.sigma();
  const double a = 1.0 + params.lambda() * s;
  const double lx = std::log(x);
  return std::pow(x, s) * lx * (-1.0 + 1.0 / (a * a) + s * lx / a);
}

// ---------------------------------------------------------------------------
// Theorem branches

/**
 * Each branch fixes which parameters the two systems share and which
 * majorization hypothesis separates them; all conclude X_{n:n} >=st Y_{n:n}.
 *
 *  kShockIncreasingH   common sigma and lambda; lambda, h(p), h(p*) in one cone;
 *                      h increasing; h(p) weakly submajorizes h(p*)        (T3_1i)
 *  kShockDecreasingH   as above but h decreasing, h(p), h(p*) in the cone
 *                      opposite to lambda; weak supermajorization          (T3_1ii)
 *  kScale              common sigma and p; v weakly supermajorizes v*; one
 *                      of the two sub-branches below drawn per instance    (T3_2)
 *  kScaleLambdaDecreasing  lambda, delta in D+, p in D+                    (T3_2i)
 *  kScaleLambdaIncreasing  lambda, delta in E+, p in E+                    (T3_2ii)
 *  kJointRowWeak       common sigma; h decreasing; [h(p); v] and
 *                      [h(p*); v*] in U_n; row weak majorization           (T3_3)
 *  kJointChain         as above with chain majorization                    (T3_4)
 *  kShapeShockIncreasingH  common lambda and sigma vector; sigma, h(p),
 *                      h(p*) in D+; h increasing; weak submajorization     (T3_5i)
 *  kShapeShockDecreasingH  sigma in D+; h(p), h(p*) in E+; h decreasing;
 *                      weak supermajorization                              (T3_5ii)
 */
enum class TheoremId {
  kShockIncreasingH,
  kShockDecreasingH,
  kScale,
  kScaleLambdaDecreasing,
  kScaleLambdaIncreasing,
  kJointRowWeak,
  kJointChain,
  kShapeShockIncreasingH,
  kShapeShockDecreasingH,
};

namespace detail {

struct TheoremName {
  TheoremId id;
  const char* token;
};

inline constexpr TheoremName kTheoremNames[] = {
    {TheoremId::kShockIncreasingH, "T3_1i"},      {TheoremId::kShockDecreasingH, "T3_1ii"},
    {TheoremId::kScale, "T3_2"},                  {TheoremId::kScaleLambdaDecreasing, "T3_2i"},
    {TheoremId::kScaleLambdaIncreasing, "T3_2ii"}, {TheoremId::kJointRowWeak, "T3_3"},
    {TheoremId::kJointChain, "T3_4"},             {TheoremId::kShapeShockIncreasingH, "T3_5i"},
    {TheoremId::kShapeShockDecreasingH, "T3_5ii"},
};

}  // namespace detail

inline const char* to_string(TheoremId id) {
  for (const auto& n : detail::kTheoremNames)
    if (n.id == id) return n.token;
  return "?";
}

inline TheoremId parse_theorem_id(const std::string& token) {
  for (const auto& n : detail::kTheoremNames)
    if (token == n.token) return n.id;
  throw std::invalid_argument("unknown theorem id '" + token + "'");
}

inline std::vector<std::string> theorem_tokens() {
  std::vector<std::string> out;
  for (const auto& n : detail::kTheoremNames) out.emplace_back(n.token);
  return out;
}

/// Monotonicity of h a branch requires; empty when any h works.
inline std::optional<Monotonicity> required_monotonicity(TheoremId id) {
  switch (id) {
    case TheoremId::kShockIncreasingH:
    case TheoremId::kShapeShockIncreasingH:
      return Monotonicity::kIncreasing;
    case TheoremId::kShockDecreasingH:
    case TheoremId::kJointRowWeak:
    case TheoremId::kJointChain:
    case TheoremId::kShapeShockDecreasingH:
      return Monotonicity::kDecreasing;
    default:
      return std::nullopt;
  }
}

inline void require_compatible(TheoremId id, const HFunction& h) {
  const auto need = required_monotonicity(id);
  if (need && *need != h.monotonicity()) {
    throw std::invalid_argument(std::string("theorem ") + to_string(id) + " needs an " + to_string(*need) +
                                " h, but '" + h.name() + "' is " + to_string(h.monotonicity()));
  }
}

/**
 * Two systems plus the data needed to re-check a branch's hypotheses.
 * `cone` is the cone of the index-attached parameter (lambda for the shock
 * and scale branches, sigma for the shape branches, both matrix rows for
 * the joint branches). `chain` holds the T-transforms of a chain instance.
 */
struct TheoremInstance {
  TheoremId id;
  HFunction h;
  SystemSpec sys_x;
  SystemSpec sys_y;
  Cone cone = Cone::kNone;
  std::vector<TTransform> chain;
};

namespace detail {

inline std::vector<double> sigmas(const SystemSpec& s) {
  std::vector<double> out;
  for (const auto& c : s) out.push_back(c.ll.sigma());
  return out;
}

inline std::vector<double> lambdas(const SystemSpec& s) {
  std::vector<double> out;
  for (const auto& c : s) out.push_back(c.ll.lambda());
  return out;
}

inline std::vector<double> probs(const SystemSpec& s) {
  std::vector<double> out;
  for (const auto& c : s) out.push_back(c.p);
  return out;
}

inline std::vector<double> scales(const SystemSpec& s) {
  std::vector<double> out;
  for (const auto& c : s) out.push_back(c.ll.transformed_scale());
  return out;
}

inline bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

// Cone membership allowing rounding noise of the h / v round trips.
inline bool in_cone_tol(const std::vector<double>& x, Cone c) {
  if (c == Cone::kNone) return true;
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  const double tol = 1e-12 * (1.0 + m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) return false;
    if (i > 0) {
      if (c == Cone::kDecreasing && x[i] > x[i - 1] + tol) return false;
      if (c == Cone::kIncreasing && x[i] < x[i - 1] - tol) return false;
    }
  }
  return true;
}

inline bool in_U_n_tol(const ParamMatrix& m) {
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if ((m.top[i] - m.top[j]) * (m.bottom[i] - m.bottom[j]) < -1e-12) return false;
  return true;
}

inline std::optional<std::string> check_branch(const TheoremInstance& in, TheoremId branch) {
  const SystemSpec& x = in.sys_x;
  const SystemSpec& y = in.sys_y;
  if (x.size() != y.size()) return "systems differ in size";
  if (x.size() < 2) return "need at least two components";
  const auto need = required_monotonicity(branch);
  if (need && *need != in.h.monotonicity()) return "h monotonicity does not match the branch";

  const auto sx = sigmas(x), sy = sigmas(y);
  const auto lx = lambdas(x), ly = lambdas(y);
  const auto px = probs(x), py = probs(y);
  const auto ux = in.h.apply(px), uy = in.h.apply(py);

  switch (branch) {
    case TheoremId::kShockIncreasingH:
    case TheoremId::kShockDecreasingH: {
      if (!all_equal(sx) || sx != sy) return "shape must be common to all components";
      if (lx != ly) return "scale vectors must coincide";
      if (in.cone == Cone::kNone || !in_cone_tol(lx, in.cone)) return "lambda not in the declared cone";
      const Cone uc = branch == TheoremId::kShockIncreasingH ? in.cone : opposite(in.cone);
      if (!in_cone_tol(ux, uc) || !in_cone_tol(uy, uc)) return "h(p) or h(p*) not in the required cone";
      const MajorVerdict v = branch == TheoremId::kShockIncreasingH ? weakly_submajorizes(ux, uy)
                                                                     : weakly_supermajorizes(ux, uy);
      if (!v.holds) return "h(p) and h(p*) not ordered by the required weak majorization";
      return std::nullopt;
    }
    case TheoremId::kScaleLambdaDecreasing:
    case TheoremId::kScaleLambdaIncreasing: {
      if (!all_equal(sx) || sx != sy) return "shape must be common to all components";
      if (px != py) return "shock probabilities must coincide";
      const Cone c = branch == TheoremId::kScaleLambdaDecreasing ? Cone::kDecreasing : Cone::kIncreasing;
      if (!in_cone_tol(lx, c) || !in_cone_tol(ly, c)) return "lambda or delta not in the required cone";
      const Cone uc = in.h.increasing() ? c : opposite(c);
      if (!in_cone_tol(ux, uc)) return "h(p) not in the required cone";
      if (!weakly_supermajorizes(scales(x), scales(y)).holds) return "v does not weakly supermajorize v*";
      return std::nullopt;
    }
    case TheoremId::kScale: {
      auto a = check_branch(in, TheoremId::kScaleLambdaDecreasing);
      if (!a) return std::nullopt;
      auto b = check_branch(in, TheoremId::kScaleLambdaIncreasing);
      if (!b) return std::nullopt;
      return *a;
    }
    case TheoremId::kJointRowWeak:
    case TheoremId::kJointChain: {
      if (!all_equal(sx) || sx != sy) return "shape must be common to all components";
      const ParamMatrix a(ux, scales(x));
      const ParamMatrix b(uy, scales(y));
      if (!in_U_n_tol(a) || !in_U_n_tol(b)) return "parameter matrices not in U_n";
      if (!row_weakly_majorizes(a, b).holds) return "row weak majorization fails";
      if (branch == TheoremId::kJointChain) {
        std::vector<SquareMatrix> ts;
        for (const auto& t : in.chain) ts.push_back(t.matrix());
        const ParamMatrix c = chain_majorize_apply(a, ts);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t k = 0; k < c.cols(); ++k) {
            const double ref = b.row(r)[k];
            if (std::abs(c.row(r)[k] - ref) > 1e-10 * (1.0 + std::abs(ref))) {
              return "B is not A times the recorded T-transforms";
            }
          }
        if (!row_majorizes(a, b).holds) return "chain pair fails row majorization";
      }
      return std::nullopt;
    }
    case TheoremId::kShapeShockIncreasingH:
    case TheoremId::kShapeShockDecreasingH: {
      if (!all_equal(lx) || lx != ly) return "scale must be common to all components";
      if (sx != sy) return "shape vectors must coincide";
      if (!in_cone_tol(sx, Cone::kDecreasing)) return "sigma not in D+";
      const Cone uc = branch == TheoremId::kShapeShockIncreasingH ? Cone::kDecreasing : Cone::kIncreasing;
      if (!in_cone_tol(ux, uc) || !in_cone_tol(uy, uc)) return "h(p) or h(p*) not in the required cone";
      const MajorVerdict v = branch == TheoremId::kShapeShockIncreasingH ? weakly_submajorizes(ux, uy)
                                                                          : weakly_supermajorizes(ux, uy);
      if (!v.holds) return "h(p) and h(p*) not ordered by the required weak majorization";
      return std::nullopt;
    }
  }
  return "unknown branch";
}

}  // namespace detail

/// Empty when every hypothesis of the instance's branch holds; otherwise the first failure.
inline std::optional<std::string> check_preconditions(const TheoremInstance& in) {
  return detail::check_branch(in, in.id);
}

/// Builds an instance and rejects it unless its hypotheses hold.
inline TheoremInstance make_theorem_instance(TheoremId id, const HFunction& h, SystemSpec sys_x, SystemSpec sys_y,
                                             Cone cone = Cone::kNone, std::vector<TTransform> chain = {}) {
  TheoremInstance in{id, h, std::move(sys_x), std::move(sys_y), cone, std::move(chain)};
  if (auto why = check_preconditions(in)) {
    throw std::invalid_argument(std::string("instance violates ") + to_string(id) + " hypotheses: " + *why);
  }
  return in;
}

// ---------------------------------------------------------------------------
// Instance generation

/// Parameter ranges used by the generators. Shock probabilities stay inside
/// [p_min, p_max] so that h = -ln u remains bounded.
struct GeneratorRanges {
  double p_min = 1e-6;
  double p_max = 1.0 - 1e-6;
  double sigma_min = 0.2;
  double sigma_max = 5.0;
  double lambda_min = 0.05;
  double lambda_max = 5.0;
};

namespace detail {

inline std::vector<double> uniform_vec(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform_in(rng, lo, hi);
  return v;
}

inline Cone random_cone(Rng& rng) { return uniform01(rng) < 0.5 ? Cone::kDecreasing : Cone::kIncreasing; }

inline std::vector<double> probs_from_u(const HFunction& h, const std::vector<double>& u) {
  std::vector<double> p = h.invert(u);
  for (double& v : p) v = std::clamp(v, 1e-300, 1.0);
  return p;
}

inline std::vector<double> lambdas_from_v(const std::vector<double>& v, double sigma) {
  std::vector<double> out;
  for (double x : v) out.push_back(std::max(0.0, (1.0 / x - 1.0) / sigma));
  return out;
}

inline SystemSpec build(const std::vector<double>& sigma, const std::vector<double>& lambda,
                        const std::vector<double>& p) {
  return SystemSpec::from_arrays(sigma, lambda, p);
}

}  // namespace detail

/**
 * Random instance of a branch in dimension n whose hypotheses hold by
 * construction (and are re-checked). Throws std::invalid_argument when h
 * has the wrong monotonicity for the branch or n < 2.
 */
inline TheoremInstance gen_theorem_instance(TheoremId id, std::size_t n, const HFunction& h, Rng& rng,
                                            const GeneratorRanges& r = {}) {
  using detail::uniform_in;
  using detail::uniform_vec;
  if (n < 2) throw std::invalid_argument("theorem instances need n >= 2");
  require_compatible(id, h);

  const auto [u_lo, u_hi] = h.range(r.p_min, r.p_max);
  const Bounds u_bounds{u_lo, u_hi};
  auto base_u = [&] { return h.apply(uniform_vec(rng, n, r.p_min, r.p_max)); };

  switch (id) {
    case TheoremId::kShockIncreasingH:
    case TheoremId::kShockDecreasingH: {
      const bool incr = id == TheoremId::kShockIncreasingH;
      const Cone cone = detail::random_cone(rng);
      const double sigma = uniform_in(rng, r.sigma_min, r.sigma_max);
      std::vector<double> lambda = uniform_vec(rng, n, r.lambda_min, r.lambda_max);
      sort_into(lambda, cone);
      std::vector<double> u = base_u();
      std::vector<double> u_star =
          vector_partner(incr ? PairKind::kWeakSub : PairKind::kWeakSuper, u, u_bounds, rng);
      const Cone uc = incr ? cone : opposite(cone);
      sort_into(u, uc);
      sort_into(u_star, uc);
      const std::vector<double> sig(n, sigma);
      return make_theorem_instance(id, h, detail::build(sig, lambda, detail::probs_from_u(h, u)),
                                   detail::build(sig, lambda, detail::probs_from_u(h, u_star)), cone);
    }
    case TheoremId::kScale:
      return gen_theorem_instance(
          uniform01(rng) < 0.5 ? TheoremId::kScaleLambdaDecreasing : TheoremId::kScaleLambdaIncreasing, n, h, rng, r);
    case TheoremId::kScaleLambdaDecreasing:
    case TheoremId::kScaleLambdaIncreasing: {
      const Cone cone = id == TheoremId::kScaleLambdaDecreasing ? Cone::kDecreasing : Cone::kIncreasing;
      const double sigma = uniform_in(rng, r.sigma_min, r.sigma_max);
      const Bounds v_bounds{1.0 / (1.0 + r.lambda_max * sigma), 1.0 / (1.0 + r.lambda_min * sigma)};
      std::vector<double> lambda = uniform_vec(rng, n, r.lambda_min, r.lambda_max);
      std::vector<double> v;
      for (double l : lambda) v.push_back(1.0 / (1.0 + l * sigma));
      std::vector<double> v_star = vector_partner(PairKind::kWeakSuper, v, v_bounds, rng);
      sort_into(v, opposite(cone));
      sort_into(v_star, opposite(cone));
      std::vector<double> u = base_u();
      sort_into(u, h.increasing() ? cone : opposite(cone));
      const std::vector<double> sig(n, sigma);
      const std::vector<double> p = detail::probs_from_u(h, u);
      return make_theorem_instance(id, h, detail::build(sig, detail::lambdas_from_v(v, sigma), p),
                                   detail::build(sig, detail::lambdas_from_v(v_star, sigma), p), cone);
    }
    case TheoremId::kJointRowWeak:
    case TheoremId::kJointChain: {
      const Cone cone = detail::random_cone(rng);
      const double sigma = uniform_in(rng, r.sigma_min, r.sigma_max);
      const Bounds v_bounds{1.0 / (1.0 + r.lambda_max * sigma), 1.0 / (1.0 + r.lambda_min * sigma)};
      std::vector<double> u = base_u();
      std::vector<double> v;
      for (double l : uniform_vec(rng, n, r.lambda_min, r.lambda_max)) v.push_back(1.0 / (1.0 + l * sigma));
      sort_into(u, cone);
      sort_into(v, cone);
      const ParamMatrix a(u, v);
      const MatrixPair pair = id == TheoremId::kJointChain ? chain_partner(a, rng)
                                                           : row_weak_partner(a, cone, u_bounds, v_bounds, rng);
      const std::vector<double> sig(n, sigma);
      return make_theorem_instance(
          id, h, detail::build(sig, detail::lambdas_from_v(pair.a.bottom, sigma), detail::probs_from_u(h, pair.a.top)),
          detail::build(sig, detail::lambdas_from_v(pair.b.bottom, sigma), detail::probs_from_u(h, pair.b.top)), cone,
          pair.transforms);
    }
    case TheoremId::kShapeShockIncreasingH:
    case TheoremId::kShapeShockDecreasingH: {
      const bool incr = id == TheoremId::kShapeShockIncreasingH;
      const double lambda = uniform_in(rng, r.lambda_min, r.lambda_max);
      std::vector<double> sigma = uniform_vec(rng, n, r.sigma_min, r.sigma_max);
      sort_into(sigma, Cone::kDecreasing);
      std::vector<double> u = base_u();
      std::vector<double> u_star =
          vector_partner(incr ? PairKind::kWeakSub : PairKind::kWeakSuper, u, u_bounds, rng);
      const Cone uc = incr ? Cone::kDecreasing : Cone::kIncreasing;
      sort_into(u, uc);
      sort_into(u_star, uc);
      const std::vector<double> lam(n, lambda);
      return make_theorem_instance(id, h, detail::build(sigma, lam, detail::probs_from_u(h, u)),
                                   detail::build(sigma, lam, detail::probs_from_u(h, u_star)), Cone::kDecreasing);
    }
  }
  throw std::invalid_argument("unknown theorem id");
}

// ---------------------------------------------------------------------------
// Randomized verification

struct VerifyOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  std::size_t instances = 1000;
  double tol = kDefaultOrderTol;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

struct Violation {
  std::size_t index;
  TheoremInstance instance;
  OrderVerdict verdict;
};

struct VerifyReport {
  TheoremId id;
  std::string h_name;
  std::size_t instances_run = 0;
  std::vector<Violation> violations;
  bool pass = false;
};

/**
 * Generates `instances` instances (dimension cycling through
 * [n_min, n_max], seed of instance k = child_seed(seed, k)) and runs
 * compare_st on each. An instance violates the branch unless its verdict is
 * FirstDominates or Equal. Output is independent of `jobs`.
 */
inline VerifyReport verify_theorem(TheoremId id, const HFunction& h, const Grid& grid, const VerifyOptions& opt = {}) {
  if (opt.instances == 0) throw std::invalid_argument("verify needs at least one instance");
  if (opt.n_min < 2 || opt.n_max < opt.n_min) throw std::invalid_argument("dimension range must satisfy 2 <= min <= max");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  require_compatible(id, h);

  const std::size_t span = opt.n_max - opt.n_min + 1;
  std::vector<std::optional<Violation>> slots(opt.instances);
  auto run = [&](std::size_t k) {
    Rng rng(child_seed(opt.seed, k));
    TheoremInstance in = gen_theorem_instance(id, opt.n_min + k % span, h, rng);
    OrderVerdict v = compare_st(in.sys_x, in.sys_y, grid, opt.tol);
    if (!v.first_at_least()) slots[k] = Violation{k, std::move(in), v};
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(opt.instances)));
  if (jobs == 1) {
    for (std::size_t k = 0; k < opt.instances; ++k) run(k);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t k = t; k < opt.instances; k += jobs) run(k);
      });
    }
  }

  VerifyReport report{id, h.name(), opt.instances, {}, false};
  for (auto& s : slots)
    if (s) report.violations.push_back(std::move(*s));
  report.pass = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Worked examples with fixed parameters

/**
 * kMatrixDominance: sigma = 0.5, v = (0.4,0.4,0.1), v* = (0.5,0.4,0.2),
 *   h(p) = (2,2,1), h(p*) = (3,2,1), h = -ln u. X dominates Y.        (CE3_1)
 * kShapeCrossingA: lambda = 0.5, sigma = (3,2,1), sigma* = (2,2,2),
 *   h(p) = (1,2,3) for both systems. No ordering.                     (CE3_2a)
 * kShapeCrossingB: lambda = 0.5, sigma = (3,2,1), sigma* = (2.6,2.4,1),
 *   h(p) = (0.03,0.02,0.01) for both systems. No ordering.            (CE3_2b)
 */
enum class ExampleId { kMatrixDominance, kShapeCrossingA, kShapeCrossingB };

inline const char* to_string(ExampleId id) {
  switch (id) {
    case ExampleId::kMatrixDominance: return "CE3_1";
    case ExampleId::kShapeCrossingA: return "CE3_2a";
    default: return "CE3_2b";
  }
}

inline ExampleId parse_example_id(const std::string& token) {
  if (token == "CE3_1") return ExampleId::kMatrixDominance;
  if (token == "CE3_2a") return ExampleId::kShapeCrossingA;
  if (token == "CE3_2b") return ExampleId::kShapeCrossingB;
  throw std::invalid_argument("unknown counterexample id '" + token + "' (expected CE3_1, CE3_2a or CE3_2b)");
}

struct ExampleSystems {
  SystemSpec x;
  SystemSpec y;
  bool survival_difference;  // table reports Fbar_X - Fbar_Y instead of F_X - F_Y
};

inline ExampleSystems example_systems(ExampleId id) {
  const HFunction h = builtin_h("neg_log");
  switch (id) {
    case ExampleId::kMatrixDominance: {
      const double sigma = 0.5;
      const std::vector<double> sig(3, sigma);
      return {detail::build(sig, detail::lambdas_from_v({0.4, 0.4, 0.1}, sigma), h.invert({2.0, 2.0, 1.0})),
              detail::build(sig, detail::lambdas_from_v({0.5, 0.4, 0.2}, sigma), h.invert({3.0, 2.0, 1.0})), false};
    }
    case ExampleId::kShapeCrossingA: {
      const std::vector<double> lam(3, 0.5);
      const auto p = h.invert({1.0, 2.0, 3.0});
      return {detail::build({3.0, 2.0, 1.0}, lam, p), detail::build({2.0, 2.0, 2.0}, lam, p), true};
    }
    case ExampleId::kShapeCrossingB: {
      const std::vector<double> lam(3, 0.5);
      const auto p = h.invert({0.03, 0.02, 0.01});
      return {detail::build({3.0, 2.0, 1.0}, lam, p), detail::build({2.6, 2.4, 1.0}, lam, p), true};
    }
  }
  throw std::invalid_argument("unknown counterexample id");
}

/// Plot data of a worked example: F_X - F_Y, or the survival difference for
/// the shape examples.
inline std::vector<DiffPoint> counterexample(ExampleId id, const Grid& grid) {
  const ExampleSystems ex = example_systems(id);
  std::vector<DiffPoint> table = cdf_difference(ex.x, ex.y, grid);
  if (ex.survival_difference)
    for (auto& pt : table) pt.diff = -pt.diff;
  return table;
}

}  // namespace llshock
