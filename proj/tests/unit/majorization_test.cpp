#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "llshock/majorization.hpp"

using namespace llshock;

namespace {

// Independent re-check of a partial-sum inequality named by a witness.
bool prefix_violated(RealVec x, RealVec y, std::size_t j) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double sx = std::accumulate(x.begin(), x.begin() + j, 0.0);
  const double sy = std::accumulate(y.begin(), y.begin() + j, 0.0);
  return sx > sy;
}

}  // namespace

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes(RealVec{3, 1, 1}, RealVec{5.0 / 3, 5.0 / 3, 5.0 / 3}).holds);
  EXPECT_TRUE(majorizes(RealVec{4, 2, 7}, RealVec{4, 2, 7}).holds);
  const MajorVerdict v = majorizes(RealVec{2, 1}, RealVec{3, 1});
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
}

TEST(Majorizes, Errors) {
  EXPECT_THROW(majorizes(RealVec{1, 2}, RealVec{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(weakly_supermajorizes(RealVec{}, RealVec{}), std::invalid_argument);
  EXPECT_THROW(weakly_submajorizes(RealVec{1}, RealVec{1, 2}), std::invalid_argument);
}

TEST(WeakSuper, Examples) {
  EXPECT_TRUE(weakly_supermajorizes(RealVec{2, 2, 1}, RealVec{3, 2, 1}).holds);
  const MajorVerdict v = weakly_supermajorizes(RealVec{1, 1}, RealVec{0.5, 0.5});
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(prefix_violated({1, 1}, {0.5, 0.5}, *v.witness));
}

TEST(WeakSub, Examples) {
  EXPECT_TRUE(weakly_submajorizes(RealVec{3, 1}, RealVec{2, 1}).holds);
  EXPECT_TRUE(weakly_submajorizes(RealVec{0.3, 9}, RealVec{0.3, 9}).holds);
  EXPECT_FALSE(weakly_submajorizes(RealVec{1, 1, 1}, RealVec{2, 1, 1}).holds);
}

TEST(Majorizes, PermutationInvariant) {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    auto [x, y] = gen_vector_pair(PairKind::kMajorize, 5, Cone::kNone, rng);
    std::shuffle(x.begin(), x.end(), rng);
    std::shuffle(y.begin(), y.end(), rng);
    EXPECT_TRUE(majorizes(x, y).holds);
  }
}

TEST(Majorizes, WitnessIsGenuine) {
  Rng rng(2);
  int seen = 0;
  for (int k = 0; k < 500; ++k) {
    RealVec x(4), y(4);
    for (auto& v : x) v = uniform01(rng);
    for (auto& v : y) v = uniform01(rng);
    const MajorVerdict w = weakly_supermajorizes(x, y);
    if (!w.holds) {
      ++seen;
      ASSERT_TRUE(w.witness);
      EXPECT_TRUE(prefix_violated(x, y, *w.witness));
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(DoublyStochastic, Examples) {
  EXPECT_TRUE(is_doubly_stochastic(SquareMatrix::identity(4)));
  EXPECT_TRUE(is_doubly_stochastic(SquareMatrix(3, {0, 1, 0, 0, 0, 1, 1, 0, 0})));
  EXPECT_FALSE(is_doubly_stochastic(SquareMatrix(2, {0.5, 0.4, 0.5, 0.6})));
  EXPECT_FALSE(is_doubly_stochastic(SquareMatrix(2, {1.5, -0.5, -0.5, 1.5})));
}

TEST(TTransform, Examples) {
  const SquareMatrix id = t_transform(3, 0, 2, 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id(i, j), i == j ? 1.0 : 0.0);
  const SquareMatrix swap = t_transform(3, 0, 2, 0.0);
  EXPECT_EQ(swap(0, 2), 1.0);
  EXPECT_EQ(swap(1, 1), 1.0);
  const RealVec y = RealVec{4, 2} * t_transform(2, 0, 1, 0.5);
  EXPECT_EQ(y, (RealVec{3, 3}));
  EXPECT_THROW(t_transform(3, 1, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(t_transform(3, 0, 3, 0.5), std::invalid_argument);
  EXPECT_THROW(t_transform(3, 0, 1, 1.5), std::invalid_argument);
}

TEST(TTransform, ProductsStayDoublyStochastic) {
  Rng rng(3);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + k % 6;
    SquareMatrix m = SquareMatrix::identity(n);
    for (int t = 0; t < 12; ++t) {
      const std::size_t i = detail::uniform_index(rng, n);
      std::size_t j = detail::uniform_index(rng, n - 1);
      if (j >= i) ++j;
      m = m * t_transform(n, i, j, uniform01(rng));
    }
    EXPECT_TRUE(is_doubly_stochastic(m));
  }
}

TEST(ChainApply, Examples) {
  const ParamMatrix a({2, 1}, {0.4, 0.2});
  const ParamMatrix same = chain_majorize_apply(a, {});
  EXPECT_EQ(same.top, a.top);
  EXPECT_EQ(same.bottom, a.bottom);
  const ParamMatrix swapped = chain_majorize_apply(a, {t_transform(2, 0, 1, 0.0)});
  EXPECT_EQ(swapped.top, (RealVec{1, 2}));
  const ParamMatrix b = chain_majorize_apply(a, {t_transform(2, 0, 1, 0.5)});
  EXPECT_DOUBLE_EQ(b.top[0], 1.5);
  EXPECT_DOUBLE_EQ(b.top[1], 1.5);
  EXPECT_NEAR(b.bottom[0], 0.3, 1e-15);
  EXPECT_NEAR(b.bottom[1], 0.3, 1e-15);
  EXPECT_THROW(chain_majorize_apply(a, {t_transform(3, 0, 1, 0.5)}), std::invalid_argument);
}

TEST(RowRelations, Examples) {
  const ParamMatrix a({2, 2, 1}, {0.4, 0.4, 0.1});
  const ParamMatrix b({3, 2, 1}, {0.5, 0.4, 0.2});
  EXPECT_TRUE(row_majorizes(a, a).holds);
  EXPECT_TRUE(row_weakly_majorizes(a, a).holds);
  EXPECT_TRUE(row_weakly_majorizes(a, b).holds);
  const MajorVerdict back = row_weakly_majorizes(b, a);
  EXPECT_FALSE(back.holds);
  EXPECT_TRUE(back.row.has_value());
  EXPECT_THROW(row_majorizes(a, ParamMatrix({1, 2}, {1, 2})), std::invalid_argument);
}

TEST(Cones, UnAndMembership) {
  EXPECT_TRUE(in_U_n(ParamMatrix({1, 2, 3}, {4, 5, 6})));
  EXPECT_TRUE(in_U_n(ParamMatrix({2, 2, 1}, {0.4, 0.4, 0.1})));
  EXPECT_FALSE(in_U_n(ParamMatrix({1, 2}, {2, 1})));
  EXPECT_TRUE(in_V_n(ParamMatrix({1, 2}, {2, 1})));
  EXPECT_TRUE(in_cone(RealVec{3, 2, 2}, Cone::kDecreasing));
  EXPECT_FALSE(in_cone(RealVec{3, 2, 2}, Cone::kIncreasing));
  EXPECT_FALSE(in_cone(RealVec{0, 1}, Cone::kIncreasing));
  EXPECT_EQ(opposite(Cone::kDecreasing), Cone::kIncreasing);
}

TEST(Generators, VectorPairsSatisfyRelationAndCone) {
  Rng rng(4);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + k % 7;
    const Cone c = k % 3 == 0 ? Cone::kDecreasing : k % 3 == 1 ? Cone::kIncreasing : Cone::kNone;
    auto [x, y] = gen_vector_pair(PairKind::kMajorize, n, c, rng);
    EXPECT_TRUE(majorizes(x, y).holds);
    EXPECT_TRUE(weakly_supermajorizes(x, y).holds);
    EXPECT_TRUE(weakly_submajorizes(x, y).holds);
    if (c != Cone::kNone) {
      EXPECT_TRUE(in_cone(x, c));
      EXPECT_TRUE(in_cone(y, c));
    }
    auto [xs, ys] = gen_vector_pair(PairKind::kWeakSuper, n, c, rng);
    EXPECT_TRUE(weakly_supermajorizes(xs, ys).holds);
    auto [xb, yb] = gen_vector_pair(PairKind::kWeakSub, n, c, rng);
    EXPECT_TRUE(weakly_submajorizes(xb, yb).holds);
  }
}

TEST(Generators, MatrixPairs) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + k % 5;
    const Cone c = k % 3 == 0 ? Cone::kDecreasing : k % 3 == 1 ? Cone::kIncreasing : Cone::kNone;
    const MatrixPair chain = gen_matrix_pair(PairKind::kChain, n, c, rng);
    EXPECT_TRUE(row_majorizes(chain.a, chain.b).holds);
    EXPECT_TRUE(row_weakly_majorizes(chain.a, chain.b).holds);
    EXPECT_TRUE(in_U_n(chain.a));
    EXPECT_TRUE(in_U_n(chain.b));
    std::vector<SquareMatrix> ts;
    for (const auto& t : chain.transforms) ts.push_back(t.matrix());
    const ParamMatrix again = chain_majorize_apply(chain.a, ts);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(again.top[j], chain.b.top[j], 1e-12);
      EXPECT_NEAR(again.bottom[j], chain.b.bottom[j], 1e-12);
    }
    const MatrixPair weak = gen_matrix_pair(PairKind::kRowWeak, n, c, rng);
    EXPECT_TRUE(row_weakly_majorizes(weak.a, weak.b).holds);
    EXPECT_TRUE(in_U_n(weak.b));
  }
  EXPECT_THROW(gen_matrix_pair(PairKind::kMajorize, 3, Cone::kNone, rng), std::invalid_argument);
}
