// Compare two 3-component parallel systems of shocked LL lifetimes and print
// the verdict plus a coarse table of F_X - F_Y.

#include <cstdio>

#include "llshock/llshock.hpp"

int main() {
  using namespace llshock;

  // Common shape; X has the more spread-out shock probabilities.
  const SystemSpec x = SystemSpec::from_arrays({0.5, 0.5, 0.5}, {3.0, 3.0, 18.0}, {0.135, 0.135, 0.368});
  const SystemSpec y = SystemSpec::from_arrays({0.5, 0.5, 0.5}, {2.0, 3.0, 8.0}, {0.050, 0.135, 0.368});

  const OrderVerdict v = compare_st(x, y, make_grid());
  std::printf("verdict: %s (max gap %+.3e, min gap %+.3e)\n", to_string(v.outcome), v.max_positive_gap,
              v.max_negative_gap);

  for (const auto& pt : cdf_difference(x, y, make_grid(9))) {
    if (pt.x == 0.0 || pt.x == 1.0 || (pt.x > 0.05 && pt.x < 0.95)) std::printf("  x=%.2f  diff=%+.5f\n", pt.x, pt.diff);
  }

  // The same check from coupled Monte Carlo draws.
  const OrderVerdict mc = compare_st_mc(x, y, 200000, kDefaultSeed);
  std::printf("monte carlo: %s\n", to_string(mc.outcome));
}
