#include <catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "mucpp/lower_bound.hpp"
#include "mucpp/nopp.hpp"
#include "mucpp/oracle.hpp"

using namespace mucpp;
using Catch::Matchers::WithinAbs;

namespace {
const MoveTimes kRef{4.0, 5.16, 6.66, std::nullopt, std::nullopt};

// Dead-simple enumerator, independent of the branch-and-bound: try every
// permutation of the cells and every way to cut it into at most q
// consecutive runs; a candidate counts when every run is a chain of
// orthogonal steps. Only usable for tiny grids.
double enumerate_optimum(int n, int m, int q, const MoveTimes& t) {
  const int total = n * m;
  std::vector<CellCoord> cells;
  for (int y = 1; y <= m; ++y)
    for (int x = 1; x <= n; ++x) cells.push_back({x, y});
  std::vector<int> idx(static_cast<size_t>(total));
  std::iota(idx.begin(), idx.end(), 0);

  auto step_cost = [&](CellCoord a, CellCoord b) -> double {
    if (a.y == b.y && b.x == a.x + 1) return t.ts;
    if (a.y == b.y && b.x == a.x - 1) return t.to;
    if (a.x == b.x && std::abs(a.y - b.y) == 1) return t.tp;
    return -1.0;  // not a move
  };

  // cut points encoded as bitmasks over the total-1 gaps; at most q runs
  std::vector<int> masks;
  for (int mask = 0; mask < (1 << (total - 1)); ++mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) + 1 <= q)
      masks.push_back(mask);

  double best = std::numeric_limits<double>::infinity();
  do {
    for (int mask : masks) {
      double worst = 0.0, cur = 0.0;
      bool feasible = true;
      for (int i = 0; i < total - 1 && feasible; ++i) {
        if (mask & (1 << i)) {  // one path ends after position i
          worst = std::max(worst, cur);
          cur = 0.0;
        } else {
          double c = step_cost(cells[static_cast<size_t>(idx[i])],
                               cells[static_cast<size_t>(idx[i + 1])]);
          if (c < 0) feasible = false;
          else cur += c;
        }
      }
      if (!feasible) continue;
      best = std::min(best, std::max(worst, cur));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}
}  // namespace

TEST_CASE("exact_solve: 2x2 single UAV equals the hand enumeration") {
  // Hamiltonian walks on 2x2 cost either Ts + 2*Tp (around three sides
  // crosswind-heavy) or mixes including an O move, which cost more.
  auto res = oracle::exact_solve(GridSpec{2, 2, 1}, kRef);
  CHECK(res.certified);
  CHECK_THAT(res.optimum, WithinAbs(kRef.ts + 2 * kRef.tp, 1e-9));
}

TEST_CASE("exact_solve: reference four-by-four two-UAV optimum") {
  auto res = oracle::exact_solve(GridSpec{4, 4, 2}, kRef);
  CHECK(res.certified);
  CHECK_THAT(res.optimum, WithinAbs(32.64, 1e-9));
}

TEST_CASE("exact_solve: 5x4 optimum sits below the constructive plan") {
  auto res = oracle::exact_solve(GridSpec{5, 4, 2}, kRef);
  REQUIRE(res.certified);
  CHECK_THAT(res.optimum, WithinAbs(41.80, 1e-9));
  Plan pl = nopp::plan(GridSpec{5, 4, 2}, kRef);
  CHECK_THAT(pl.operation_time, WithinAbs(46.96, 1e-9));
  CHECK(pl.operation_time >= res.optimum - 1e-9);
  CHECK(pl.operation_time - res.optimum <= kRef.tp + 1e-9);
}

TEST_CASE("exact_solve: cap, cost-order precondition, determinism") {
  CHECK_THROWS_AS(oracle::exact_solve(GridSpec{50, 50, 2}, kRef),
                  std::domain_error);
  CHECK_THROWS_AS(
      oracle::exact_solve(GridSpec{3, 3, 1},
                          MoveTimes{5.16, 4.0, 6.66, std::nullopt, std::nullopt}),
      std::domain_error);
  auto a = oracle::exact_solve(GridSpec{4, 4, 2}, kRef);
  auto b = oracle::exact_solve(GridSpec{4, 4, 2}, kRef);
  CHECK(a.optimum == b.optimum);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("exact_solve: never below the closed-form bound, squeezed by NOPP") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; m <= 4; ++m)
      for (int q = 1; q <= std::min(n, m); ++q) {
        GridSpec g{n, m, q};
        CAPTURE(n, m, q);
        auto res = oracle::exact_solve(g, kRef);
        REQUIRE(res.certified);
        const double lb = operation_lb(n, m, q, kRef);
        REQUIRE(res.optimum >= lb - 1e-9);
        Plan pl = nopp::plan(g, kRef);
        REQUIRE(pl.operation_time >= res.optimum - 1e-9);
        REQUIRE(pl.operation_time - res.optimum <= kRef.tp + 1e-9);
      }
}

TEST_CASE("exact_solve agrees with full enumeration on tiny grids") {
  struct Tiny { int n, m, q; };
  for (auto [n, m, q] : {Tiny{2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {4, 2, 1},
                         {3, 3, 1}, {2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
    CAPTURE(n, m, q);
    auto res = oracle::exact_solve(GridSpec{n, m, q}, kRef);
    REQUIRE(res.certified);
    REQUIRE_THAT(res.optimum,
                 WithinAbs(enumerate_optimum(n, m, q, kRef), 1e-9));
  }
}

TEST_CASE("exact_solve: timeout reports an uncertified incumbent") {
  auto res = oracle::exact_solve(GridSpec{5, 5, 2}, kRef, {30, 0.0});
  CHECK_FALSE(res.certified);
  // the seed plan is still a valid upper bound
  CHECK(res.optimum >= operation_lb(5, 5, 2, kRef) - 1e-9);
}
