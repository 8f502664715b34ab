// Exact lower bounds on mission and operation time, and fleet sizing
// against a time budget.
//
// Any path of d cells spends at least (d-1)*Ts when d <= n; past that the
// x-extent caps useful with-wind moves at n-1, so the cheapest mix is
// n-1 straight moves plus d-n crosswind ones. Splitting n*m cells over q
// UAVs leaves some UAV with at least ceil(nm/q) cells, which yields the
// operation-time bound
//
//   LB(n, m, q) = (n-1)*Ts + (ceil(nm/q) - n)*Tp.
#pragma once

#include <cmath>
#include <stdexcept>

#include "mucpp/timing.hpp"

namespace mucpp {

namespace detail {
inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }
}

/// Minimum time of any d-cell path in an n-column frame.
inline double path_time_lb(long long d, int n, const MoveTimes& t) {
  if (d < 1) throw std::domain_error("path_time_lb: d must be >= 1");
  if (n < 1) throw std::domain_error("path_time_lb: n must be >= 1");
  if (d <= n) return static_cast<double>(d - 1) * t.ts;
  return static_cast<double>(n - 1) * t.ts + static_cast<double>(d - n) * t.tp;
}

/// Minimum operation time for q UAVs covering an n x m grid. Requires
/// q <= m. The ceil(nm/q) term is exact integer arithmetic.
inline double operation_lb(int n, int m, int q, const MoveTimes& t) {
  if (n < 1 || m < 1) throw std::domain_error("operation_lb: grid must be >= 1x1");
  if (q < 1) throw std::domain_error("operation_lb: q must be >= 1");
  if (q > m) throw std::domain_error("operation_lb: requires q <= m");
  long long load = detail::ceil_div(static_cast<long long>(n) * m, q);
  return path_time_lb(load, n, t);
}

struct MixOptimum {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
  double objective = 0.0;
};

/// Minimizer of a*x1 + b*x2 + k*x3 over x >= 0 with x1 + x2 + x3 = h and
/// x1 - x3 <= cap. Under a <= b <= k, a + k >= 2b and h >= cap the optimum
/// is (cap, h-cap, 0): spend the capped cheap moves first, the middle cost
/// for the rest, none of the expensive ones.
inline MixOptimum min_cost_mix(double a, double b, double k, double h,
                               double cap) {
  if (a < 0 || b < 0 || k < 0 || h < 0 || cap < 0)
    throw std::domain_error("min_cost_mix: arguments must be non-negative");
  if (!(a <= b && b <= k)) throw std::domain_error("min_cost_mix: needs a <= b <= k");
  if (a + k < 2 * b) throw std::domain_error("min_cost_mix: needs a + k >= 2b");
  if (h < cap) throw std::domain_error("min_cost_mix: needs h >= cap");
  return {cap, h - cap, 0.0, a * cap + b * (h - cap)};
}

/// Smallest fleet size q in [1, m] whose operation lower bound fits the
/// budget. An estimate from the bound side: the constructive planner may
/// still need one extra Tp. Throws std::domain_error when even q = m
/// cannot fit (budget below the (n-1)*Ts floor).
inline int min_uavs_for_budget(int n, int m, double budget,
                               const MoveTimes& t) {
  if (n < 1 || m < 1) throw std::domain_error("min_uavs_for_budget: grid must be >= 1x1");
  const double eps = 1e-9;
  if (budget + eps < static_cast<double>(n - 1) * t.ts)
    throw std::domain_error(
        "min_uavs_for_budget: budget below the (n-1)*Ts floor; infeasible "
        "for any fleet size");
  for (int q = 1; q <= m; ++q)
    if (operation_lb(n, m, q, t) <= budget + eps) return q;
  throw std::domain_error("min_uavs_for_budget: no q <= m meets the budget");
}

}  // namespace mucpp
