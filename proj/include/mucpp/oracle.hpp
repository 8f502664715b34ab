// Ground-truth optimum for desk-scale instances.
//
// Depth-first branch and bound over q vertex-disjoint connected paths
// covering all cells, minimizing the maximum path time. Paths are built
// one UAV at a time; the active path either extends to a free neighbor or
// stops, handing off to the next UAV. Start cells are forced into
// ascending index order, which removes the q! relabelings without
// excluding any objective value.
//
// Pruning:
//  - node bound max(finished times, active time, fresh-path bound of the
//    pigeonhole load ceil(remaining/available)) against the incumbent;
//  - the last path must finish the remainder alone, bounded from its
//    current column;
//  - free-region components out of the active head's reach each need an
//    unstarted UAV.
#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/lower_bound.hpp"
#include "mucpp/nopp.hpp"
#include "mucpp/plan.hpp"
#include "mucpp/validate.hpp"

namespace mucpp::oracle {

struct Options {
  int cell_cap = 30;           // refuse instances with more cells
  double time_limit_s = 60.0;  // wall-clock budget for certification
};

struct Result {
  double optimum = 0.0;
  bool certified = false;
  long long nodes = 0;
};

namespace detail {

struct Searcher {
  int n = 1, m = 1, q = 1, total = 1;
  double ts = 0, tp = 0, to = 0;
  std::vector<std::array<int, 4>> nbr;  // neighbor index or -1, order S,O,U,D
  std::vector<uint8_t> covered;
  std::vector<int> path_start;        // start index of each started path
  std::vector<double> finished_time;  // times of stopped paths
  double incumbent = std::numeric_limits<double>::infinity();
  long long nodes = 0;
  bool timed_out = false;
  std::chrono::steady_clock::time_point deadline;
  static constexpr double kEps = 1e-9;

  int idx(int x, int y) const { return (y - 1) * n + (x - 1); }

  double lb_fresh(long long cells) const {
    if (cells <= 1) return 0.0;
    if (cells <= n) return static_cast<double>(cells - 1) * ts;
    return static_cast<double>(n - 1) * ts +
           static_cast<double>(cells - n) * tp;
  }

  // Cheapest extension by `extra` cells from column px: straight moves
  // until the right edge, crosswind after.
  double extend_lb(long long extra, int px) const {
    long long s_room = n - px;
    if (extra <= s_room) return static_cast<double>(extra) * ts;
    return static_cast<double>(s_room) * ts +
           static_cast<double>(extra - s_room) * tp;
  }

  bool time_up() {
    if ((nodes & 0x3fff) == 0 && std::chrono::steady_clock::now() > deadline)
      timed_out = true;
    return timed_out;
  }

  // Number of free-region components minus the one the active head can
  // still enter. Each of the others needs its own unstarted path.
  int stranded_components(int head) const {
    std::vector<int> comp(static_cast<size_t>(total), -1);
    int comps = 0;
    std::vector<int> stack;
    for (int c = 0; c < total; ++c) {
      if (covered[static_cast<size_t>(c)] || comp[static_cast<size_t>(c)] >= 0)
        continue;
      stack.push_back(c);
      comp[static_cast<size_t>(c)] = comps;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : nbr[static_cast<size_t>(u)])
          if (v >= 0 && !covered[static_cast<size_t>(v)] &&
              comp[static_cast<size_t>(v)] < 0) {
            comp[static_cast<size_t>(v)] = comps;
            stack.push_back(v);
          }
      }
      ++comps;
    }
    for (int v : nbr[static_cast<size_t>(head)])
      if (v >= 0 && !covered[static_cast<size_t>(v)]) return comps - 1;
    return comps;
  }

  void search(int head, double active_time, int uncovered) {
    ++nodes;
    if (time_up()) return;

    double bound = active_time;
    for (double f : finished_time) bound = std::max(bound, f);

    if (uncovered == 0) {
      // Complete cover; any UAV still on the ground flies nothing.
      incumbent = std::min(incumbent, bound);
      return;
    }

    const int started = static_cast<int>(path_start.size());
    const int avail = q - started + 1;  // active path plus unstarted ones
    long long big = mucpp::detail::ceil_div(uncovered, avail);
    bound = std::max(bound, lb_fresh(big));
    if (started == q)  // last path has to finish everything itself
      bound = std::max(bound,
                       active_time + extend_lb(uncovered, head % n + 1));
    if (bound >= incumbent - kEps) return;

    if (stranded_components(head) > q - started) return;

    for (int v : nbr[static_cast<size_t>(head)]) {
      if (v < 0 || covered[static_cast<size_t>(v)]) continue;
      double dt;
      if (v / n != head / n) dt = tp;          // row changed: crosswind
      else dt = (v > head) ? ts : to;          // same row: with/against wind
      covered[static_cast<size_t>(v)] = 1;
      search(v, active_time + dt, uncovered - 1);
      covered[static_cast<size_t>(v)] = 0;
      if (timed_out) return;
    }

    if (started < q) {
      finished_time.push_back(active_time);
      for (int c = path_start.back() + 1; c < total; ++c) {
        if (covered[static_cast<size_t>(c)]) continue;
        path_start.push_back(c);
        covered[static_cast<size_t>(c)] = 1;
        search(c, 0.0, uncovered - 1);
        covered[static_cast<size_t>(c)] = 0;
        path_start.pop_back();
        if (timed_out) break;
      }
      finished_time.pop_back();
    }
  }
};

}  // namespace detail

/// Minimum operation time over q disjoint connected paths covering the
/// whole grid. certified=true means the search space was exhausted within
/// the time limit; on timeout the best incumbent comes back uncertified.
inline Result exact_solve(const GridSpec& g, const MoveTimes& t,
                          Options opt = {}) {
  g.validate();
  if (g.cell_count() > opt.cell_cap)
    throw std::domain_error("exact_solve: instance above the cell cap (" +
                            std::to_string(opt.cell_cap) + " cells)");
  // the pruning bounds lean on the cost ordering; junk times would make
  // the search silently unsound rather than slow
  if (!(t.ts > 0 && t.ts <= t.tp && t.tp <= t.to))
    throw std::domain_error("exact_solve: needs 0 < Ts <= Tp <= To");

  detail::Searcher s;
  s.n = g.n;
  s.m = g.m;
  s.q = g.q;
  s.total = static_cast<int>(g.cell_count());
  s.ts = t.ts;
  s.tp = t.tp;
  s.to = t.to;
  s.covered.assign(static_cast<size_t>(s.total), 0);
  s.nbr.resize(static_cast<size_t>(s.total));
  for (int y = 1; y <= g.m; ++y)
    for (int x = 1; x <= g.n; ++x) {
      auto& a = s.nbr[static_cast<size_t>(s.idx(x, y))];
      a[0] = x < g.n ? s.idx(x + 1, y) : -1;
      a[1] = x > 1 ? s.idx(x - 1, y) : -1;
      a[2] = y < g.m ? s.idx(x, y + 1) : -1;
      a[3] = y > 1 ? s.idx(x, y - 1) : -1;
    }
  s.deadline = std::chrono::steady_clock::now() +
               std::chrono::microseconds(
                   static_cast<long long>(opt.time_limit_s * 1e6));

  // Seed the incumbent with the constructive planner's makespan, but only
  // after validating that plan independently; a rejected seed just means
  // the search starts from infinity.
  try {
    Plan seed = nopp::plan(g, t);
    if (validate_plan(seed, g).empty()) {
      double z = 0.0;
      for (const UavPath& p : seed.paths) z = std::max(z, mission_time(p, t));
      s.incumbent = z;
    }
  } catch (const std::exception&) {
  }

  for (int c = 0; c < s.total; ++c) {
    s.path_start.push_back(c);
    s.covered[static_cast<size_t>(c)] = 1;
    s.search(c, 0.0, s.total - 1);
    s.covered[static_cast<size_t>(c)] = 0;
    s.path_start.pop_back();
    if (s.timed_out) break;
  }

  return {s.incumbent, !s.timed_out, s.nodes};
}

}  // namespace mucpp::oracle
