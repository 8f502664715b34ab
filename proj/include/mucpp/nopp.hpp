// NOPP: near-optimal path planning for q identical UAVs on an n x m grid.
//
// UAVs are planned one at a time, each through four phases:
//
//   phase 1  greedy walk from the starting row: drop (D) while crosswind
//            budget remains, sweep with the wind (S), climb (U) only while
//            the climb count trails the drop count. Never rises above its
//            own starting row.
//   phase 2  if the trailing climb has awkward parity (odd H-value), undo
//            it and refund the cells and budget.
//   phase 3  spend the remaining crosswind budget two moves at a time by
//            turning a straight step into an up-over-down detour, which
//            grows two-cell-wide towers along the path.
//   phase 4  (last UAV only) append upward steps to sweep whatever is
//            left above the path's end.
//
// Every produced plan covers each cell exactly once using only S, U, D
// moves, and its operation time lands on {LB, LB + Tp}.
#pragma once

#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/lower_bound.hpp"
#include "mucpp/plan.hpp"
#include "mucpp/validate.hpp"

namespace mucpp::nopp {

// Per-UAV planning state. `free` is the shared set of still-uncovered
// cells; it travels from one UAV's state to the next.
struct PlannerState {
  CellSet free;
  long long assigned = 0;       // cell budget A = ceil(nm/q)
  long long np = 0;             // remaining crosswind (P) moves
  long long nu = 0, nd = 0;     // climbs and drops taken so far
  CellCoord start{1, 1};        // this UAV's starting cell
  bool odd_initial_np = false;  // parity of the initial np
};

/// State for UAV `uav` (1-based): budget ceil(nm/q), crosswind allowance
/// ceil(nm/q)-n, start (1, m-q+uav). `free` is the incoming uncovered set
/// (full grid for UAV 1).
inline PlannerState initial_settings(const GridSpec& g, int uav,
                                     CellSet free) {
  g.validate();
  if (uav < 1 || uav > g.q)
    throw std::domain_error("initial_settings: uav index out of range");
  PlannerState st;
  st.assigned = mucpp::detail::ceil_div(g.cell_count(), g.q);
  st.np = st.assigned - g.n;
  st.odd_initial_np = (st.np % 2) != 0;
  st.start = {1, g.m - g.q + uav};
  st.free = std::move(free);
  return st;
}

/// Greedy walk. Each iteration takes the first feasible of D, S, U; the
/// loop ends when nothing fires (no later iteration could differ) or the
/// cell budget is spent.
inline UavPath phase_one(PlannerState& st) {
  UavPath p;
  CellCoord c = st.start;
  const int top = st.start.y;
  p.cells.push_back(c);
  st.free.erase(c);
  for (long long it = 0; it < st.assigned; ++it) {
    CellCoord down{c.x, c.y - 1}, along{c.x + 1, c.y}, up{c.x, c.y + 1};
    if (st.free.contains(down) && st.np > 0) {
      c = down;
      p.moves.push_back(MoveLabel::D);
      --st.np, ++st.nd;
    } else if (st.free.contains(along)) {
      c = along;
      p.moves.push_back(MoveLabel::S);
    } else if (st.free.contains(up) && st.np > 0 && st.nu < st.nd &&
               up.y <= top) {
      // An odd initial budget keeps the climb one short of the drops.
      if (st.odd_initial_np && !(st.nu < st.nd - 1)) break;
      c = up;
      p.moves.push_back(MoveLabel::U);
      --st.np, ++st.nu;
    } else {
      break;
    }
    p.cells.push_back(c);
    st.free.erase(c);
  }
  return p;
}

namespace detail {
inline size_t trailing_run(const std::vector<MoveLabel>& mv, MoveLabel what,
                           size_t end) {
  size_t run = 0;
  while (run < end && mv[end - 1 - run] == what) ++run;
  return run;
}
}  // namespace detail

/// Parity statistic of the path tail: with a trailing climb U* preceded by
/// a straight run S*, the H-value is |S*|-1 when a drop comes right before
/// S* and |S*| otherwise; 0 when the path does not end with a climb.
inline long long h_value(const UavPath& p) {
  const auto& mv = p.moves;
  size_t u = detail::trailing_run(mv, MoveLabel::U, mv.size());
  if (u == 0) return 0;
  size_t s = detail::trailing_run(mv, MoveLabel::S, mv.size() - u);
  if (s == 0) return 0;
  bool drop_before = mv.size() > u + s && mv[mv.size() - u - s - 1] == MoveLabel::D;
  return drop_before ? static_cast<long long>(s) - 1 : static_cast<long long>(s);
}

/// Removes the trailing climb U*, returning its cells to the free set and
/// its move count to the crosswind budget. Caller gates on an odd H-value.
inline void phase_two(UavPath& p, PlannerState& st) {
  size_t u = detail::trailing_run(p.moves, MoveLabel::U, p.moves.size());
  if (u == 0)
    throw ConsistencyError("phase_two: path has no trailing climb");
  for (size_t i = 0; i < u; ++i) {
    st.free.insert(p.cells.back());
    p.cells.pop_back();
    p.moves.pop_back();
  }
  st.np += static_cast<long long>(u);
}

/// Spends the (even, positive) remaining crosswind budget in up-over-down
/// detours. Each round rescans the move list past the previous insertion
/// point for a straight move whose predecessor is U or S, and whose origin
/// admits a free cell above within the starting row; the detour covers
/// that cell and the one right of it. A round with no match ends the
/// phase, since later rounds would scan the same state.
inline void phase_three(UavPath& p, PlannerState& st) {
  if (st.np <= 0 || (st.np % 2) != 0)
    throw ConsistencyError("phase_three: needs a positive even budget");
  const int top = st.start.y;
  size_t resume = 0;  // index of the last insertion's U; scan strictly past it
  const long long rounds = st.np / 2;
  for (long long r = 0; r < rounds; ++r) {
    bool inserted = false;
    for (size_t i = resume + 1; i < p.moves.size(); ++i) {
      if (p.moves[i] != MoveLabel::S) continue;
      if (p.moves[i - 1] != MoveLabel::U && p.moves[i - 1] != MoveLabel::S)
        continue;
      const CellCoord c = p.cells[i];  // origin of the straight move
      const CellCoord above{c.x, c.y + 1};
      if (!st.free.contains(above) || above.y > top) continue;
      const CellCoord over{c.x + 1, c.y + 1};
      if (!st.free.contains(over))
        throw ConsistencyError(
            "phase_three: detour landing cell " + std::to_string(over.x) +
            "," + std::to_string(over.y) + " is not free");
      p.moves.insert(p.moves.begin() + static_cast<std::ptrdiff_t>(i),
                     MoveLabel::U);
      p.moves.insert(p.moves.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                     MoveLabel::D);
      p.cells.insert(p.cells.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                     {above, over});
      st.free.erase(above);
      st.free.erase(over);
      st.np -= 2;
      resume = i;
      inserted = true;
      break;
    }
    if (!inserted) break;
  }
}

/// Appends upward steps while the cell above the path's end is still free.
/// Only the last UAV runs this, and afterwards nothing may remain.
inline void phase_four(UavPath& p, CellSet& free) {
  const long long limit = free.size();
  for (long long i = 0; i < limit; ++i) {
    CellCoord c = p.cells.back();
    CellCoord above{c.x, c.y + 1};
    if (!free.contains(above)) break;
    p.cells.push_back(above);
    p.moves.push_back(MoveLabel::U);
    free.erase(above);
  }
  if (!free.empty())
    throw ConsistencyError("phase_four: " + std::to_string(free.size()) +
                           " cell(s) left uncovered");
}

/// Runs the full pipeline for one UAV against the shared free set.
inline UavPath plan_one(const GridSpec& g, int uav, CellSet& free) {
  PlannerState st = initial_settings(g, uav, std::move(free));
  UavPath p = phase_one(st);
  if (h_value(p) % 2 != 0) phase_two(p, st);
  if (st.np % 2 != 0) ++st.np;
  if (st.np > 0) phase_three(p, st);
  free = std::move(st.free);
  if (uav == g.q && !free.empty()) phase_four(p, free);
  return p;
}

/// Plans all q UAVs and assembles the timed plan. Pure function of the
/// inputs. When q == m the pipeline is bypassed: each UAV sweeps its own
/// row with n-1 straight moves, which is optimal outright.
inline Plan plan(const GridSpec& g, const MoveTimes& t) {
  g.validate();
  Plan pl;
  if (g.q == g.m) {
    for (int i = 1; i <= g.q; ++i) {
      UavPath p;
      p.cells.push_back({1, i});
      for (int x = 2; x <= g.n; ++x) {
        p.cells.push_back({x, i});
        p.moves.push_back(MoveLabel::S);
      }
      pl.paths.push_back(std::move(p));
    }
  } else {
    CellSet free = CellSet::full(g.n, g.m);
    for (int i = 1; i <= g.q; ++i) pl.paths.push_back(plan_one(g, i, free));
    if (!free.empty())
      throw ConsistencyError("plan: cells left uncovered after the last UAV");
  }
  pl.operation_time = 0.0;
  for (const UavPath& p : pl.paths) {
    pl.mission_times.push_back(mission_time(p, t));
    if (pl.mission_times.back() > pl.operation_time)
      pl.operation_time = pl.mission_times.back();
  }
  pl.lb = operation_lb(g.n, g.m, g.q, t);
  pl.gap = gap_check(pl.operation_time, pl.lb, t.tp);
  if (pl.gap == GapClass::Violation)
    throw ConsistencyError("plan: operation time off the {LB, LB+Tp} lattice");
  return pl;
}

}  // namespace mucpp::nopp
