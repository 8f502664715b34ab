// Independent plan checking. The validator trusts nothing the planner
// computed: adjacency is re-derived from coordinates, mission times are
// re-summed from move labels, and the gap is re-classified against the
// bound. Violations are collected exhaustively rather than fail-fast.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/lower_bound.hpp"
#include "mucpp/plan.hpp"
#include "mucpp/timing.hpp"

namespace mucpp {

enum class ViolationKind {
  OutOfBounds,
  NonAdjacentStep,
  DuplicateCell,
  MoveMismatch,  // stored move label disagrees with the cell delta
  Overlap,
  Uncovered,
};

struct Violation {
  ViolationKind kind;
  int uav = 0;  // 1-based; 0 when not tied to one path
  CellCoord cell{0, 0};
  std::string detail;
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::OutOfBounds: return "OutOfBounds";
    case ViolationKind::NonAdjacentStep: return "NonAdjacentStep";
    case ViolationKind::DuplicateCell: return "DuplicateCell";
    case ViolationKind::MoveMismatch: return "MoveMismatch";
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::Uncovered: return "Uncovered";
  }
  return "?";
}

namespace detail {
inline bool adjacent(CellCoord a, CellCoord b, Neighborhood nb) {
  int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
  if (dx == 0 && dy == 0) return false;
  if (nb == Neighborhood::VonNeumann) return dx + dy == 1;
  return dx <= 1 && dy <= 1;
}

inline std::string coord_str(CellCoord c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}
}  // namespace detail

/// Checks one path: bounds, step adjacency under the grid's neighborhood,
/// no revisited cells, and (when labels are present) label/delta agreement.
/// Never throws on a bad path.
inline std::vector<Violation> validate_path(const UavPath& p,
                                            const GridSpec& g, int uav = 0) {
  std::vector<Violation> out;
  std::map<CellCoord, int> seen;
  for (size_t i = 0; i < p.cells.size(); ++i) {
    const CellCoord c = p.cells[i];
    if (!g.contains(c))
      out.push_back({ViolationKind::OutOfBounds, uav, c,
                     "cell " + detail::coord_str(c) + " outside the grid"});
    if (auto [it, fresh] = seen.emplace(c, 1); !fresh)
      out.push_back({ViolationKind::DuplicateCell, uav, c,
                     "cell " + detail::coord_str(c) + " visited twice"});
    if (i > 0 && !detail::adjacent(p.cells[i - 1], c, g.neighborhood))
      out.push_back({ViolationKind::NonAdjacentStep, uav, c,
                     detail::coord_str(p.cells[i - 1]) + " -> " +
                         detail::coord_str(c) + " is not one step"});
  }
  if (!p.moves.empty()) {
    if (p.moves.size() + 1 != p.cells.size()) {
      out.push_back({ViolationKind::MoveMismatch, uav, {},
                     "label count does not match cell count"});
    } else {
      for (size_t i = 0; i < p.moves.size(); ++i)
        if (step(p.cells[i], p.moves[i]) != p.cells[i + 1])
          out.push_back({ViolationKind::MoveMismatch, uav, p.cells[i + 1],
                         std::string("label '") + to_char(p.moves[i]) +
                             "' disagrees with step into " +
                             detail::coord_str(p.cells[i + 1])});
    }
  }
  return out;
}

/// Checks a whole plan: every path individually valid, paths pairwise
/// cell-disjoint, and the union of cells covering the entire grid.
inline std::vector<Violation> validate_plan(const Plan& pl, const GridSpec& g) {
  std::vector<Violation> out;
  std::map<CellCoord, int> owner;  // cell -> first path (1-based)
  for (size_t k = 0; k < pl.paths.size(); ++k) {
    const int uav = static_cast<int>(k) + 1;
    auto vs = validate_path(pl.paths[k], g, uav);
    out.insert(out.end(), vs.begin(), vs.end());
    for (CellCoord c : pl.paths[k].cells) {
      auto [it, fresh] = owner.emplace(c, uav);
      if (!fresh && it->second != uav)
        out.push_back({ViolationKind::Overlap, uav, c,
                       "cell " + detail::coord_str(c) + " also covered by UAV " +
                           std::to_string(it->second)});
    }
  }
  for (int x = 1; x <= g.n; ++x)
    for (int y = 1; y <= g.m; ++y)
      if (!owner.count({x, y}))
        out.push_back({ViolationKind::Uncovered, 0, {x, y},
                       "cell " + detail::coord_str({x, y}) + " never covered"});
  return out;
}

/// Mission time re-summed from move labels: S -> Ts, O -> To, U/D -> Tp.
inline double mission_time(const UavPath& p, const MoveTimes& t) {
  long long s = 0, o = 0, perp = 0;
  for (MoveLabel mv : p.moves) {
    if (mv == MoveLabel::S) ++s;
    else if (mv == MoveLabel::O) ++o;
    else ++perp;
  }
  return static_cast<double>(s) * t.ts + static_cast<double>(perp) * t.tp +
         static_cast<double>(o) * t.to;
}

/// Classifies operation_time - lb against {0, Tp}. Tolerance is
/// max(1e-9, 1e-6*|lb|); anything off the two-point lattice is a
/// Violation, which signals a planner bug rather than a hard instance.
inline GapClass gap_check(double operation_time, double lb, double tp) {
  const double tol = std::max(1e-9, 1e-6 * std::abs(lb));
  const double gap = operation_time - lb;
  if (std::abs(gap) <= tol) return GapClass::Zero;
  if (std::abs(gap - tp) <= tol) return GapClass::OneTp;
  return GapClass::Violation;
}

}  // namespace mucpp
