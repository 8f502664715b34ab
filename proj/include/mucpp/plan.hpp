// Path and plan value types shared by the planner, validator, oracle and
// the I/O layers.
#pragma once

#include <stdexcept>
#include <vector>

#include "mucpp/grid.hpp"

namespace mucpp {

// One UAV's route: the visited cells and the move labels between them,
// kept mutually consistent (cells.size() == moves.size() + 1, and each
// move maps cells[i] onto cells[i+1]).
struct UavPath {
  std::vector<CellCoord> cells;
  std::vector<MoveLabel> moves;

  bool consistent() const {
    if (cells.empty()) return false;
    if (cells.size() != moves.size() + 1) return false;
    for (size_t i = 0; i < moves.size(); ++i)
      if (step(cells[i], moves[i]) != cells[i + 1]) return false;
    return true;
  }
};

enum class GapClass { Zero, OneTp, Violation };

// A complete multi-UAV plan with its timing summary. operation_time is the
// fleet maximum of the per-UAV mission times; lb is the provable minimum
// for the instance; gap records which of the two attainable offsets from
// lb the plan landed on.
struct Plan {
  std::vector<UavPath> paths;          // one per UAV, index 0 = UAV 1
  std::vector<double> mission_times;   // seconds, recomputed from labels
  double operation_time = 0.0;
  double lb = 0.0;
  GapClass gap = GapClass::Zero;
};

// Planner self-check failures: states the construction promises can never
// occur. Seeing one means a bug, not a bad instance.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mucpp
