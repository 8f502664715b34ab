// Column-profile shapes and their feasibility classification.
//
// A shape has r columns hanging from a shared top line; column i holds
// heights[i] cells, contiguous from the top, with 1 <= heights[i] <= k and
// max(heights) == k. A "valley" is a maximal run of equal-height columns
// and its depth is that height. A shape has the feasibility feature (FF)
// when every valley except the first and final has even length; FF-G1 is
// the single-valley case and FF-G2 the case with a depth-1 first valley
// and all middle valleys deeper than 1.
//
// Shapes of this family admit a single connected covering path built from
// S/U/D moves by pairing equal-depth columns (cover below). They are also
// exactly what the planner leaves behind for the next UAV, which is what
// makes them useful as a test oracle.
#pragma once

#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/plan.hpp"

namespace mucpp::ffg {

struct Shape {
  int k = 1;                 // top-line height (= max column height)
  std::vector<int> heights;  // per-column cell counts from the top line

  int columns() const { return static_cast<int>(heights.size()); }

  long long cell_count() const {
    long long s = 0;
    for (int h : heights) s += h;
    return s;
  }

  void validate() const {
    if (heights.empty()) throw std::domain_error("shape needs >= 1 column");
    if (k < 1) throw std::domain_error("shape needs k >= 1");
    int mx = 0;
    for (int h : heights) {
      if (h < 1 || h > k)
        throw std::domain_error("column heights must lie in [1, k]");
      if (h > mx) mx = h;
    }
    if (mx != k) throw std::domain_error("some column must reach depth k");
  }

  // Cell of column x (1-based), depth d below the top line (d = 0 is the
  // top cell). The shape lives in an r x k frame with the top line at y=k.
  CellCoord cell(int x, int d) const { return {x, k - d}; }
};

struct Valley {
  int first = 1, last = 1;  // inclusive column range
  int depth = 1;

  int length() const { return last - first + 1; }
};

struct ValleyPartition {
  std::vector<Valley> valleys;
};

/// Maximal runs of equal heights, left to right. Adjacent valleys differ
/// in depth by construction; the ranges partition 1..r.
inline ValleyPartition valleys(const Shape& s) {
  s.validate();
  ValleyPartition vp;
  int first = 1;
  for (int i = 2; i <= s.columns() + 1; ++i) {
    if (i > s.columns() || s.heights[i - 1] != s.heights[first - 1]) {
      vp.valleys.push_back({first, i - 1, s.heights[first - 1]});
      first = i;
    }
  }
  return vp;
}

enum class ShapeClass { NotFFG, FFG, FFG1, FFG2 };

inline const char* to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::NotFFG: return "NotFFG";
    case ShapeClass::FFG: return "FFG";
    case ShapeClass::FFG1: return "FFG1";
    case ShapeClass::FFG2: return "FFG2";
  }
  return "?";
}

/// Most specific class first: one valley is FFG1; failing the even-middle
/// rule is NotFFG; a depth-1 first valley with all middle valleys deeper
/// is FFG2; anything else with the feasibility feature is plain FFG.
inline ShapeClass classify(const Shape& s) {
  auto vp = valleys(s);
  const size_t count = vp.valleys.size();
  if (count == 1) return ShapeClass::FFG1;
  bool middles_even = true, middles_deep = true;
  for (size_t i = 1; i + 1 < count; ++i) {
    if (vp.valleys[i].length() % 2 != 0) middles_even = false;
    if (vp.valleys[i].depth <= 1) middles_deep = false;
  }
  if (!middles_even) return ShapeClass::NotFFG;
  if (vp.valleys.front().depth == 1 && middles_deep) return ShapeClass::FFG2;
  return ShapeClass::FFG;
}

namespace detail {
// Descend column a from the top, cross to column b, climb back to the top.
// Both columns share depth d. Entry point is (a, top); exit is (b, top).
inline void cover_pair(const Shape& s, int a, int d, UavPath& p) {
  for (int i = 1; i < d; ++i) {
    p.cells.push_back(s.cell(a, i));
    p.moves.push_back(MoveLabel::D);
  }
  p.cells.push_back(s.cell(a + 1, d - 1));
  p.moves.push_back(MoveLabel::S);
  for (int i = d - 2; i >= 0; --i) {
    p.cells.push_back(s.cell(a + 1, i));
    p.moves.push_back(MoveLabel::U);
  }
}
}  // namespace detail

/// Single connected duplicate-free path covering every cell of an FF-G
/// shape, using only S, U, D moves. Throws std::domain_error on shapes
/// without the feasibility feature.
inline UavPath cover(const Shape& s) {
  if (classify(s) == ShapeClass::NotFFG)
    throw std::domain_error("cover: shape lacks the feasibility feature");
  auto vp = valleys(s);
  const int r = s.columns();

  UavPath p;
  if (r == 1) {  // lone column: walk it top to bottom
    p.cells.push_back(s.cell(1, 0));
    for (int i = 1; i < s.heights[0]; ++i) {
      p.cells.push_back(s.cell(1, i));
      p.moves.push_back(MoveLabel::D);
    }
    return p;
  }

  // Odd first/final valleys donate their edge column, which is covered by
  // a climb prologue / descent epilogue; everything between pairs evenly.
  const bool first_odd = vp.valleys.front().length() % 2 != 0;
  const bool final_odd =
      vp.valleys.size() > 1 && vp.valleys.back().length() % 2 != 0;
  const int lo = first_odd ? 2 : 1;
  const int hi = final_odd ? r - 1 : r;

  if (first_odd) {
    const int h1 = s.heights[0];
    p.cells.push_back(s.cell(1, h1 - 1));  // bottom of column 1
    for (int i = h1 - 2; i >= 0; --i) {
      p.cells.push_back(s.cell(1, i));
      p.moves.push_back(MoveLabel::U);
    }
    p.cells.push_back(s.cell(2, 0));
    p.moves.push_back(MoveLabel::S);
  } else {
    p.cells.push_back(s.cell(1, 0));
  }

  for (int a = lo; a + 1 <= hi; a += 2) {
    detail::cover_pair(s, a, s.heights[a - 1], p);
    if (a + 2 <= r) {
      p.cells.push_back(s.cell(a + 2, 0));
      p.moves.push_back(MoveLabel::S);
    }
  }

  if (final_odd) {
    const int hr = s.heights[r - 1];
    for (int i = 1; i < hr; ++i) {
      p.cells.push_back(s.cell(r, i));
      p.moves.push_back(MoveLabel::D);
    }
  }
  return p;
}

/// Extracts the profile of `free` cells at or below row `top`, viewed from
/// that row. Every column must reach the top row and stay contiguous going
/// down; holes or empty columns are rejected (those shapes fall outside
/// the family and would indicate a planner bug when coming from residuals).
inline Shape from_cells(const CellSet& free, int top) {
  if (top < 1 || top > free.frame_m())
    throw std::domain_error("from_cells: top row outside frame");
  Shape s;
  int k = 0;
  for (int x = 1; x <= free.frame_n(); ++x) {
    if (!free.contains({x, top}))
      throw std::domain_error("from_cells: column " + std::to_string(x) +
                              " is empty at the top row");
    int h = 1;
    while (top - h >= 1 && free.contains({x, top - h})) ++h;
    for (int y = top - h; y >= 1; --y)
      if (free.contains({x, y}))
        throw std::domain_error("from_cells: column " + std::to_string(x) +
                                " has a hole below the top row");
    s.heights.push_back(h);
    if (h > k) k = h;
  }
  s.k = k;
  return s;
}

}  // namespace mucpp::ffg
