// Grid model shared by every other component: cell coordinates, the grid
// frame, neighborhoods and move labels.
//
// Cells are indexed 1-based by the (x, y) of their center, x along the wind
// (the X-axis, length n) and y across it (the Y-axis, width m). Conversions
// to 0-based offsets happen only inside array storage.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mucpp {

struct CellCoord {
  int x = 0;  // column, 1..n
  int y = 0;  // row, 1..m

  friend auto operator<=>(const CellCoord&, const CellCoord&) = default;
};

enum class Neighborhood { VonNeumann, Moore };

// Move labels used by planner paths. S goes with the wind (+x), O against
// it (-x), U and D are the crosswind steps (+y / -y). Either of U/D is a
// "P move". Diagonal classes exist only as timing categories (see
// timing.hpp) and never appear in a path.
enum class MoveLabel : char { S = 'S', O = 'O', U = 'U', D = 'D' };

inline char to_char(MoveLabel mv) { return static_cast<char>(mv); }

inline bool is_perpendicular(MoveLabel mv) {
  return mv == MoveLabel::U || mv == MoveLabel::D;
}

struct GridSpec {
  int n = 1;  // cells along the length (X-axis)
  int m = 1;  // cells along the width (Y-axis)
  int q = 1;  // UAV count
  Neighborhood neighborhood = Neighborhood::VonNeumann;
  double cell_pitch = 1.0;  // center-to-center distance, meters

  bool contains(CellCoord c) const {
    return c.x >= 1 && c.x <= n && c.y >= 1 && c.y <= m;
  }

  long long cell_count() const {
    return static_cast<long long>(n) * static_cast<long long>(m);
  }

  // Throws std::domain_error when the frame or fleet size is unusable.
  // Planning requires q <= min(n, m): q <= m so every UAV gets its own
  // starting row, q <= n so the per-UAV load is at least one full row.
  void validate() const {
    if (n < 1 || m < 1) throw std::domain_error("grid dimensions must be >= 1");
    if (cell_pitch <= 0.0) throw std::domain_error("cell_pitch must be > 0");
    if (q < 1) throw std::domain_error("q must be >= 1");
    if (q > (n < m ? n : m))
      throw std::domain_error("q exceeds min(n,m): q=" + std::to_string(q) +
                              ", n=" + std::to_string(n) +
                              ", m=" + std::to_string(m));
  }
};

// Unchecked single step; callers own the bounds question.
inline CellCoord step(CellCoord c, MoveLabel mv) {
  switch (mv) {
    case MoveLabel::S: return {c.x + 1, c.y};
    case MoveLabel::O: return {c.x - 1, c.y};
    case MoveLabel::U: return {c.x, c.y + 1};
    case MoveLabel::D: return {c.x, c.y - 1};
  }
  return c;  // unreachable
}

/// Applies one move, throwing std::domain_error if either endpoint leaves
/// the grid.
inline CellCoord apply_move(CellCoord c, MoveLabel mv, const GridSpec& g) {
  if (!g.contains(c))
    throw std::domain_error("apply_move: origin cell outside grid");
  CellCoord dst = step(c, mv);
  if (!g.contains(dst))
    throw std::domain_error("apply_move: move leaves the grid");
  return dst;
}

/// In-bounds neighbors of c under the grid's neighborhood, sorted
/// lexicographically. 2..4 cells for Von Neumann, 3..8 for Moore.
inline std::vector<CellCoord> neighbors(CellCoord c, const GridSpec& g) {
  if (!g.contains(c)) throw std::domain_error("neighbors: cell outside grid");
  std::vector<CellCoord> out;
  out.reserve(8);
  for (int dx = -1; dx <= 1; ++dx) {
    for (int dy = -1; dy <= 1; ++dy) {
      if (dx == 0 && dy == 0) continue;
      if (g.neighborhood == Neighborhood::VonNeumann && dx != 0 && dy != 0)
        continue;
      CellCoord nb{c.x + dx, c.y + dy};
      if (g.contains(nb)) out.push_back(nb);
    }
  }
  return out;  // loop order is already lexicographic in (x, y)
}

// Dense membership set over an n x m frame. contains() answers false for
// out-of-frame coordinates, which is exactly the "is this a feasible
// destination" question the planner keeps asking.
class CellSet {
 public:
  CellSet() = default;
  CellSet(int n, int m, bool filled = false)
      : n_(n), m_(m), bits_(static_cast<size_t>(n) * m, filled ? 1 : 0),
        count_(filled ? static_cast<long long>(n) * m : 0) {}

  static CellSet full(int n, int m) { return CellSet(n, m, true); }

  bool contains(CellCoord c) const {
    if (c.x < 1 || c.x > n_ || c.y < 1 || c.y > m_) return false;
    return bits_[index(c)] != 0;
  }

  void insert(CellCoord c) {
    auto i = index_checked(c, "CellSet::insert");
    if (!bits_[i]) { bits_[i] = 1; ++count_; }
  }

  void erase(CellCoord c) {
    auto i = index_checked(c, "CellSet::erase");
    if (bits_[i]) { bits_[i] = 0; --count_; }
  }

  long long size() const { return count_; }
  bool empty() const { return count_ == 0; }
  int frame_n() const { return n_; }
  int frame_m() const { return m_; }

  /// Members in lexicographic (x, y) order.
  std::vector<CellCoord> cells() const {
    std::vector<CellCoord> out;
    out.reserve(static_cast<size_t>(count_));
    for (int x = 1; x <= n_; ++x)
      for (int y = 1; y <= m_; ++y)
        if (bits_[index({x, y})]) out.push_back({x, y});
    return out;
  }

 private:
  size_t index(CellCoord c) const {
    return static_cast<size_t>(c.y - 1) * n_ + (c.x - 1);
  }
  size_t index_checked(CellCoord c, const char* who) const {
    if (c.x < 1 || c.x > n_ || c.y < 1 || c.y > m_)
      throw std::domain_error(std::string(who) + ": cell outside frame");
    return index(c);
  }

  int n_ = 0, m_ = 0;
  std::vector<std::uint8_t> bits_;
  long long count_ = 0;
};

}  // namespace mucpp
