// LP-format emission of the step-indexed coverage model.
//
// Variables (all binary except the objective):
//   x_k_i_j_s  UAV k sits on cell (i,j) at step s
//   y_k_s      UAV k is outside the area at step s
//   r_k_s      UAV k moved with the wind into step s
//   l_k_s      UAV k moved against the wind into step s
//   p_k_s      UAV k moved crosswind into step s
//   t_opr      operation time (continuous, minimized)
//
// Steps run 1..n*m. Constraint families, one block per family:
//   occupancy     every UAV is in exactly one cell or outside, each step
//   visit         every cell is visited exactly once
//   enter         a cell is entered only from a neighbor cell
//   leave         a cell is left only to a neighbor cell or the outside
//   with-wind     r indicator forced by consecutive-column occupancy
//   against-wind  l indicator forced likewise
//   cross-up      p indicator forced by upward row change
//   cross-down    p indicator forced by downward row change
//   one-move      exactly one of p/r/l/y per step after the first
//   mission       t_opr dominates each UAV's summed move time
//
// Emission is deterministic: fixed iteration order, fixed formatting, no
// timestamps. Output is byte-identical across runs for equal inputs.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "mucpp/grid.hpp"
#include "mucpp/timing.hpp"

namespace mucpp::mip {

namespace detail {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Accumulates one constraint line, wrapping long expressions the way LP
// readers expect (continuation lines begin with whitespace).
class LineWriter {
 public:
  LineWriter(std::string& out, std::string head) : out_(out) {
    line_ = " " + std::move(head);
  }
  void term(const std::string& tok) {
    if (line_.size() + tok.size() > 200) {
      out_ += line_ + "\n";
      line_ = "   ";
    }
    line_ += " " + tok;
  }
  void finish(const std::string& tail) { out_ += line_ + " " + tail + "\n"; }

 private:
  std::string& out_;
  std::string line_;
};

inline std::string xvar(int k, int i, int j, int s) {
  return "x_" + std::to_string(k) + "_" + std::to_string(i) + "_" +
         std::to_string(j) + "_" + std::to_string(s);
}
inline std::string kvar(const char* base, int k, int s) {
  return std::string(base) + "_" + std::to_string(k) + "_" + std::to_string(s);
}

}  // namespace detail

/// Renders the model as LP text. All constraint families are present for
/// any instance; index sets shrink with the grid as expected.
inline std::string emit(const GridSpec& g, const MoveTimes& t) {
  g.validate();
  using detail::kvar;
  using detail::xvar;
  const int n = g.n, m = g.m, q = g.q;
  const int steps = n * m;

  std::string out;
  out += "\\ multi-uav grid coverage, step-indexed formulation\n";
  out += "\\ instance: n=" + std::to_string(n) + " m=" + std::to_string(m) +
         " q=" + std::to_string(q) + "\n";
  out += "\\ move times: ts=" + detail::num(t.ts) + " tp=" + detail::num(t.tp) +
         " to=" + detail::num(t.to) + "\n";
  out += "Minimize\n obj: t_opr\nSubject To\n";

  out += "\\ family occupancy: one cell or outside, per UAV and step\n";
  for (int k = 1; k <= q; ++k)
    for (int s = 1; s <= steps; ++s) {
      detail::LineWriter w(out, "occ_" + std::to_string(k) + "_" +
                                    std::to_string(s) + ":");
      bool first = true;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
          w.term((first ? "" : "+ ") + xvar(k, i, j, s));
          first = false;
        }
      w.term("+ " + kvar("y", k, s));
      w.finish("= 1");
    }

  out += "\\ family visit: every cell is visited exactly once\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      detail::LineWriter w(out, "visit_" + std::to_string(i) + "_" +
                                    std::to_string(j) + ":");
      bool first = true;
      for (int k = 1; k <= q; ++k)
        for (int s = 1; s <= steps; ++s) {
          w.term((first ? "" : "+ ") + xvar(k, i, j, s));
          first = false;
        }
      w.finish("= 1");
    }

  out += "\\ family enter: a cell is entered only from a neighbor\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= q; ++k)
        for (int s = 2; s <= steps; ++s) {
          detail::LineWriter w(out, "enter_" + std::to_string(k) + "_" +
                                        std::to_string(i) + "_" +
                                        std::to_string(j) + "_" +
                                        std::to_string(s) + ":");
          w.term(xvar(k, i, j, s));
          if (i > 1) w.term("- " + xvar(k, i - 1, j, s - 1));
          if (i < n) w.term("- " + xvar(k, i + 1, j, s - 1));
          if (j > 1) w.term("- " + xvar(k, i, j - 1, s - 1));
          if (j < m) w.term("- " + xvar(k, i, j + 1, s - 1));
          w.finish("<= 0");
        }

  out += "\\ family leave: a cell is left to a neighbor or the outside\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= q; ++k)
        for (int s = 1; s <= steps - 1; ++s) {
          detail::LineWriter w(out, "leave_" + std::to_string(k) + "_" +
                                        std::to_string(i) + "_" +
                                        std::to_string(j) + "_" +
                                        std::to_string(s) + ":");
          w.term(xvar(k, i, j, s));
          w.term("- " + kvar("y", k, s + 1));
          if (i > 1) w.term("- " + xvar(k, i - 1, j, s + 1));
          if (i < n) w.term("- " + xvar(k, i + 1, j, s + 1));
          if (j > 1) w.term("- " + xvar(k, i, j - 1, s + 1));
          if (j < m) w.term("- " + xvar(k, i, j + 1, s + 1));
          w.finish("<= 0");
        }

  auto move_indicator = [&](const char* family, const char* name,
                            const char* var, bool column_axis, bool forward) {
    out += std::string("\\ family ") + family + "\n";
    const int limit = column_axis ? n : m;
    for (int a = forward ? 1 : 2; a <= (forward ? limit - 1 : limit); ++a)
      for (int s = 2; s <= steps; ++s)
        for (int k = 1; k <= q; ++k) {
          detail::LineWriter w(out, std::string(name) + "_" +
                                        std::to_string(k) + "_" +
                                        std::to_string(a) + "_" +
                                        std::to_string(s) + ":");
          bool first = true;
          const int b = forward ? a + 1 : a - 1;
          const int other = column_axis ? m : n;
          for (int c = 1; c <= other; ++c) {
            int i0 = column_axis ? a : c, j0 = column_axis ? c : a;
            w.term((first ? "" : "+ ") + xvar(k, i0, j0, s - 1));
            first = false;
          }
          for (int c = 1; c <= other; ++c) {
            int i1 = column_axis ? b : c, j1 = column_axis ? c : b;
            w.term("+ " + xvar(k, i1, j1, s));
          }
          w.term("- " + kvar(var, k, s));
          w.finish("<= 1");
        }
  };
  move_indicator("with-wind: r is forced by a +x column change", "wind", "r",
                 true, true);
  move_indicator("against-wind: l is forced by a -x column change", "against",
                 "l", true, false);
  move_indicator("cross-up: p is forced by a +y row change", "crossup", "p",
                 false, true);
  move_indicator("cross-down: p is forced by a -y row change", "crossdown",
                 "p", false, false);

  out += "\\ family one-move: one move class or outside, per step\n";
  for (int k = 1; k <= q; ++k)
    for (int s = 2; s <= steps; ++s) {
      detail::LineWriter w(out, "onemove_" + std::to_string(k) + "_" +
                                    std::to_string(s) + ":");
      w.term(kvar("p", k, s));
      w.term("+ " + kvar("r", k, s));
      w.term("+ " + kvar("l", k, s));
      w.term("+ " + kvar("y", k, s));
      w.finish("= 1");
    }

  out += "\\ family mission: t_opr dominates each UAV's mission time\n";
  for (int k = 1; k <= q; ++k) {
    detail::LineWriter w(out, "mission_" + std::to_string(k) + ":");
    w.term("t_opr");
    for (int s = 2; s <= steps; ++s) w.term("- " + detail::num(t.tp) + " " + kvar("p", k, s));
    for (int s = 2; s <= steps; ++s) w.term("- " + detail::num(t.ts) + " " + kvar("r", k, s));
    for (int s = 2; s <= steps; ++s) w.term("- " + detail::num(t.to) + " " + kvar("l", k, s));
    w.finish(">= 0");
  }

  out += "Binaries\n";
  {
    std::string line;
    auto push = [&](const std::string& v) {
      if (line.size() + v.size() > 200) {
        out += line + "\n";
        line.clear();
      }
      line += " " + v;
    };
    for (int k = 1; k <= q; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
          for (int s = 1; s <= steps; ++s) push(xvar(k, i, j, s));
    for (int k = 1; k <= q; ++k)
      for (int s = 1; s <= steps; ++s) push(kvar("y", k, s));
    for (const char* v : {"p", "r", "l"})
      for (int k = 1; k <= q; ++k)
        for (int s = 2; s <= steps; ++s) push(kvar(v, k, s));
    if (!line.empty()) out += line + "\n";
  }
  out += "End\n";
  return out;
}

}  // namespace mucpp::mip
