// Benchmark harness: the three bundled instance suites, run with the
// rounded reference move times (Ts=4, Tp=5.16, To=6.66), emitted as CSV.
//
// Columns: case,LB,Z_NOPP,wall_time_s,optimality_gap_pct,absolute_gap_s
// The small suite appends z_exact,exact_certified (oracle columns are
// blank when the instance exceeds the oracle cap). Everything except
// wall_time_s is deterministic.
#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mucpp/lower_bound.hpp"
#include "mucpp/nopp.hpp"
#include "mucpp/oracle.hpp"

namespace mucpp::bench {

struct Case {
  int n, m, q;
};

inline const std::vector<Case>& suite(const std::string& name) {
  static const std::vector<Case> small = {
      {4, 4, 2}, {4, 5, 2}, {5, 4, 2},  {5, 5, 2},  {6, 5, 2},
      {5, 6, 2}, {6, 6, 2}, {7, 7, 2},  {8, 8, 2},  {9, 9, 2},
      {9, 10, 2}, {10, 9, 2}, {10, 10, 2}};
  static const std::vector<Case> medium = {
      {11, 10, 3}, {13, 11, 4}, {25, 40, 2}, {50, 20, 6}};
  static const std::vector<Case> large = {
      {50, 50, 2}, {50, 75, 2}, {75, 50, 2},  {75, 75, 2},
      {75, 100, 2}, {100, 75, 2}, {100, 100, 2}};
  if (name == "small") return small;
  if (name == "medium") return medium;
  if (name == "large") return large;
  throw std::domain_error("unknown suite: " + name +
                          " (expected small, medium or large)");
}

inline MoveTimes reference_times() {
  return {4.0, 5.16, 6.66, std::nullopt, std::nullopt};
}

struct Row {
  Case c;
  double lb = 0, z = 0, wall_s = 0;
  bool has_exact = false;
  double z_exact = 0;
  bool exact_certified = false;
};

inline Row run_case(const Case& c, bool with_oracle,
                    double oracle_limit_s = 60.0) {
  const MoveTimes t = reference_times();
  GridSpec g{c.n, c.m, c.q, Neighborhood::VonNeumann, 100.0};
  Row r;
  r.c = c;
  auto t0 = std::chrono::steady_clock::now();
  Plan pl = nopp::plan(g, t);
  r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  r.lb = pl.lb;
  r.z = pl.operation_time;
  if (with_oracle && g.cell_count() <= oracle::Options{}.cell_cap) {
    auto res = oracle::exact_solve(g, t, {oracle::Options{}.cell_cap,
                                          oracle_limit_s});
    r.has_exact = true;
    r.z_exact = res.optimum;
    r.exact_certified = res.certified;
  }
  return r;
}

inline std::vector<Row> run_suite(const std::string& name) {
  std::vector<Row> rows;
  for (const Case& c : suite(name)) rows.push_back(run_case(c, name == "small"));
  return rows;
}

inline std::string to_csv(const std::vector<Row>& rows, bool oracle_columns) {
  auto f2 = [](double v) {
    char b[32];
    std::snprintf(b, sizeof(b), "%.2f", v);
    return std::string(b);
  };
  std::string out = "case,LB,Z_NOPP,wall_time_s,optimality_gap_pct,absolute_gap_s";
  if (oracle_columns) out += ",z_exact,exact_certified";
  out += "\n";
  for (const Row& r : rows) {
    const double gap = r.z - r.lb;
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.4f", r.wall_s);
    out += std::to_string(r.c.n) + "x" + std::to_string(r.c.m) + "q" +
           std::to_string(r.c.q) + "," + f2(r.lb) + "," + f2(r.z) + "," +
           wall + "," + f2(100.0 * gap / r.lb) + "," + f2(gap);
    if (oracle_columns) {
      out += ",";
      if (r.has_exact)
        out += f2(r.z_exact) + std::string(",") +
               (r.exact_certified ? "true" : "false");
      else
        out += ",";
    }
    out += "\n";
  }
  return out;
}

}  // namespace mucpp::bench
