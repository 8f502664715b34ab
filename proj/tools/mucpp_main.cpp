// mucpp: plan, bound, validate and benchmark multi-UAV grid coverage
// missions under uniform wind.
//
// Exit codes: 0 success, 1 domain/feasibility failure, 2 usage/parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mucpp/bench.hpp"
#include "mucpp/ffg.hpp"
#include "mucpp/json_io.hpp"
#include "mucpp/lower_bound.hpp"
#include "mucpp/mip.hpp"
#include "mucpp/nopp.hpp"
#include "mucpp/oracle.hpp"
#include "mucpp/svg.hpp"
#include "mucpp/validate.hpp"

namespace {

using mucpp::io::Instance;

struct InstanceFlags {
  int n = 0, m = 0, q = 1;
  std::string neighborhood = "von_neumann";
  double airspeed = 0, wind_speed = -1, cell_size = 0;
  std::vector<double> move_times;
  bool has_physical = false;

  void attach(CLI::App* cmd, bool with_q = true) {
    cmd->add_option("--n", n, "cells along the wind (X-axis)")->required();
    cmd->add_option("--m", m, "cells across the wind (Y-axis)")->required();
    if (with_q) cmd->add_option("--q", q, "number of UAVs")->required();
    cmd->add_option("--neighborhood", neighborhood,
                    "von_neumann or moore (planning uses S/U/D moves either way)")
        ->check(CLI::IsMember({"von_neumann", "moore"}));
    auto* va = cmd->add_option("--airspeed", airspeed, "UAV airspeed, m/s");
    auto* vw = cmd->add_option("--wind-speed", wind_speed, "wind speed, m/s");
    auto* cs = cmd->add_option("--cell-size", cell_size,
                               "cell center-to-center pitch, m");
    auto* mt = cmd->add_option(
        "--move-times", move_times,
        "explicit Ts,Tp,To override (reproduces rounded reference arithmetic; "
        "physical flags use full precision)");
    mt->delimiter(',')->expected(1, 3);
    va->needs(vw)->needs(cs);
    vw->needs(va);
    cs->needs(va);
    mt->excludes(va)->excludes(vw)->excludes(cs);
  }

  Instance instance() const {
    Instance in;
    in.n = n;
    in.m = m;
    in.q = q;
    in.neighborhood = neighborhood == "moore"
                          ? mucpp::Neighborhood::Moore
                          : mucpp::Neighborhood::VonNeumann;
    if (!move_times.empty()) {
      if (move_times.size() != 3)
        throw CLI::ValidationError("--move-times", "expected Ts,Tp,To");
      in.move_times_override = {move_times[0], move_times[1], move_times[2]};
    } else if (wind_speed >= 0 || airspeed > 0 || cell_size > 0) {
      in.airspeed = airspeed;
      in.wind_speed = wind_speed;
      in.cell_size = cell_size;
    } else {
      throw CLI::ValidationError(
          "instance", "provide --move-times or --airspeed/--wind-speed/--cell-size");
    }
    return in;
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << text;
}

int cmd_plan(const InstanceFlags& flags, const std::string& out,
             const std::string& svg_out) {
  Instance in = flags.instance();
  mucpp::GridSpec g = in.grid();
  mucpp::MoveTimes t = in.derive_times();
  mucpp::Plan pl = mucpp::nopp::plan(g, t);
  write_output(out, mucpp::io::plan_to_json(pl, in, t).dump(2) + "\n");
  if (!svg_out.empty()) write_output(svg_out, mucpp::svg::render(pl, g));
  return 0;
}

int cmd_lb(const InstanceFlags& flags) {
  Instance in = flags.instance();
  mucpp::MoveTimes t = in.derive_times();
  nlohmann::json j;
  j["n"] = in.n;
  j["m"] = in.m;
  j["q"] = in.q;
  j["lb"] = mucpp::operation_lb(in.n, in.m, in.q, t);
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_min_uavs(const InstanceFlags& flags, double budget) {
  Instance in = flags.instance();
  mucpp::MoveTimes t = in.derive_times();
  nlohmann::json j;
  j["n"] = in.n;
  j["m"] = in.m;
  j["budget"] = budget;
  j["min_uavs"] = mucpp::min_uavs_for_budget(in.n, in.m, budget, t);
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open plan file: " << path << "\n";
    return 2;
  }
  mucpp::io::ParsedPlan parsed;
  try {
    parsed = mucpp::io::plan_from_json(nlohmann::json::parse(f));
  } catch (const std::exception& e) {
    std::cerr << "malformed plan JSON: " << e.what() << "\n";
    return 2;
  }

  // Validation poses weaker demands than planning: the bound only needs
  // q <= m, and paths may be fewer than q (idle UAVs fly nothing).
  mucpp::GridSpec g = parsed.instance.grid();
  if (g.n < 1 || g.m < 1 || g.q < 1 || g.q > g.m) {
    std::cerr << "instance out of range: n=" << g.n << " m=" << g.m
              << " q=" << g.q << " (needs n,m >= 1 and 1 <= q <= m)\n";
    return 1;
  }
  if (parsed.plan.paths.size() > static_cast<size_t>(g.q)) {
    std::cerr << "plan lists " << parsed.plan.paths.size()
              << " paths for a fleet of " << g.q << "\n";
    return 1;
  }
  auto violations = mucpp::validate_plan(parsed.plan, g);
  double op = 0.0;
  for (size_t k = 0; k < parsed.plan.paths.size(); ++k) {
    const double t = mucpp::mission_time(parsed.plan.paths[k], parsed.times);
    op = std::max(op, t);
    if (std::abs(t - parsed.plan.mission_times[k]) > 1e-6)
      violations.push_back({mucpp::ViolationKind::MoveMismatch,
                            static_cast<int>(k) + 1,
                            {},
                            "stored mission_time disagrees with move labels"});
  }
  const double lb = mucpp::operation_lb(g.n, g.m, g.q, parsed.times);
  const auto gap = mucpp::gap_check(op, lb, parsed.times.tp);
  for (const auto& v : violations)
    std::cout << mucpp::to_string(v.kind) << " uav=" << v.uav << " cell=("
              << v.cell.x << "," << v.cell.y << "): " << v.detail << "\n";
  if (gap == mucpp::GapClass::Violation)
    std::cout << "GapViolation: operation time " << op
              << " is off the {LB, LB+Tp} lattice (LB " << lb << ")\n";
  if (!violations.empty() || gap == mucpp::GapClass::Violation) return 1;
  std::cout << "ok: " << parsed.plan.paths.size() << " paths, operation time "
            << op << ", lb " << lb << ", gap "
            << (gap == mucpp::GapClass::Zero ? "zero" : "one_tp") << "\n";
  return 0;
}

int cmd_bench(const std::string& suite, const std::string& out) {
  auto rows = mucpp::bench::run_suite(suite);
  write_output(out, mucpp::bench::to_csv(rows, suite == "small"));
  return 0;
}

int cmd_oracle(const InstanceFlags& flags, double time_limit, int cell_cap) {
  Instance in = flags.instance();
  mucpp::GridSpec g = in.grid();
  mucpp::MoveTimes t = in.derive_times();
  auto res = mucpp::oracle::exact_solve(g, t, {cell_cap, time_limit});
  nlohmann::json j;
  j["optimum"] = res.optimum;
  j["certified"] = res.certified;
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_emit_mip(const InstanceFlags& flags, const std::string& out) {
  Instance in = flags.instance();
  write_output(out, mucpp::mip::emit(in.grid(), in.derive_times()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-UAV grid coverage planning under uniform wind"};
  app.require_subcommand(1);

  InstanceFlags plan_flags, lb_flags, mu_flags, oracle_flags, mip_flags;
  std::string plan_out, plan_svg, bench_suite, bench_out, mip_out, plan_file;
  double budget = 0, time_limit = 60.0;
  int cell_cap = 30;

  auto* c_plan = app.add_subcommand(
      "plan", "plan coverage paths and print the plan as JSON");
  plan_flags.attach(c_plan);
  c_plan->add_option("--out", plan_out, "write the plan JSON here");
  c_plan->add_option("--svg", plan_svg, "also write an SVG rendering here");

  auto* c_lb = app.add_subcommand(
      "lb", "print the operation-time lower bound as JSON");
  lb_flags.attach(c_lb);

  auto* c_mu = app.add_subcommand(
      "min-uavs", "smallest fleet whose lower bound fits a time budget");
  mu_flags.attach(c_mu, /*with_q=*/false);
  c_mu->add_option("--budget", budget, "time budget, seconds")->required();

  auto* c_val = app.add_subcommand("validate", "check a plan JSON file");
  c_val->add_option("plan_file", plan_file, "plan JSON path")->required();

  auto* c_bench = app.add_subcommand(
      "bench", "run a bundled instance suite and emit CSV");
  c_bench->add_option("--suite", bench_suite, "small, medium or large")
      ->required()
      ->check(CLI::IsMember({"small", "medium", "large"}));
  c_bench->add_option("--out", bench_out, "write CSV here (default stdout)");

  auto* c_oracle = app.add_subcommand(
      "oracle", "exact optimum by branch and bound (small instances)");
  oracle_flags.attach(c_oracle);
  c_oracle->add_option("--time-limit", time_limit, "seconds before giving up");
  c_oracle->add_option("--cell-cap", cell_cap, "largest n*m accepted");

  auto* c_mip = app.add_subcommand(
      "emit-mip", "write the instance's LP-format model");
  mip_flags.attach(c_mip);
  c_mip->add_option("--out", mip_out, "write LP text here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_plan->parsed()) return cmd_plan(plan_flags, plan_out, plan_svg);
    if (c_lb->parsed()) return cmd_lb(lb_flags);
    if (c_mu->parsed()) return cmd_min_uavs(mu_flags, budget);
    if (c_val->parsed()) return cmd_validate(plan_file);
    if (c_bench->parsed()) return cmd_bench(bench_suite, bench_out);
    if (c_oracle->parsed()) return cmd_oracle(oracle_flags, time_limit, cell_cap);
    if (c_mip->parsed()) return cmd_emit_mip(mip_flags, mip_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
