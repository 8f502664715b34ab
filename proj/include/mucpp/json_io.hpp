// JSON wire formats for instances and plans.
//
// Instance: {"n":int, "m":int, "q":int,
//            "neighborhood":"von_neumann"|"moore",
//            "airspeed":num?, "wind_speed":num?, "cell_size":num?,
//            "move_times":[Ts,Tp,To]?}
// Plan:     {"instance":{...}, "move_times":[Ts,Tp,To],
//            "paths":[{"uav":int, "cells":[[x,y],...],
//                      "moves":["S"|"U"|"D"|"O",...], "mission_time":num}],
//            "operation_time":num, "lb":num, "gap":"zero"|"one_tp"}
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mucpp/grid.hpp"
#include "mucpp/plan.hpp"
#include "mucpp/timing.hpp"

namespace mucpp::io {

using nlohmann::json;

// Instance as it appears on the wire. Either the physical triple
// (airspeed, wind_speed, cell_size) or an explicit move-time triple must
// be present to derive times.
struct Instance {
  int n = 1, m = 1, q = 1;
  Neighborhood neighborhood = Neighborhood::VonNeumann;
  std::optional<double> airspeed, wind_speed, cell_size;
  std::optional<std::array<double, 3>> move_times_override;

  GridSpec grid() const {
    return {n, m, q, neighborhood, cell_size.value_or(1.0)};
  }

  MoveTimes derive_times() const {
    if (move_times_override) {
      const auto& v = *move_times_override;
      if (!(v[0] > 0 && v[1] > 0 && v[2] > 0))
        throw std::domain_error("move_times must be positive");
      if (!(v[0] <= v[1] && v[1] <= v[2]))
        throw std::domain_error("move_times must satisfy Ts <= Tp <= To");
      return {v[0], v[1], v[2], std::nullopt, std::nullopt};
    }
    if (airspeed && wind_speed && cell_size)
      return move_times(WindKinematics{*airspeed, *wind_speed, *cell_size});
    throw std::domain_error(
        "instance needs either move_times or airspeed/wind_speed/cell_size");
  }
};

inline json to_json(const Instance& in) {
  json j;
  j["n"] = in.n;
  j["m"] = in.m;
  j["q"] = in.q;
  j["neighborhood"] =
      in.neighborhood == Neighborhood::Moore ? "moore" : "von_neumann";
  if (in.airspeed) j["airspeed"] = *in.airspeed;
  if (in.wind_speed) j["wind_speed"] = *in.wind_speed;
  if (in.cell_size) j["cell_size"] = *in.cell_size;
  if (in.move_times_override)
    j["move_times"] = {(*in.move_times_override)[0],
                       (*in.move_times_override)[1],
                       (*in.move_times_override)[2]};
  return j;
}

inline Instance instance_from_json(const json& j) {
  Instance in;
  in.n = j.at("n").get<int>();
  in.m = j.at("m").get<int>();
  in.q = j.at("q").get<int>();
  if (j.contains("neighborhood")) {
    const std::string nb = j.at("neighborhood").get<std::string>();
    if (nb == "moore") in.neighborhood = Neighborhood::Moore;
    else if (nb == "von_neumann") in.neighborhood = Neighborhood::VonNeumann;
    else throw std::domain_error("unknown neighborhood: " + nb);
  }
  if (j.contains("airspeed")) in.airspeed = j.at("airspeed").get<double>();
  if (j.contains("wind_speed")) in.wind_speed = j.at("wind_speed").get<double>();
  if (j.contains("cell_size")) in.cell_size = j.at("cell_size").get<double>();
  if (j.contains("move_times")) {
    auto v = j.at("move_times").get<std::vector<double>>();
    if (v.size() != 3)
      throw std::domain_error("move_times must hold [Ts,Tp,To]");
    in.move_times_override = std::array<double, 3>{v[0], v[1], v[2]};
  }
  return in;
}

inline json plan_to_json(const Plan& pl, const Instance& in,
                         const MoveTimes& t) {
  json j;
  j["instance"] = to_json(in);
  j["move_times"] = {t.ts, t.tp, t.to};
  j["paths"] = json::array();
  for (size_t k = 0; k < pl.paths.size(); ++k) {
    json p;
    p["uav"] = static_cast<int>(k) + 1;
    p["cells"] = json::array();
    for (CellCoord c : pl.paths[k].cells) p["cells"].push_back({c.x, c.y});
    p["moves"] = json::array();
    for (MoveLabel mv : pl.paths[k].moves)
      p["moves"].push_back(std::string(1, to_char(mv)));
    p["mission_time"] = pl.mission_times[k];
    j["paths"].push_back(std::move(p));
  }
  j["operation_time"] = pl.operation_time;
  j["lb"] = pl.lb;
  j["gap"] = pl.gap == GapClass::OneTp ? "one_tp" : "zero";
  return j;
}

struct ParsedPlan {
  Instance instance;
  MoveTimes times;
  Plan plan;
};

inline ParsedPlan plan_from_json(const json& j) {
  ParsedPlan out;
  out.instance = instance_from_json(j.at("instance"));
  {
    auto v = j.at("move_times").get<std::vector<double>>();
    if (v.size() != 3)
      throw std::domain_error("move_times must hold [Ts,Tp,To]");
    out.times = {v[0], v[1], v[2], std::nullopt, std::nullopt};
  }
  for (const json& pj : j.at("paths")) {
    UavPath p;
    for (const json& cj : pj.at("cells")) {
      if (!cj.is_array() || cj.size() != 2)
        throw std::domain_error("cells entries must be [x,y]");
      p.cells.push_back({cj[0].get<int>(), cj[1].get<int>()});
    }
    if (pj.contains("moves")) {
      for (const json& mj : pj.at("moves")) {
        const std::string s = mj.get<std::string>();
        if (s.size() != 1 || std::string("SOUD").find(s[0]) == std::string::npos)
          throw std::domain_error("unknown move label: " + s);
        p.moves.push_back(static_cast<MoveLabel>(s[0]));
      }
    }
    out.plan.paths.push_back(std::move(p));
    out.plan.mission_times.push_back(
        pj.contains("mission_time") ? pj.at("mission_time").get<double>() : 0.0);
  }
  out.plan.operation_time = j.at("operation_time").get<double>();
  out.plan.lb = j.at("lb").get<double>();
  const std::string gap = j.at("gap").get<std::string>();
  if (gap == "zero") out.plan.gap = GapClass::Zero;
  else if (gap == "one_tp") out.plan.gap = GapClass::OneTp;
  else throw std::domain_error("unknown gap class: " + gap);
  return out;
}

}  // namespace mucpp::io
