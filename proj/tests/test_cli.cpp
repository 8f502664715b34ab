#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

using Catch::Matchers::WithinAbs;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MUCPP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("mucpp_test_" + name);
}

}  // namespace

TEST_CASE("cli plan: reference medium instance as JSON") {
  auto r = run_cli("plan --n 11 --m 10 --q 3 --move-times 4,5.16,6.66");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK_THAT(j.at("operation_time").get<double>(), WithinAbs(179.32, 1e-9));
  CHECK_THAT(j.at("lb").get<double>(), WithinAbs(174.16, 1e-9));
  CHECK(j.at("gap") == "one_tp");
  CHECK(j.at("paths").size() == 3);
}

TEST_CASE("cli plan: physical kinematics keep full precision") {
  auto r = run_cli(
      "plan --n 4 --m 4 --q 2 --airspeed 20 --wind-speed 5 --cell-size 100");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  const double expected = 3 * 4.0 + 4 * (100.0 / std::sqrt(375.0));
  CHECK_THAT(j.at("operation_time").get<double>(), WithinAbs(expected, 1e-9));
  CHECK_THAT(j.at("operation_time").get<double>(), WithinAbs(32.66, 0.005));
}

TEST_CASE("cli plan: domain failure exits 1, usage failure exits 2") {
  CHECK(run_cli("plan --n 3 --m 3 --q 4 --move-times 4,5.16,6.66").exit_code == 1);
  CHECK(run_cli("plan --n 3 --m 3 --q 1").exit_code == 2);       // no times
  CHECK(run_cli("plan --n 3 --q 1 --move-times 4,5,6").exit_code == 2);
  CHECK(run_cli("plan --bogus").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli plan: writes plan json and svg files") {
  auto planf = temp_file("plan.json");
  auto svgf = temp_file("plan.svg");
  auto r = run_cli("plan --n 4 --m 4 --q 2 --move-times 4,5.16,6.66 --out " +
                   planf.string() + " --svg " + svgf.string());
  REQUIRE(r.exit_code == 0);
  REQUIRE(fs::exists(planf));
  REQUIRE(fs::exists(svgf));

  SECTION("validate accepts the file") {
    CHECK(run_cli("validate " + planf.string()).exit_code == 0);
  }
  SECTION("validate rejects a duplicated cell with exit 1") {
    auto j = nlohmann::json::parse(std::ifstream(planf));
    j["paths"][0]["cells"][1] = j["paths"][0]["cells"][0];
    auto broken = temp_file("broken.json");
    std::ofstream(broken) << j.dump();
    auto res = run_cli("validate " + broken.string());
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("DuplicateCell") != std::string::npos);
  }
  SECTION("validate rejects truncated json with exit 2") {
    std::string text;
    {
      std::ifstream f(planf);
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    auto trunc = temp_file("trunc.json");
    std::ofstream(trunc) << text.substr(0, text.size() / 2);
    CHECK(run_cli("validate " + trunc.string()).exit_code == 2);
  }
}

TEST_CASE("cli lb and min-uavs") {
  auto r = run_cli("lb --n 100 --m 100 --q 2 --move-times 4,5.16,6.66");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(nlohmann::json::parse(r.out).at("lb").get<double>(),
             WithinAbs(25680.0, 1e-9));

  auto mu = run_cli("min-uavs --n 100 --m 100 --budget 3600 --move-times 4,5.16,6.66");
  REQUIRE(mu.exit_code == 0);
  CHECK(nlohmann::json::parse(mu.out).at("min_uavs").get<int>() == 14);

  CHECK(run_cli("lb --n 5 --m 2 --q 3 --move-times 4,5.16,6.66").exit_code == 1);
  CHECK(run_cli("min-uavs --n 10 --m 5 --budget 1 --move-times 4,5.16,6.66")
            .exit_code == 1);
}

TEST_CASE("cli oracle: reference optimum and the cap") {
  auto r = run_cli("oracle --n 4 --m 4 --q 2 --move-times 4,5.16,6.66");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK_THAT(j.at("optimum").get<double>(), WithinAbs(32.64, 1e-9));
  CHECK(j.at("certified").get<bool>());

  CHECK(run_cli("oracle --n 50 --m 50 --q 2 --move-times 4,5.16,6.66").exit_code == 1);
}

TEST_CASE("cli emit-mip: writes the model file") {
  auto lpf = temp_file("model.lp");
  auto r = run_cli("emit-mip --n 2 --m 2 --q 1 --move-times 4,5.16,6.66 --out " +
                   lpf.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream f(lpf);
  REQUIRE(f);
  std::string first;
  std::getline(f, first);
  CHECK(first.rfind("\\", 0) == 0);
}

TEST_CASE("cli bench: medium suite CSV carries the reference values") {
  auto r = run_cli("bench --suite medium");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "case,LB,Z_NOPP,wall_time_s,optimality_gap_pct,absolute_gap_s");
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cols;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    rows.push_back(cols);
  }
  REQUIRE(rows.size() == 4);
  CHECK(rows[2][0] == "25x40q2");
  CHECK(rows[2][1] == "2547.00");
  CHECK(rows[2][2] == "2552.16");
  CHECK(rows[2][5] == "5.16");
  CHECK(rows[0][0] == "11x10q3");
  CHECK(rows[0][2] == "179.32");
  CHECK(rows[1][2] == "166.68");
}

TEST_CASE("cli bench: small suite adds oracle columns, large hits its rows") {
  auto small = run_cli("bench --suite small");
  REQUIRE(small.exit_code == 0);
  std::istringstream in(small.out);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "case,LB,Z_NOPP,wall_time_s,optimality_gap_pct,absolute_gap_s,"
        "z_exact,exact_certified");
  std::map<std::string, std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cols;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    rows[cols[0]] = cols;
  }
  REQUIRE(rows.size() == 13);
  CHECK(rows.at("9x9q2")[2] == "202.28");
  CHECK(rows.at("5x4q2")[6] == "41.80");   // certified optimum
  CHECK(rows.at("5x4q2")[7] == "true");
  CHECK(rows.at("7x7q2").size() == 7);     // above the cap: blank oracle cols

  auto large = run_cli("bench --suite large");
  REQUIRE(large.exit_code == 0);
  CHECK(large.out.find("75x75q2,14424.08,14429.24") != std::string::npos);
  CHECK(large.out.find("100x100q2,25680.00,25680.00") != std::string::npos);
}

TEST_CASE("cli: identical invocations produce identical bytes") {
  const std::string args = "plan --n 7 --m 6 --q 2 --move-times 4,5.16,6.66";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("cli: help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("plan --help").exit_code == 0);
}

TEST_CASE("cli plan: svg output matches the golden rendering") {
  auto svgf = temp_file("golden_check.svg");
  REQUIRE(run_cli("plan --n 4 --m 4 --q 2 --move-times 4,5.16,6.66 --out /dev/null --svg " +
                  svgf.string()).exit_code == 0);
  std::ifstream got_f(svgf, std::ios::binary), want_f(
      std::string(MUCPP_GOLDEN_DIR) + "/plan_4x4q2.svg", std::ios::binary);
  std::ostringstream got, want;
  got << got_f.rdbuf();
  want << want_f.rdbuf();
  CHECK(got.str() == want.str());
}

TEST_CASE("cli validate: a lattice-breaking but well-formed plan exits 1") {
  // Hamiltonian 2x2 tour using an against-wind move: every structural
  // check passes, yet the makespan sits off {LB, LB+Tp}.
  nlohmann::json j = {
      {"instance", {{"n", 2}, {"m", 2}, {"q", 1},
                    {"neighborhood", "von_neumann"},
                    {"move_times", {4.0, 5.16, 6.66}}}},
      {"move_times", {4.0, 5.16, 6.66}},
      {"paths", {{{"uav", 1},
                  {"cells", {{1, 1}, {2, 1}, {2, 2}, {1, 2}}},
                  {"moves", {"S", "U", "O"}},
                  {"mission_time", 4.0 + 5.16 + 6.66}}}},
      {"operation_time", 4.0 + 5.16 + 6.66},
      {"lb", 4.0 + 2 * 5.16},
      {"gap", "zero"}};
  auto f = temp_file("offlattice.json");
  std::ofstream(f) << j.dump();
  auto res = run_cli("validate " + f.string());
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("GapViolation") != std::string::npos);
}
