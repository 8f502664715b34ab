#include <catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "mucpp/mip.hpp"

using namespace mucpp;

namespace {
const MoveTimes kRef{4.0, 5.16, 6.66, std::nullopt, std::nullopt};

std::map<std::string, int> constraint_counts(const std::string& lp) {
  // constraint lines start with a single space and "name_...:"
  std::map<std::string, int> counts;
  std::istringstream in(lp);
  std::string line;
  bool in_constraints = false;
  while (std::getline(in, line)) {
    if (line == "Subject To") { in_constraints = true; continue; }
    if (line == "Binaries") break;
    if (!in_constraints || line.empty() || line[0] == '\\') continue;
    if (line.size() > 1 && line[0] == ' ' && line[1] != ' ') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string name = line.substr(1, colon - 1);
      counts[name.substr(0, name.find('_'))]++;
    }
  }
  return counts;
}

int family_headers(const std::string& lp) {
  std::istringstream in(lp);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (line.rfind("\\ family ", 0) == 0) ++n;
  return n;
}
}  // namespace

TEST_CASE("emit: 2x2 single-UAV model has the hand-counted index sets") {
  std::string lp = mip::emit(GridSpec{2, 2, 1}, kRef);
  auto c = constraint_counts(lp);
  // 4 steps; 4 cells; one UAV
  CHECK(c["occ"] == 4);        // per step
  CHECK(c["visit"] == 4);      // per cell
  CHECK(c["enter"] == 12);     // cells x steps 2..4
  CHECK(c["leave"] == 12);     // cells x steps 1..3
  CHECK(c["wind"] == 3);       // column 1, steps 2..4
  CHECK(c["against"] == 3);    // column 2
  CHECK(c["crossup"] == 3);    // row 1
  CHECK(c["crossdown"] == 3);  // row 2
  CHECK(c["onemove"] == 3);    // steps 2..4
  CHECK(c["mission"] == 1);    // per UAV
  CHECK(family_headers(lp) == 10);
}

TEST_CASE("emit: every family is present for a larger instance") {
  std::string lp = mip::emit(GridSpec{4, 3, 2}, kRef);
  auto c = constraint_counts(lp);
  const int steps = 12;
  CHECK(c["occ"] == 2 * steps);
  CHECK(c["visit"] == 12);
  CHECK(c["enter"] == 12 * 2 * (steps - 1));
  CHECK(c["leave"] == 12 * 2 * (steps - 1));
  CHECK(c["wind"] == 3 * 2 * (steps - 1));
  CHECK(c["against"] == 3 * 2 * (steps - 1));
  CHECK(c["crossup"] == 2 * 2 * (steps - 1));
  CHECK(c["crossdown"] == 2 * 2 * (steps - 1));
  CHECK(c["onemove"] == 2 * (steps - 1));
  CHECK(c["mission"] == 2);
  CHECK(family_headers(lp) == 10);
}

TEST_CASE("emit: structure markers and objective") {
  std::string lp = mip::emit(GridSpec{2, 2, 1}, kRef);
  CHECK(lp.find("Minimize\n obj: t_opr\n") != std::string::npos);
  CHECK(lp.find("Subject To\n") != std::string::npos);
  CHECK(lp.find("Binaries\n") != std::string::npos);
  CHECK(lp.rfind("End\n") == lp.size() - 4);
  CHECK(lp.find("x_1_1_1_1") != std::string::npos);
  CHECK(lp.find("y_1_1") != std::string::npos);
}

TEST_CASE("emit: byte-stable across runs") {
  CHECK(mip::emit(GridSpec{3, 2, 2}, kRef) == mip::emit(GridSpec{3, 2, 2}, kRef));
}
