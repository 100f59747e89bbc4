// Copyright 2026 The sttt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "sttt/census.hpp"
#include "sttt/game.hpp"
#include "sttt/symmetry.hpp"

namespace {

struct Verdict {
  bool passed = true;
  std::vector<std::string> details;

  void expect(bool ok, const std::string& what) {
    if (!ok) passed = false;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("note " + what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict dihedral_orders() {
  Verdict v;
  const auto start = Clock::now();
  // n -> LCM of the ring sizes 4n-4, 4n-12, ...
  const std::map<int, std::uint64_t> expected = {{2, 4},  {3, 8},  {4, 12}, {5, 16},
                                                 {6, 60}, {7, 48}, {8, 420}};
  for (const auto& [n, m] : expected) {
    const auto report = sttt::verify_dihedral(n);
    const auto sigma_order = sttt::perm_order(sttt::full_rotation(sttt::NumberedSquare(n)));
    std::string failed;
    for (const auto& r : report.relations) {
      if (!r.passed) failed += " [" + r.name + "]";
    }
    v.expect(report.passed(), "n=" + std::to_string(n) + " relations" +
                                  (failed.empty() ? " all pass" : failed));
    v.expect(sttt::dihedral_order(n) == m && sigma_order == m,
             "n=" + std::to_string(n) + " m=" + std::to_string(sttt::dihedral_order(n)) +
                 " order(sigma)=" + std::to_string(sigma_order) + " expected " +
                 std::to_string(m));
  }
  v.note("n=8: LCM(28,20,12,4) = 420; a listed value of 84 would contradict the formula");
  const double elapsed = seconds_since(start);
  v.expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s < 1 s");
  return v;
}

Verdict golden_grids() {
  Verdict v;
  const sttt::NumberedSquare sq(5);
  const std::vector<int> numbered = {1, 16, 15, 14, 13, 2, 17, 24, 23, 12, 3, 18, 25,
                                     22, 11, 4, 19, 20, 21, 10, 5, 6, 7, 8, 9};
  const std::vector<int> rotated = {16, 15, 14, 13, 12, 1, 24, 23, 22, 11, 2, 17, 25,
                                    21, 10, 3, 18, 19, 20, 9, 4, 5, 6, 7, 8};
  const std::vector<int> reflected = {1,  2,  3,  4,  5,  16, 17, 18, 19, 6,  15, 24, 25,
                                      20, 7,  14, 23, 22, 21, 8,  13, 12, 11, 10, 9};
  v.expect(sq.row_major_labels() == numbered, "5x5 numbered square cell-for-cell");
  v.expect(sttt::act_on_square(sq, sttt::full_rotation(sq)) == rotated, "5x5 square after sigma");
  v.expect(sttt::act_on_square(sq, sttt::full_reflection(sq)) == reflected, "5x5 square after rho");
  return v;
}

Verdict worked_example() {
  Verdict v;
  const sttt::DihedralGroup group(2);
  const sttt::MoveList game = {{3, 1}, {1, 1}, {1, 3}, {3, 3}};
  const std::set<sttt::MoveList> listed = {
      {{3, 1}, {1, 1}, {1, 3}, {3, 3}},
      {{1, 3}, {3, 3}, {3, 1}, {1, 1}},
      {{4, 2}, {2, 2}, {2, 4}, {4, 4}},
      {{2, 4}, {4, 4}, {4, 2}, {2, 2}},
  };
  const auto orbit = sttt::game_orbit(game, group);
  v.expect(orbit == listed, "game orbit has exactly the 4 listed games (" +
                                std::to_string(orbit.size()) + ")");
  const auto boards = sttt::orbit_bitstrings(sttt::final_board(game, 2), group);
  v.expect(boards == std::vector<std::string>{"0000011001100000", "1001000000001001"},
           "final-board orbit is {0000011001100000, 1001000000001001}");
  return v;
}

Verdict census_reproduction() {
  Verdict v;
  const auto start = Clock::now();
  const auto boards = sttt::enumerate_winning_boards(2);
  const auto classes = sttt::partition_classes(boards, 2);
  const auto hist = sttt::size_histogram(classes);
  v.expect(boards.size() == 1902, "winning boards: " + std::to_string(boards.size()) + " (1902)");
  std::string h;
  for (const auto& [size, count] : hist) h += " " + std::to_string(size) + ":" + std::to_string(count);
  v.expect(hist == std::map<std::size_t, std::size_t>{{2, 1}, {4, 19}, {8, 228}},
           "histogram" + h + " (2:1 4:19 8:228)");

  const std::string text = read_file(std::string(STTT_DATA_DIR) + "/reference_classes.txt");
  const auto parsed = sttt::parse_listing(text);
  auto diff = sttt::diff_census(classes, parsed);
  sttt::note_declared_counts(diff, parsed, text, "reference");
  v.expect(diff.matches(), "diff against transcribed list: " +
                               std::to_string(diff.only_computed.size()) + " only computed, " +
                               std::to_string(diff.only_parsed.size()) + " only listed, " +
                               std::to_string(diff.mismatches.size()) + " mismatched");
  for (const auto& n : diff.notes) v.note(n);
  const double elapsed = seconds_since(start);
  v.expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s < 60 s");
  return v;
}

Verdict property_suites() {
  Verdict v;
  constexpr std::size_t kCases = 10000;
  const std::vector<std::pair<std::string, std::function<props::Outcome()>>> suites = {
      {"group-action law on boards", [] { return props::action_law(kCases, 1); }},
      {"X-count invariance", [] { return props::x_count_invariance(kCases, 2); }},
      {"canonical form orbit-constancy", [] { return props::canonical_constancy(kCases, 3); }},
      {"acted valid games remain valid (n in {2,3})", [] { return props::games_preserved(kCases, 4); }},
      {"bitstring round trip", [] { return props::bitstring_roundtrip(kCases, 5); }},
      {"final_board . act_game = act_board . final_board", [] { return props::replay_commutes(kCases, 6); }},
  };
  for (const auto& [name, run] : suites) {
    const auto o = run();
    v.expect(o.passed() && o.cases == kCases,
             name + ": " + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) +
                 (o.failures ? " first failure: " + o.first_failure : ""));
  }
  for (int n : {2, 3}) {
    const auto games = props::games_preserved(kCases, 4, n);
    const auto replay = props::replay_commutes(kCases, 6, n);
    v.note("n=" + std::to_string(n) + " only: games valid " +
           std::to_string(games.cases - games.failures) + "/" + std::to_string(games.cases) +
           ", replay commutes " + std::to_string(replay.cases - replay.failures) + "/" +
           std::to_string(replay.cases));
  }
  v.note("n=3 counterexample 7:8,8:7,7:1,1:7,7:7,3:6 under sigma: field 8 receives "
         "labels {2,1,8}, not a line, so it stays open and move 6 is illegal");
  return v;
}

Verdict orbit_closure() {
  Verdict v;
  const auto parsed = sttt::parse_listing(read_file(std::string(STTT_DATA_DIR) + "/reference_classes.txt"));
  const sttt::DihedralGroup group(2);
  std::size_t good = 0;
  for (const auto& c : parsed) good += sttt::class_is_orbit(c, group);
  v.expect(parsed.size() == 248 && good == 248,
           std::to_string(good) + "/" + std::to_string(parsed.size()) + " listed classes regenerate themselves");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 dihedral verification and orders, n = 2..8", dihedral_orders},
      {"AC2 golden numbered square, rotation, reflection", golden_grids},
      {"AC3 worked example game orbit and board orbit", worked_example},
      {"AC4 census of winning 2x2 boards", census_reproduction},
      {"AC5 property suites, 10^4 cases each", property_suites},
      {"AC6 orbit closure of every listed class", orbit_closure},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    failed += !v.passed;
    std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << name << "  (" << std::fixed
              << std::setprecision(2) << seconds_since(start) << " s)\n";
    for (const auto& d : v.details) std::cout << "         " << d << "\n";
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed\n"
                       : std::string("acceptance: all criteria passed\n"));
  return failed ? 1 : 0;
}
