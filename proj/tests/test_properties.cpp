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

#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"
#include "sttt/census.hpp"

namespace {

constexpr std::size_t kCases = 2000;

void check(const props::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.cases == kCases);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("group action law on boards") { check(props::action_law(kCases, 101)); }
TEST_CASE("X count is invariant") { check(props::x_count_invariance(kCases, 102)); }
TEST_CASE("canonical form is constant on orbits") { check(props::canonical_constancy(kCases, 103)); }
TEST_CASE("acted games remain valid for n = 2") { check(props::games_preserved(kCases, 104, 2)); }
TEST_CASE("bitstring round trip") { check(props::bitstring_roundtrip(kCases, 105)); }
TEST_CASE("replay commutes with the action for n = 2") { check(props::replay_commutes(kCases, 106, 2)); }

// For n = 3 an odd power of sigma shifts the outer ring by one cell, which
// sends the top row {1, 8, 7} to {2, 1, 8}, not a line. A field won along the
// row stays open in the image and the dictation rule diverges.
TEST_CASE("n = 3: odd powers of sigma do not preserve games") {
  const sttt::DihedralGroup group(3);
  const auto game = sttt::parse_moves("7:8,8:7,7:1,1:7,7:7,3:6");
  REQUIRE(sttt::is_valid_game(game, 3).valid);
  const auto acted = props::map_moves(game, group.element(1, 0));
  const auto v = sttt::is_valid_game(acted, 3);
  CHECK_FALSE(v.valid);
  CHECK(v.failed_index == 5u);

  const auto board = sttt::final_board(game, 3);
  CHECK(board.x_count_in_field(7) == 3);
  CHECK(sttt::replay(game, 3).field_status(7) == sttt::FieldStatus::Won);
  CHECK(sttt::replay(sttt::MoveList(acted.begin(), acted.begin() + 5), 3).field_status(8) ==
        sttt::FieldStatus::Open);
}

TEST_CASE("n = 3: the geometric subgroup preserves games") {
  // sigma^2 is the quarter turn and rho the mirror, so these eight elements
  // map lines to lines.
  const sttt::DihedralGroup group(3);
  props::Generator gen(109, 3);
  for (int i = 0; i < 1000; ++i) {
    const auto game = gen.game(3);
    for (const auto& g : group.elements()) {
      if (g.a % 2) continue;
      INFO(sttt::format_moves(game) << " under " << g.name());
      CHECK(sttt::is_valid_game(props::map_moves(game, g), 3).valid);
    }
  }
}

TEST_CASE("game orbits and board orbits divide the group order") {
  props::Generator gen(107, 2);
  for (int i = 0; i < 300; ++i) {
    const auto& group = gen.group();
    const auto game = gen.game(2);
    const auto games = sttt::game_orbit(game, group).size();
    const auto boards = sttt::board_orbit(sttt::final_board(game, 2), group).size();
    CHECK(group.order() % games == 0);
    CHECK(group.order() % boards == 0);
    CHECK(boards <= games);
  }
  const sttt::DihedralGroup three(3);
  for (int i = 0; i < 300; ++i) {
    CHECK(three.order() % sttt::board_orbit(gen.board(3), three).size() == 0);
  }
}

TEST_CASE("a broken action is caught") {
  // Sanity check of the harness: swapping two labels that are not a symmetry
  // must break the action law for some board.
  const sttt::DihedralGroup group(2);
  const auto bogus = sttt::Permutation::from_cycles(4, {{1, 2}});
  bool caught = false;
  props::Generator gen(108);
  for (int i = 0; i < 100 && !caught; ++i) {
    const auto b = gen.board(2);
    caught = sttt::canonical_form(sttt::act_board(b, bogus), group) != sttt::canonical_form(b, group);
  }
  CHECK(caught);
}
