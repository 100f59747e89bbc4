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

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sttt/spiral.hpp"

using sttt::NumberedSquare;

// Reference grid for n = 5, row-major.
static const std::vector<int> kNumbered5 = {
    1,  16, 15, 14, 13,
    2,  17, 24, 23, 12,
    3,  18, 25, 22, 11,
    4,  19, 20, 21, 10,
    5,  6,  7,  8,  9,
};

TEST_CASE("spiral numbering of small squares") {
  SECTION("n = 1 is a single label") {
    const NumberedSquare sq(1);
    CHECK(sq.label_at(0, 0) == 1);
    CHECK(sq.layer_count() == 1);
    CHECK(sq.level_set(1) == std::vector<int>{1});
  }
  SECTION("n = 2 goes down first") {
    const NumberedSquare sq(2);
    CHECK(sq.row_major_labels() == std::vector<int>{1, 4, 2, 3});
    CHECK(sq.cell_of(2) == sttt::Cell{1, 0});
  }
  SECTION("n = 3 walked by hand") {
    const NumberedSquare sq(3);
    CHECK(sq.row_major_labels() == std::vector<int>{1, 8, 7, 2, 9, 6, 3, 4, 5});
    CHECK(sq.level_set(2).size() == 8);
    CHECK(sq.level_set(1) == std::vector<int>{9});
  }
  SECTION("n = 5 matches the published grid") {
    CHECK(NumberedSquare(5).row_major_labels() == kNumbered5);
  }
}

TEST_CASE("level sets for n = 5") {
  const NumberedSquare sq(5);
  CHECK(sq.level_set(1) == std::vector<int>{25});
  CHECK(sq.level_set(2) == std::vector<int>{17, 18, 19, 20, 21, 22, 23, 24});
  std::vector<int> outer(16);
  std::iota(outer.begin(), outer.end(), 1);
  CHECK(sq.level_set(3) == outer);
  CHECK(NumberedSquare(2).level_set(1) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("invalid sizes and layers") {
  CHECK_THROWS_AS(NumberedSquare(0), sttt::InvalidSize);
  CHECK_THROWS_AS(NumberedSquare(-3), sttt::InvalidSize);
  const NumberedSquare sq(5);
  CHECK_THROWS_AS(sq.level_set(0), sttt::InvalidLayer);
  CHECK_THROWS_AS(sq.level_set(4), sttt::InvalidLayer);
}

TEST_CASE("spiral invariants for n = 1..12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const NumberedSquare sq(n);

    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        REQUIRE(sq.label_at(r, c) == oracle::spiral_label(n, r, c));
        REQUIRE(sq.cell_of(sq.label_at(r, c)) == sttt::Cell{r, c});
      }
    }
    if (n >= 2) CHECK(sq.cell_of(2) == sttt::Cell{1, 0});

    REQUIRE(sq.layer_count() == (n + 1) / 2);
    std::set<int> seen;
    std::size_t total = 0;
    for (int k = 1; k <= sq.layer_count(); ++k) {
      const auto& ring = sq.level_set(k);
      const std::size_t expected =
          n % 2 ? (k == 1 ? 1u : 8u * static_cast<std::size_t>(k - 1))
                : 4u + 8u * static_cast<std::size_t>(k - 1);
      CHECK(ring.size() == expected);
      for (std::size_t i = 1; i < ring.size(); ++i) CHECK(ring[i] == ring[i - 1] + 1);
      for (int label : ring) {
        CHECK(sq.layer_of(label) == k);
        seen.insert(label);
      }
      total += ring.size();
    }
    CHECK(total == static_cast<std::size_t>(n * n));
    CHECK(seen.size() == static_cast<std::size_t>(n * n));
    CHECK(sq == NumberedSquare(n));
  }
}

TEST_CASE("reading order conversion for n = 2") {
  const NumberedSquare sq(2);
  CHECK(sq.reading_index(1) == 1);
  CHECK(sq.reading_index(2) == 3);
  CHECK(sq.reading_index(3) == 4);
  CHECK(sq.reading_index(4) == 2);
  for (int i = 1; i <= 4; ++i) CHECK(sq.reading_index(sq.label_at_reading_index(i)) == i);
}
