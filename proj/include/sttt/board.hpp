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

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sttt/error.hpp"
#include "sttt/spiral.hpp"
#include "sttt/symmetry.hpp"

namespace sttt {

// Impartial play: both players mark X, so a cell is either empty or X.
enum class CellState : std::uint8_t { Empty = 0, X = 1 };

/// An n-board: n^2 fields of n^2 positions each, both addressed by spiral
/// label. Storage is the flat list a_{1,1}, ..., a_{1,n^2}, a_{2,1}, ...
class Board {
 public:
  Board() = default;
  explicit Board(int n) : n_(n) {
    if (n < 1) throw InvalidSize(n);
    cells_.assign(static_cast<std::size_t>(n) * n * n * n, CellState::Empty);
  }

  int n() const { return n_; }
  int labels() const { return n_ * n_; }
  std::size_t cell_count() const { return cells_.size(); }

  CellState at(int field, int pos) const { return cells_[offset(field, pos)]; }
  void set(int field, int pos, CellState s) { cells_[offset(field, pos)] = s; }
  bool is_x(int field, int pos) const { return at(field, pos) == CellState::X; }

  std::size_t x_count() const {
    return static_cast<std::size_t>(
        std::count(cells_.begin(), cells_.end(), CellState::X));
  }

  std::size_t x_count_in_field(int field) const {
    const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(offset(field, 1));
    return static_cast<std::size_t>(
        std::count(begin, begin + labels(), CellState::X));
  }

  const std::vector<CellState>& cells() const { return cells_; }

  friend bool operator==(const Board&, const Board&) = default;
  friend auto operator<=>(const Board&, const Board&) = default;

 private:
  std::size_t offset(int field, int pos) const {
    const int count = labels();
    if (field < 1 || field > count || pos < 1 || pos > count) {
      throw Error("cell (" + std::to_string(field) + "," + std::to_string(pos) +
                  ") out of range for n = " + std::to_string(n_));
    }
    return static_cast<std::size_t>((field - 1) * count + (pos - 1));
  }

  int n_ = 0;
  std::vector<CellState> cells_;
};

/// Content at (i, j) lands on (g(i), g(j)).
inline Board act_board(const Board& b, const Permutation& g) {
  const int count = b.labels();
  if (g.size() != count) {
    throw SizeMismatch("group element built for " + std::to_string(g.size()) +
                       " labels, board has " + std::to_string(count));
  }
  Board out(b.n());
  for (int i = 1; i <= count; ++i) {
    for (int j = 1; j <= count; ++j) {
      if (b.is_x(i, j)) out.set(g(i), g(j), CellState::X);
    }
  }
  return out;
}

inline Board act_board(const Board& b, const GroupElement& g) {
  return act_board(b, g.perm);
}

// Serialization: bit k of the string is cell (field, pos) with both taken in
// reading order (row-major over the grid), so for n = 2 the string reads
// a11 a12 a13 a14 a21 ... a44 with 1=TL, 2=TR, 3=BL, 4=BR. The spiral <->
// reading conversion lives only in this pair of functions.

inline std::string to_bitstring(const Board& b, const NumberedSquare& sq) {
  if (sq.n() != b.n()) throw SizeMismatch("square/board size");
  const int count = b.labels();
  std::string bits(b.cell_count(), '0');
  for (int field = 1; field <= count; ++field) {
    const int rf = sq.reading_index(field) - 1;
    for (int pos = 1; pos <= count; ++pos) {
      if (!b.is_x(field, pos)) continue;
      const int rp = sq.reading_index(pos) - 1;
      bits[static_cast<std::size_t>(rf * count + rp)] = '1';
    }
  }
  return bits;
}

inline std::string to_bitstring(const Board& b) {
  return to_bitstring(b, NumberedSquare(b.n()));
}

inline Board from_bitstring(std::string_view bits, const NumberedSquare& sq) {
  const int count = sq.size();
  const std::size_t expected = static_cast<std::size_t>(count) * count;
  if (bits.size() != expected) {
    throw ParseError("bitstring has length " + std::to_string(bits.size()) +
                     ", expected " + std::to_string(expected));
  }
  Board b(sq.n());
  for (std::size_t k = 0; k < bits.size(); ++k) {
    const char ch = bits[k];
    if (ch == '0') continue;
    if (ch != '1') {
      throw ParseError(std::string("invalid character '") + ch +
                       "' at offset " + std::to_string(k) +
                       " (only 0 and 1 are allowed)");
    }
    const int rf = static_cast<int>(k) / count + 1;
    const int rp = static_cast<int>(k) % count + 1;
    b.set(sq.label_at_reading_index(rf), sq.label_at_reading_index(rp),
          CellState::X);
  }
  return b;
}

inline Board from_bitstring(std::string_view bits, int n) {
  return from_bitstring(bits, NumberedSquare(n));
}

/// Recovers n from a bitstring of length n^4.
inline int size_from_bitstring(std::string_view bits) {
  for (int n = 1; static_cast<std::size_t>(n) * n * n * n <= bits.size(); ++n) {
    if (static_cast<std::size_t>(n) * n * n * n == bits.size()) return n;
  }
  throw ParseError("bitstring length " + std::to_string(bits.size()) +
                   " is not a fourth power");
}

inline std::set<Board> board_orbit(const Board& b, const DihedralGroup& group) {
  if (group.n() != b.n()) throw SizeMismatch("group/board size");
  std::set<Board> orbit;
  for (const auto& g : group.elements()) orbit.insert(act_board(b, g));
  return orbit;
}

inline std::set<Board> board_orbit(const Board& b) {
  return board_orbit(b, DihedralGroup(b.n()));
}

/// Serialized orbit members, sorted lexicographically and deduplicated.
inline std::vector<std::string> orbit_bitstrings(const Board& b,
                                                 const DihedralGroup& group) {
  std::set<std::string> out;
  for (const auto& g : group.elements()) {
    out.insert(to_bitstring(act_board(b, g), group.square()));
  }
  return {out.begin(), out.end()};
}

/// Lexicographically least serialization over the orbit.
inline std::string canonical_form(const Board& b, const DihedralGroup& group) {
  if (group.n() != b.n()) throw SizeMismatch("group/board size");
  std::string best;
  for (const auto& g : group.elements()) {
    std::string s = to_bitstring(act_board(b, g), group.square());
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

inline std::string canonical_form(const Board& b) {
  return canonical_form(b, DihedralGroup(b.n()));
}

}  // namespace sttt
