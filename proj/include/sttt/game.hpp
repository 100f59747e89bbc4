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

#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sttt/board.hpp"
#include "sttt/error.hpp"
#include "sttt/spiral.hpp"
#include "sttt/symmetry.hpp"

namespace sttt {

/// alpha_{field,pos}: an X placed at spiral position `pos` of field `field`.
struct Move {
  int field = 0;
  int pos = 0;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

using MoveList = std::vector<Move>;

enum class FieldStatus { Open, Won, Full };

inline const char* to_string(FieldStatus s) {
  switch (s) {
    case FieldStatus::Open: return "open";
    case FieldStatus::Won: return "won";
    case FieldStatus::Full: return "full";
  }
  return "?";
}

class RuleViolation : public Error {
 public:
  enum class Kind { TerminalGame, OutOfRange, ClosedField, WrongField, OccupiedCell };

  RuleViolation(Kind kind, const std::string& what)
      : Error(std::string(rule_name(kind)) + ": " + what), kind_(kind) {}

  Kind kind() const { return kind_; }

  static const char* rule_name(Kind kind) {
    switch (kind) {
      case Kind::TerminalGame: return "terminal game";
      case Kind::OutOfRange: return "out of range";
      case Kind::ClosedField: return "closed field";
      case Kind::WrongField: return "wrong field";
      case Kind::OccupiedCell: return "occupied cell";
    }
    return "?";
  }

 private:
  Kind kind_;
};

/// Spiral numbering plus the n-in-a-row lines of an n x n grid (rows,
/// columns, both diagonals) expressed as spiral labels. Shared by fields and
/// the board since both use the same grid.
class GridLines {
 public:
  explicit GridLines(int n) : square_(n) {
    std::vector<int> diag, anti;
    for (int r = 0; r < n; ++r) {
      std::vector<int> row, col;
      for (int c = 0; c < n; ++c) {
        row.push_back(square_.label_at(r, c));
        col.push_back(square_.label_at(c, r));
      }
      lines_.push_back(std::move(row));
      if (n > 1) lines_.push_back(std::move(col));
      diag.push_back(square_.label_at(r, r));
      anti.push_back(square_.label_at(r, n - 1 - r));
    }
    if (n > 1) {
      lines_.push_back(std::move(diag));
      lines_.push_back(std::move(anti));
    }
    through_.resize(static_cast<std::size_t>(square_.size()) + 1);
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      for (int label : lines_[i]) through_[static_cast<std::size_t>(label)].push_back(i);
    }
  }

  const NumberedSquare& square() const { return square_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }

  /// True if some line through `label` is fully marked.
  template <typename IsMarked>
  bool completes_line(int label, IsMarked&& marked) const {
    for (std::size_t i : through_[static_cast<std::size_t>(label)]) {
      bool full = true;
      for (int other : lines_[i]) {
        if (!marked(other)) {
          full = false;
          break;
        }
      }
      if (full) return true;
    }
    return false;
  }

 private:
  NumberedSquare square_;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<std::size_t>> through_;
};

class GameState;
inline GameState apply_move(const GameState& s, Move mv);

/// Immutable snapshot of an impartial misere game. apply_move returns a new
/// state; the player who completes a line of board marks loses.
class GameState {
 public:
  explicit GameState(int n)
      : lines_(std::make_shared<const GridLines>(n)), board_(n) {
    const auto count = static_cast<std::size_t>(n) * n;
    status_.assign(count + 1, FieldStatus::Open);
    marks_.assign(count + 1, CellState::Empty);
  }

  int n() const { return board_.n(); }
  const Board& board() const { return board_; }
  const MoveList& history() const { return history_; }
  const GridLines& geometry() const { return *lines_; }

  FieldStatus field_status(int field) const { return status_.at(checked(field)); }
  CellState board_mark(int field) const { return marks_.at(checked(field)); }
  bool field_open(int field) const { return field_status(field) == FieldStatus::Open; }

  bool terminal() const { return terminal_; }
  /// Every field closed without a board line. Unreachable in practice since
  /// closed fields are always marked, but the engine handles it.
  bool draw() const { return draw_; }
  bool board_line_complete() const { return terminal_ && !draw_; }

  /// 0 if the first mover lost, 1 if the second; empty unless a board line
  /// was completed.
  std::optional<int> loser() const {
    if (!board_line_complete()) return std::nullopt;
    return static_cast<int>((history_.size() - 1) % 2);
  }

  /// Field the next move is forced into; empty means any open field.
  std::optional<int> dictated_field() const {
    if (history_.empty()) return std::nullopt;
    const int j = history_.back().pos;
    if (field_open(j)) return j;
    return std::nullopt;
  }

  friend GameState apply_move(const GameState& s, Move mv);

 private:
  std::size_t checked(int field) const {
    if (field < 1 || field > board_.labels()) {
      throw Error("field " + std::to_string(field) + " out of range");
    }
    return static_cast<std::size_t>(field);
  }

  std::shared_ptr<const GridLines> lines_;
  Board board_;
  MoveList history_;
  std::vector<FieldStatus> status_;  // by field label, index 0 unused
  std::vector<CellState> marks_;     // by field label, index 0 unused
  bool terminal_ = false;
  bool draw_ = false;
};

inline std::vector<Move> legal_moves(const GameState& s) {
  if (s.terminal()) {
    throw RuleViolation(RuleViolation::Kind::TerminalGame,
                        "no moves are available after the game has ended");
  }
  const int count = s.board().labels();
  std::vector<Move> moves;
  auto add_field = [&](int field) {
    for (int pos = 1; pos <= count; ++pos) {
      if (!s.board().is_x(field, pos)) moves.push_back({field, pos});
    }
  };
  if (auto forced = s.dictated_field()) {
    add_field(*forced);
  } else {
    for (int field = 1; field <= count; ++field) {
      if (s.field_open(field)) add_field(field);
    }
  }
  return moves;
}

inline GameState apply_move(const GameState& s, Move mv) {
  using Kind = RuleViolation::Kind;
  const int count = s.board().labels();
  const std::string where = "alpha_{" + std::to_string(mv.field) + "," +
                            std::to_string(mv.pos) + "}";
  if (s.terminal()) {
    throw RuleViolation(Kind::TerminalGame, where + " played after the game ended");
  }
  if (mv.field < 1 || mv.field > count || mv.pos < 1 || mv.pos > count) {
    throw RuleViolation(Kind::OutOfRange, where + " is not on a " +
                                              std::to_string(s.n()) + "-board");
  }
  if (!s.field_open(mv.field)) {
    throw RuleViolation(Kind::ClosedField, where + ": field " +
                                               std::to_string(mv.field) + " is " +
                                               to_string(s.field_status(mv.field)));
  }
  if (auto forced = s.dictated_field(); forced && *forced != mv.field) {
    throw RuleViolation(Kind::WrongField, where + ": the previous move sends play to field " +
                                              std::to_string(*forced));
  }
  if (s.board().is_x(mv.field, mv.pos)) {
    throw RuleViolation(Kind::OccupiedCell, where + " is already marked");
  }

  GameState next = s;
  next.board_.set(mv.field, mv.pos, CellState::X);
  next.history_.push_back(mv);

  const GridLines& geo = *s.lines_;
  const Board& b = next.board_;
  const auto f = static_cast<std::size_t>(mv.field);
  if (geo.completes_line(mv.pos, [&](int p) { return b.is_x(mv.field, p); })) {
    next.status_[f] = FieldStatus::Won;
  } else if (b.x_count_in_field(mv.field) == static_cast<std::size_t>(count)) {
    // A full field without a line goes to the player with more marks; with
    // only X on the board that is always X.
    next.status_[f] = FieldStatus::Full;
  }

  if (next.status_[f] != FieldStatus::Open) {
    next.marks_[f] = CellState::X;
    if (geo.completes_line(mv.field, [&](int field) {
          return next.marks_[static_cast<std::size_t>(field)] == CellState::X;
        })) {
      next.terminal_ = true;
      return next;
    }
    bool any_open = false;
    for (int field = 1; field <= count; ++field) any_open = any_open || next.field_open(field);
    if (!any_open) {
      next.terminal_ = true;
      next.draw_ = true;
    }
  }
  return next;
}

struct GameValidation {
  bool valid = true;
  std::optional<std::size_t> failed_index;  // 0-based index of the bad move
  std::string reason;
};

inline GameValidation is_valid_game(const MoveList& moves, int n) {
  GameState s(n);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      s = apply_move(s, moves[i]);
    } catch (const RuleViolation& e) {
      return {false, i, e.what()};
    }
  }
  return {};
}

inline GameState replay(const MoveList& moves, int n) {
  GameState s(n);
  for (const Move& mv : moves) s = apply_move(s, mv);
  return s;
}

inline Board final_board(const MoveList& moves, int n) { return replay(moves, n).board(); }

inline MoveList act_game(const MoveList& moves, const GroupElement& g, int n) {
  if (g.perm.size() != n * n) throw SizeMismatch("group element/game size");
  if (auto check = is_valid_game(moves, n); !check.valid) {
    throw Error("cannot act on an invalid game: move " +
                std::to_string(*check.failed_index + 1) + ": " + check.reason);
  }
  MoveList out;
  out.reserve(moves.size());
  for (const Move& mv : moves) out.push_back({g(mv.field), g(mv.pos)});
#ifndef NDEBUG
  if (auto check = is_valid_game(out, n); !check.valid) {
    throw VerificationFailure("games are preserved by the group action",
                              g.name() + " produced an invalid game: " + check.reason);
  }
#endif
  return out;
}

inline std::set<MoveList> game_orbit(const MoveList& moves, const DihedralGroup& group) {
  std::set<MoveList> orbit;
  for (const auto& g : group.elements()) orbit.insert(act_game(moves, g, group.n()));
  return orbit;
}

/// Parses "3:1,1:1,1:3" into moves; whitespace is ignored.
inline MoveList parse_moves(std::string_view text) {
  MoveList moves;
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') cleaned += ch;
  }
  if (cleaned.empty()) return moves;
  std::stringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
      std::size_t used_f = 0, used_p = 0;
      const std::string fs = item.substr(0, colon), ps = item.substr(colon + 1);
      const int field = std::stoi(fs, &used_f);
      const int pos = std::stoi(ps, &used_p);
      if (used_f != fs.size() || used_p != ps.size()) throw std::invalid_argument("trailing");
      moves.push_back({field, pos});
    } catch (const std::exception&) {
      throw ParseError("malformed move '" + item + "' (expected FIELD:POS)");
    }
  }
  return moves;
}

inline std::string format_moves(const MoveList& moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moves[i].field) + ":" + std::to_string(moves[i].pos);
  }
  return out;
}

}  // namespace sttt
