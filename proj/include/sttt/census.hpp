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
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "sttt/board.hpp"
#include "sttt/error.hpp"
#include "sttt/game.hpp"
#include "sttt/symmetry.hpp"

namespace sttt {

/// An orbit of winning boards: sorted serialized members, canonical = least.
struct IsoClass {
  std::string canonical;
  std::vector<std::string> members;

  std::size_t orbit_size() const { return members.size(); }

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

struct EnumerationOptions {
  unsigned threads = 1;
  bool allow_large = false;
};

struct EnumerationStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t transpositions = 0;
  std::uint64_t terminal_games = 0;
};

namespace detail {

// Everything that determines the future of a game: the board plus the pos of
// the last move (which fixes the dictated field). Field statuses are derived
// from the board.
inline std::string state_key(const GameState& s) {
  std::string key;
  key.reserve(s.board().cell_count() + 1);
  for (CellState c : s.board().cells()) key.push_back(c == CellState::X ? '1' : '0');
  key.push_back(static_cast<char>(s.history().empty() ? 0 : s.history().back().pos));
  return key;
}

inline void explore(const GameState& s, std::unordered_set<std::string>& seen,
                    std::set<std::string>& out, EnumerationStats& stats) {
  ++stats.states_expanded;
  for (const Move& mv : legal_moves(s)) {
    GameState next = apply_move(s, mv);
    if (next.terminal()) {
      ++stats.terminal_games;
      if (next.board_line_complete()) {
        out.insert(to_bitstring(next.board(), next.geometry().square()));
      }
      continue;
    }
    if (!seen.insert(state_key(next)).second) {
      ++stats.transpositions;
      continue;
    }
    explore(next, seen, out, stats);
  }
}

}  // namespace detail

/// Depth-first search of the whole game tree; returns the serialized final
/// board of every game whose last move completed a board line. The root's
/// first moves are split across `threads` workers, each with its own
/// transposition set; the merged result is independent of the split.
inline std::set<std::string> enumerate_winning_boards(
    int n, const EnumerationOptions& options = {},
    EnumerationStats* stats_out = nullptr) {
  if (n != 2 && !options.allow_large) {
    throw Error("enumeration for n = " + std::to_string(n) +
                " is only available with allow_large");
  }
  const GameState root(n);
  const std::vector<Move> first = legal_moves(root);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(first.size())));

  std::vector<std::set<std::string>> found(workers);
  std::vector<EnumerationStats> stats(workers);
  auto work = [&](unsigned w) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = w; i < first.size(); i += workers) {
      GameState next = apply_move(root, first[i]);
      if (next.terminal()) {
        if (next.board_line_complete()) {
          found[w].insert(to_bitstring(next.board(), next.geometry().square()));
        }
        continue;
      }
      if (seen.insert(detail::state_key(next)).second) {
        detail::explore(next, seen, found[w], stats[w]);
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::set<std::string> merged;
  EnumerationStats total;
  for (unsigned w = 0; w < workers; ++w) {
    merged.insert(found[w].begin(), found[w].end());
    total.states_expanded += stats[w].states_expanded;
    total.transpositions += stats[w].transpositions;
    total.terminal_games += stats[w].terminal_games;
  }
  if (stats_out) *stats_out = total;
  return merged;
}

/// Throws ClosureViolation if some image of a member leaves the set.
inline void require_closed(const std::set<std::string>& boards, const DihedralGroup& group) {
  for (const auto& s : boards) {
    const Board b = from_bitstring(s, group.square());
    for (const auto& g : group.elements()) {
      std::string image = to_bitstring(act_board(b, g), group.square());
      if (!boards.count(image)) throw ClosureViolation(s, image);
    }
  }
}

inline void sort_classes(std::vector<IsoClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const IsoClass& a, const IsoClass& b) {
    if (a.orbit_size() != b.orbit_size()) return a.orbit_size() < b.orbit_size();
    return a.canonical < b.canonical;
  });
}

/// Splits a closed board set into orbits, ordered by (orbit size, canonical).
inline std::vector<IsoClass> partition_classes(const std::set<std::string>& boards, int n) {
  const DihedralGroup group(n);
  require_closed(boards, group);
  std::vector<IsoClass> classes;
  std::set<std::string> assigned;
  for (const auto& s : boards) {
    if (assigned.count(s)) continue;
    IsoClass cls;
    cls.members = orbit_bitstrings(from_bitstring(s, group.square()), group);
    cls.canonical = cls.members.front();
    assigned.insert(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  sort_classes(classes);
  return classes;
}

inline std::map<std::size_t, std::size_t> size_histogram(const std::vector<IsoClass>& classes) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : classes) ++hist[c.orbit_size()];
  return hist;
}

/// True if the members are exactly the orbit of any one of them.
inline bool class_is_orbit(const IsoClass& cls, const DihedralGroup& group) {
  if (cls.members.empty()) return false;
  for (const auto& member : cls.members) {
    if (orbit_bitstrings(from_bitstring(member, group.square()), group) != cls.members) {
      return false;
    }
  }
  return true;
}

// Listing-style text: numbered items, each a parenthesized, comma-separated
// tuple of bitstrings, possibly spanning lines. Anything outside parentheses
// (headings, item numbers, prose) is ignored, as are lines starting with '#'.
inline std::vector<IsoClass> parse_listing(std::string_view text) {
  std::vector<IsoClass> classes;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool inside = false;
  int tuple_line = 0;
  std::size_t width = 0;
  std::vector<std::string> current;
  std::string token;
  int token_line = 0;

  auto flush_token = [&]() {
    if (token.empty()) return;
    for (char ch : token) {
      if (ch != '0' && ch != '1') {
        throw ParseError("invalid character '" + std::string(1, ch) + "' in '" + token + "'",
                         token_line);
      }
    }
    if (width == 0) {
      width = token.size();
      size_from_bitstring(token);
    }
    if (token.size() != width) {
      throw ParseError("bitstring '" + token + "' has length " + std::to_string(token.size()) +
                           ", expected " + std::to_string(width),
                       token_line);
    }
    current.push_back(token);
    token.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!inside && !line.empty() && line.find_first_not_of(" \t") != std::string::npos &&
        line[line.find_first_not_of(" \t")] == '#') {
      continue;
    }
    for (char ch : line) {
      if (!inside) {
        if (ch == '(') {
          inside = true;
          tuple_line = line_no;
          current.clear();
        } else if (ch == ')') {
          throw ParseError("unmatched ')'", line_no);
        }
        continue;
      }
      if (ch == '(') throw ParseError("nested '('", line_no);
      if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == ')') {
        flush_token();
        if (ch == ')') {
          if (current.empty()) throw ParseError("empty tuple", line_no);
          IsoClass cls;
          cls.members = current;
          std::sort(cls.members.begin(), cls.members.end());
          if (std::adjacent_find(cls.members.begin(), cls.members.end()) != cls.members.end()) {
            throw ParseError("duplicate member in tuple", tuple_line);
          }
          cls.canonical = cls.members.front();
          classes.push_back(std::move(cls));
          inside = false;
        }
        continue;
      }
      if (token.empty()) token_line = line_no;
      token.push_back(ch);
    }
    if (inside) flush_token();
  }
  if (inside) throw ParseError("unterminated tuple", tuple_line);
  return classes;
}

/// Counts stated in prose, e.g. "19 isomorphism classes of order 4".
inline std::map<std::size_t, std::size_t> declared_counts(std::string_view text) {
  std::map<std::size_t, std::size_t> counts;
  static const std::regex pattern(R"((\d+)\s+isomorphism\s+class(?:es)?\s+of\s+order\s+(\d+))",
                                  std::regex::icase);
  const std::string s(text);
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pattern); it != std::sregex_iterator();
       ++it) {
    counts[std::stoul((*it)[2].str())] = std::stoul((*it)[1].str());
  }
  return counts;
}

struct ClassMismatch {
  std::string key;  // orbit canonical form
  std::vector<std::string> computed;
  std::vector<std::string> parsed;
};

struct CensusDiff {
  std::vector<IsoClass> only_computed;
  std::vector<IsoClass> only_parsed;
  std::vector<ClassMismatch> mismatches;
  std::vector<std::string> notes;  // informational, do not affect matches()

  bool matches() const {
    return only_computed.empty() && only_parsed.empty() && mismatches.empty();
  }
};

/// Compares two censuses class by class. Classes are keyed by the orbit
/// canonical form of their first member, so a class with wrong membership
/// shows up as a mismatch rather than as two one-sided entries.
inline CensusDiff diff_census(const std::vector<IsoClass>& computed,
                              const std::vector<IsoClass>& parsed) {
  CensusDiff diff;
  const std::vector<IsoClass>& any = computed.empty() ? parsed : computed;
  if (any.empty()) return diff;
  const int n = size_from_bitstring(any.front().members.front());
  const DihedralGroup group(n);

  auto key_of = [&](const IsoClass& c) {
    return canonical_form(from_bitstring(c.members.front(), group.square()), group);
  };
  auto index = [&](const std::vector<IsoClass>& side, const char* label) {
    std::map<std::string, const IsoClass*> out;
    for (const auto& c : side) {
      if (c.members.empty()) continue;
      if (size_from_bitstring(c.members.front()) != n) {
        throw SizeMismatch("censuses use different board sizes");
      }
      const auto [it, fresh] = out.emplace(key_of(c), &c);
      if (!fresh) {
        diff.mismatches.push_back({it->first, it->second->members, c.members});
        diff.notes.push_back(std::string("duplicate class in ") + label + " census: " + it->first);
      }
    }
    return out;
  };
  const auto lhs = index(computed, "computed");
  const auto rhs = index(parsed, "parsed");

  for (const auto& [key, cls] : lhs) {
    auto it = rhs.find(key);
    if (it == rhs.end()) {
      diff.only_computed.push_back(*cls);
    } else if (it->second->members != cls->members) {
      diff.mismatches.push_back({key, cls->members, it->second->members});
    }
  }
  for (const auto& [key, cls] : rhs) {
    if (!lhs.count(key)) diff.only_parsed.push_back(*cls);
  }
  return diff;
}

/// Adds a note for every declared class count that disagrees with the number
/// of classes actually listed.
inline void note_declared_counts(CensusDiff& diff, const std::vector<IsoClass>& listed,
                                 std::string_view text, const std::string& label) {
  const auto hist = size_histogram(listed);
  for (const auto& [order, count] : declared_counts(text)) {
    const auto it = hist.find(order);
    const std::size_t actual = it == hist.end() ? 0 : it->second;
    if (actual != count) {
      diff.notes.push_back(label + " header declares " + std::to_string(count) +
                           " classes of order " + std::to_string(order) + " but lists " +
                           std::to_string(actual) + " (header typo; listed items are used)");
    }
  }
}

/// Listing-style rendering of a census, four members per line.
inline std::string to_listing_text(std::vector<IsoClass> classes) {
  sort_classes(classes);
  const auto hist = size_histogram(classes);
  std::ostringstream out;
  {
    std::vector<std::string> parts;
    for (const auto& [order, count] : hist) {
      parts.push_back(std::to_string(count) + (count == 1 ? " isomorphism class" : " isomorphism classes") +
                      " of order " + std::to_string(order));
    }
    out << (hist.size() == 1 && hist.begin()->second == 1 ? "There is " : "There are ");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out << (i + 1 == parts.size() ? " and " : ", ");
      out << parts[i];
    }
    out << ".\n";
  }
  std::size_t order = 0;
  int item = 0;
  for (const auto& c : classes) {
    if (c.orbit_size() != order) {
      order = c.orbit_size();
      item = 0;
      out << "\nIsomorphism of Order " << order << ":\n";
    }
    out << ++item << ". (";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) out << (i % 4 == 0 ? ",\n    " : ", ");
      out << c.members[i];
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace sttt
