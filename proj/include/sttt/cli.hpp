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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sttt/board.hpp"
#include "sttt/census.hpp"
#include "sttt/error.hpp"
#include "sttt/game.hpp"
#include "sttt/json_io.hpp"
#include "sttt/random_games.hpp"
#include "sttt/spiral.hpp"
#include "sttt/symmetry.hpp"

namespace sttt::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailed = 2, kUsage = 64 };

// Environment variable that relocates relative --out paths.
inline constexpr const char* kOutputDirEnv = "STTT_OUTPUT_DIR";

enum class Format { Text, Json };

struct RunConfig {
  int n = 2;
  std::string format = "text";
  bool json = false;
  std::string out_path;
  unsigned threads = 1;

  Format output_format() const {
    return (json || format == "json") ? Format::Json : Format::Text;
  }
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::filesystem::path output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir && p.is_relative()) {
    p = std::filesystem::path(dir) / p;
  }
  return p;
}

inline void write_file(const std::string& path, const std::string& content) {
  const auto p = output_path(path);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write '" + p.string() + "'");
  out << content;
}

inline std::pair<std::uint64_t, int> parse_element(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("comma");
    std::size_t used_a = 0, used_b = 0;
    const std::string as = text.substr(0, comma), bs = text.substr(comma + 1);
    const long long a = std::stoll(as, &used_a);
    const int b = std::stoi(bs, &used_b);
    if (used_a != as.size() || used_b != bs.size() || a < 0) throw std::invalid_argument("range");
    return {static_cast<std::uint64_t>(a), b};
  } catch (const std::exception&) {
    throw ParseError("malformed group element '" + text + "' (expected a,b)");
  }
}

inline std::vector<IsoClass> load_census(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return json::from_jsonl(text);
  return parse_listing(text);
}

inline void print_square(const NumberedSquare& sq, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    out << json::square(sq).dump() << "\n";
    return;
  }
  const int width = static_cast<int>(std::to_string(sq.size()).size());
  for (int r = 0; r < sq.n(); ++r) {
    for (int c = 0; c < sq.n(); ++c) {
      if (c) out << ' ';
      out << std::setw(width) << sq.label_at(r, c);
    }
    out << "\n";
  }
}

inline int print_group(const RunConfig& cfg, bool verify, std::ostream& out) {
  const DihedralGroup group(cfg.n);
  DihedralReport report;
  const bool have_report = verify && cfg.n >= 2;
  if (have_report) report = verify_dihedral(cfg.n);

  if (cfg.output_format() == Format::Json) {
    out << json::group(group, have_report ? &report : nullptr).dump() << "\n";
  } else {
    out << "n = " << group.n() << "\n"
        << "sigma = " << group.rotation().to_cycle_string() << "\n"
        << "rho = " << group.reflection().to_cycle_string() << "\n"
        << "m = " << group.m() << "\n"
        << "group order = " << group.order() << "\n";
    if (group.degenerate()) {
      out << "degenerate: the action is trivial (" << group.distinct_permutations()
          << " distinct permutation)\n";
    }
    if (verify && !have_report) out << "verification: skipped (requires n >= 2)\n";
    if (have_report) {
      out << "verification:\n";
      for (const auto& r : report.relations) {
        out << "  " << std::left << std::setw(32) << r.name << (r.passed ? "pass" : "FAIL") << "  "
            << r.detail << "\n";
      }
    }
  }
  return have_report && !report.passed() ? kVerificationFailed : kOk;
}

inline void print_replay(const MoveList& moves, int n, Format fmt, std::ostream& out) {
  GameState s(n);
  json::Json steps = json::Json::array();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move mv = moves[i];
    try {
      s = apply_move(s, mv);
    } catch (const RuleViolation& e) {
      throw RuleViolation(e.kind(), "move " + std::to_string(i + 1) + ": " + e.what());
    }
    const auto forced = s.dictated_field();
    if (fmt == Format::Json) {
      steps.push_back({{"index", i + 1},
                       {"move", {mv.field, mv.pos}},
                       {"field_status", to_string(s.field_status(mv.field))},
                       {"terminal", s.terminal()},
                       {"next_field", s.terminal() || !forced ? json::Json(nullptr)
                                                              : json::Json(*forced)}});
    } else {
      out << std::setw(3) << i + 1 << ". " << mv.field << ":" << mv.pos << "  field "
          << mv.field << " " << to_string(s.field_status(mv.field));
      if (s.terminal()) {
        out << "  terminal";
      } else if (forced) {
        out << "  next: field " << *forced;
      } else {
        out << "  next: any open field";
      }
      out << "\n";
    }
  }
  const std::string bits = to_bitstring(s.board(), s.geometry().square());
  if (fmt == Format::Json) {
    json::Json result = {{"n", n},
                         {"steps", steps},
                         {"terminal", s.terminal()},
                         {"draw", s.draw()},
                         {"loser", s.loser() ? json::Json(*s.loser() + 1) : json::Json(nullptr)},
                         {"final_board", bits}};
    out << result.dump() << "\n";
    return;
  }
  if (s.board_line_complete()) {
    out << "terminal: board line completed by move " << moves.size() << "; player "
        << *s.loser() + 1 << " loses\n";
  } else if (s.draw()) {
    out << "terminal: draw (all fields closed)\n";
  } else {
    out << "in progress: " << legal_moves(s).size() << " legal moves\n";
  }
  out << "final board: " << bits << "\n";
}

inline void print_census_summary(const std::vector<IsoClass>& classes, std::size_t boards,
                                 std::ostream& out) {
  out << "winning boards: " << boards << "\n"
      << "classes: " << classes.size() << "\n";
  for (const auto& [size, count] : size_histogram(classes)) {
    out << "  order " << size << ": " << count << "\n";
  }
}

inline int print_diff(const std::string& computed_path, const std::string& reference_path,
                      Format fmt, std::ostream& out) {
  const std::string computed_text = read_file(computed_path);
  const std::string reference_text = read_file(reference_path);
  const auto computed = load_census(computed_text);
  const auto parsed = load_census(reference_text);
  CensusDiff diff = diff_census(computed, parsed);
  note_declared_counts(diff, parsed, reference_text, "reference");
  note_declared_counts(diff, computed, computed_text, "computed");

  if (fmt == Format::Json) {
    json::Json only_c = json::Json::array(), only_p = json::Json::array(),
               mism = json::Json::array();
    for (const auto& c : diff.only_computed) only_c.push_back(json::iso_class(c));
    for (const auto& c : diff.only_parsed) only_p.push_back(json::iso_class(c));
    for (const auto& m : diff.mismatches) {
      mism.push_back({{"key", m.key}, {"computed", m.computed}, {"parsed", m.parsed}});
    }
    out << json::Json{{"computed_classes", computed.size()},
                      {"parsed_classes", parsed.size()},
                      {"only_computed", only_c},
                      {"only_parsed", only_p},
                      {"mismatches", mism},
                      {"notes", diff.notes},
                      {"match", diff.matches()}}
               .dump()
        << "\n";
  } else {
    out << "computed classes: " << computed.size() << "\n"
        << "reference classes: " << parsed.size() << "\n"
        << "only in computed: " << diff.only_computed.size() << "\n";
    for (const auto& c : diff.only_computed) out << "  " << c.canonical << "\n";
    out << "only in reference: " << diff.only_parsed.size() << "\n";
    for (const auto& c : diff.only_parsed) out << "  " << c.canonical << "\n";
    out << "membership mismatches: " << diff.mismatches.size() << "\n";
    for (const auto& m : diff.mismatches) out << "  " << m.key << "\n";
    for (const auto& note : diff.notes) out << "note: " << note << "\n";
    out << "result: " << (diff.matches() ? "match" : "MISMATCH") << "\n";
  }
  return diff.matches() ? kOk : kVerificationFailed;
}

struct FuzzResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Acted games stay valid and acting commutes with replay.
inline FuzzResult fuzz_games(int n, std::size_t cases, std::uint64_t seed) {
  const DihedralGroup group(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group.elements().size() - 1);
  FuzzResult result;
  for (std::size_t i = 0; i < cases; ++i) {
    const MoveList game = random_game_prefix(n, rng);
    const GroupElement& g = group.elements()[pick(rng)];
    MoveList acted;
    for (const Move& mv : game) acted.push_back({g(mv.field), g(mv.pos)});
    ++result.cases;
    std::string problem;
    if (!is_valid_game(acted, n).valid) {
      problem = "acted game invalid";
    } else if (final_board(acted, n) != act_board(final_board(game, n), g)) {
      problem = "replay does not commute with the action";
    }
    if (!problem.empty() && result.failures++ == 0) {
      result.first_failure = problem + ": " + format_moves(game) + " under " + g.name();
    }
  }
  return result;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dihedral symmetry toolkit for generalized super tic-tac-toe", "sttt"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    choices.push_back("text");
    choices.push_back("json");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(choices));
    sub->add_flag("--json", cfg.json, "Shorthand for --format json");
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", cfg.n, "Board side length");
    if (required) opt->required();
    return opt;
  };

  auto* square = app.add_subcommand("square", "Print the spiral numbering of an n x n square");
  add_n(square, true);
  add_format(square, {"grid"});

  bool verify = false;
  auto* group = app.add_subcommand("group", "Print the rotation, reflection and order m");
  add_n(group, true);
  group->add_flag("--verify", verify, "Check the dihedral relations");
  add_format(group, {"cycles"});

  std::string bits, element, moves_text;
  auto* board = app.add_subcommand("board", "Act on boards");
  board->require_subcommand(1);
  auto* board_act = board->add_subcommand("act", "Apply sigma^a rho^b to a board");
  auto* board_act_n = add_n(board_act, false);
  board_act->add_option("--bits", bits, "Board bitstring")->required();
  board_act->add_option("--element", element, "Group element a,b")->required();
  add_format(board_act, {});
  auto* board_orbit_cmd = board->add_subcommand("orbit", "List the orbit of a board");
  auto* board_orbit_n = add_n(board_orbit_cmd, false);
  board_orbit_cmd->add_option("--bits", bits, "Board bitstring")->required();
  add_format(board_orbit_cmd, {});

  auto* game = app.add_subcommand("game", "Replay and transform games");
  game->require_subcommand(1);
  auto* game_replay = game->add_subcommand("replay", "Replay a move list");
  add_n(game_replay, false);
  game_replay->add_option("--moves", moves_text, "Moves as FIELD:POS,...")->required();
  add_format(game_replay, {});
  auto* game_act = game->add_subcommand("act", "Apply sigma^a rho^b to a game");
  add_n(game_act, false);
  game_act->add_option("--moves", moves_text, "Moves as FIELD:POS,...")->required();
  game_act->add_option("--element", element, "Group element a,b")->required();
  add_format(game_act, {});

  bool listing_style = false, allow_large = false;
  auto* census = app.add_subcommand("census", "Enumerate winning boards into classes");
  census->require_subcommand(0, 1);
  add_n(census, false);
  census->add_option("--out", cfg.out_path, "Write the census to this file");
  census->add_flag("--listing", listing_style, "Emit the numbered text listing, not JSONL");
  census->add_flag("--allow-large", allow_large, "Permit n != 2 (slow)");
  census->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  std::string computed_path, reference_path;
  auto* census_diff = census->add_subcommand("diff", "Compare two censuses");
  census_diff->add_option("--computed", computed_path, "Computed census")->required();
  census_diff->add_option("--reference", reference_path, "Reference census text")->required();
  add_format(census_diff, {});

  std::uint64_t seed = 1;
  std::size_t cases = 10000;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized check that the action preserves games");
  add_n(fuzz, false);
  fuzz->add_option("--seed", seed, "RNG seed");
  fuzz->add_option("--cases", cases, "Number of random games");
  add_format(fuzz, {});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const Format fmt = cfg.output_format();
  try {
    if (cfg.n < 1) throw InvalidSize(cfg.n);

    if (*square) {
      detail::print_square(NumberedSquare(cfg.n), fmt, out);
      return kOk;
    }
    if (*group) return detail::print_group(cfg, verify, out);

    if (*board_act || *board_orbit_cmd) {
      const int n = size_from_bitstring(bits);
      const auto* given_n = *board_act ? board_act_n : board_orbit_n;
      if (given_n->count() && n != cfg.n) {
        throw SizeMismatch("bitstring encodes an n = " + std::to_string(n) + " board, not n = " +
                           std::to_string(cfg.n));
      }
      const DihedralGroup g(n);
      const Board b = from_bitstring(bits, g.square());
      if (*board_act) {
        const auto [a, refl] = detail::parse_element(element);
        const GroupElement& el = g.element(a, refl);
        const std::string result = to_bitstring(act_board(b, el), g.square());
        if (fmt == Format::Json) {
          out << json::Json{{"bits", bits}, {"element", {el.a, el.b}}, {"result", result}}.dump()
              << "\n";
        } else {
          out << result << "\n";
        }
        return kOk;
      }
      const auto orbit = orbit_bitstrings(b, g);
      if (fmt == Format::Json) {
        out << json::Json{{"orbit", orbit}, {"size", orbit.size()}, {"canonical", orbit.front()}}
                   .dump()
            << "\n";
      } else {
        for (const auto& s : orbit) out << s << "\n";
        out << "size: " << orbit.size() << "\ncanonical: " << orbit.front() << "\n";
      }
      return kOk;
    }

    if (*game_replay) {
      detail::print_replay(parse_moves(moves_text), cfg.n, fmt, out);
      return kOk;
    }
    if (*game_act) {
      const DihedralGroup g(cfg.n);
      const auto [a, refl] = detail::parse_element(element);
      const GroupElement& el = g.element(a, refl);
      const MoveList acted = act_game(parse_moves(moves_text), el, cfg.n);
      if (const auto v = is_valid_game(acted, cfg.n); !v.valid) {
        throw VerificationFailure("acted game is valid",
                                  "move " + std::to_string(*v.failed_index + 1) + " of " +
                                      format_moves(acted) + ": " + v.reason);
      }
      if (fmt == Format::Json) {
        out << json::Json{{"n", cfg.n}, {"element", {el.a, el.b}}, {"moves", json::moves(acted)}}
                   .dump()
            << "\n";
      } else {
        out << format_moves(acted) << "\n";
      }
      return kOk;
    }

    if (*census_diff) return detail::print_diff(computed_path, reference_path, fmt, out);
    if (*census) {
      EnumerationOptions options;
      options.threads = cfg.threads;
      options.allow_large = allow_large;
      const auto boards = enumerate_winning_boards(cfg.n, options);
      const auto classes = partition_classes(boards, cfg.n);
      const std::string body = listing_style ? to_listing_text(classes) : json::to_jsonl(classes);
      if (cfg.out_path.empty()) {
        out << body;
      } else {
        detail::write_file(cfg.out_path, body);
        detail::print_census_summary(classes, boards.size(), out);
      }
      return kOk;
    }

    if (*fuzz) {
      const auto result = detail::fuzz_games(cfg.n, cases, seed);
      if (fmt == Format::Json) {
        out << json::Json{{"n", cfg.n},
                          {"seed", seed},
                          {"cases", result.cases},
                          {"failures", result.failures}}
                   .dump()
            << "\n";
      } else {
        out << "cases: " << result.cases << "\nfailures: " << result.failures << "\n";
        if (result.failures) out << "first failure: " << result.first_failure << "\n";
      }
      return result.failures ? kVerificationFailed : kOk;
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsage;
}

inline int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sttt::cli
