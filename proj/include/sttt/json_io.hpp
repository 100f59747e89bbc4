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

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sttt/census.hpp"
#include "sttt/error.hpp"
#include "sttt/game.hpp"
#include "sttt/spiral.hpp"
#include "sttt/symmetry.hpp"

namespace sttt::json {

using Json = nlohmann::ordered_json;

inline Json square(const NumberedSquare& sq) {
  Json layers = Json::array();
  for (int k = 1; k <= sq.layer_count(); ++k) layers.push_back(sq.level_set(k));
  Json rows = Json::array();
  for (int r = 0; r < sq.n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < sq.n(); ++c) row.push_back(sq.label_at(r, c));
    rows.push_back(row);
  }
  return {{"n", sq.n()}, {"labels", rows}, {"layers", layers}};
}

inline Json relations(const DihedralReport& report) {
  Json rel = Json::array();
  for (const auto& r : report.relations) {
    rel.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"passed", report.passed()}, {"relations", rel}};
}

inline Json group(const DihedralGroup& g, const DihedralReport* report) {
  Json out = {{"n", g.n()},
              {"m", g.m()},
              {"group_order", g.order()},
              {"degenerate", g.degenerate()},
              {"sigma", g.rotation().cycles()},
              {"rho", g.reflection().cycles()}};
  if (report) out["verification"] = relations(*report);
  return out;
}

inline Json moves(const MoveList& list) {
  Json out = Json::array();
  for (const auto& mv : list) out.push_back({mv.field, mv.pos});
  return out;
}

inline Json iso_class(const IsoClass& c) {
  return {{"canonical", c.canonical}, {"orbit_size", c.orbit_size()}, {"members", c.members}};
}

/// One class per line.
inline std::string to_jsonl(const std::vector<IsoClass>& classes) {
  std::string out;
  for (const auto& c : classes) out += iso_class(c).dump() + "\n";
  return out;
}

inline std::vector<IsoClass> from_jsonl(std::string_view text) {
  std::vector<IsoClass> classes;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = Json::parse(line);
      IsoClass c;
      c.members = j.at("members").get<std::vector<std::string>>();
      if (c.members.empty()) throw ParseError("class has no members", line_no);
      std::sort(c.members.begin(), c.members.end());
      c.canonical = c.members.front();
      if (j.contains("canonical") && j.at("canonical").get<std::string>() != c.canonical) {
        throw ParseError("canonical is not the least member", line_no);
      }
      if (j.contains("orbit_size") && j.at("orbit_size").get<std::size_t>() != c.orbit_size()) {
        throw ParseError("orbit_size does not match member count", line_no);
      }
      classes.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return classes;
}

}  // namespace sttt::json
