// Copyright 2026 The revroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revroute/serialization.hpp"

#include <fstream>
#include <sstream>

#include "revroute/errors.hpp"

namespace revroute {

nlohmann::json to_json(const Permutation& p) {
  return nlohmann::json(p.dest);
}

nlohmann::json to_json(const Schedule& s) {
  nlohmann::json ops = nlohmann::json::array();
  for (const Op& op : s.ops) {
    nlohmann::json j;
    if (const auto* r = std::get_if<PathReversal>(&op)) {
      j["type"] = "reversal";
      j["lo"] = r->lo;
      j["hi"] = r->hi;
    } else if (const auto* t = std::get_if<TreeReversal>(&op)) {
      j["type"] = "tree_reversal";
      j["vertices"] = t->vertices;
    } else {
      j["type"] = "matching";
      nlohmann::json swaps = nlohmann::json::array();
      for (const auto& [u, v] : std::get<MatchingRound>(op).swaps)
        swaps.push_back(nlohmann::json::array({u, v}));
      j["swaps"] = swaps;
    }
    ops.push_back(std::move(j));
  }
  return nlohmann::json{{"n", s.n}, {"ops", std::move(ops)}};
}

Permutation permutation_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("permutation must be a JSON array");
  Permutation p;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw InvalidInput("permutation entries must be integers");
    p.dest.push_back(e.get<int>());
  }
  p.validate();
  return p;
}

Schedule schedule_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("ops"))
    throw InvalidInput("schedule must be an object with \"n\" and \"ops\"");
  Schedule s;
  s.n = j.at("n").get<int>();
  if (s.n < 0) throw InvalidInput("schedule with negative n");
  for (const auto& e : j.at("ops")) {
    std::string type = e.at("type").get<std::string>();
    if (type == "reversal") {
      PathReversal r{e.at("lo").get<int>(), e.at("hi").get<int>()};
      if (r.lo > r.hi) throw InvalidInput("reversal with lo > hi");
      s.ops.emplace_back(r);
    } else if (type == "tree_reversal") {
      TreeReversal t;
      t.vertices = e.at("vertices").get<std::vector<int>>();
      s.ops.emplace_back(std::move(t));
    } else if (type == "matching") {
      MatchingRound m;
      for (const auto& sw : e.at("swaps")) {
        if (!sw.is_array() || sw.size() != 2)
          throw InvalidInput("each swap must be a pair");
        m.swaps.emplace_back(sw[0].get<int>(), sw[1].get<int>());
      }
      s.ops.emplace_back(std::move(m));
    } else {
      throw InvalidInput("unknown op type: " + type);
    }
  }
  return s;
}

Permutation parse_permutation_arg(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw InvalidInput("cannot open permutation file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("bad permutation JSON: ") + e.what());
  }
  return permutation_from_json(j);
}

std::string schedule_to_string(const Schedule& s) {
  return to_json(s).dump();
}

Schedule schedule_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("bad schedule JSON: ") + e.what());
  }
  return schedule_from_json(j);
}

}  // namespace revroute
