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

#pragma once

#include <string>

#include <json.hpp>

#include "revroute/permutation.hpp"
#include "revroute/schedule.hpp"

namespace revroute {

// Permutations serialize as plain integer arrays; schedules as
//   {"n": 8, "ops": [{"hi":3,"lo":0,"type":"reversal"},
//                    {"swaps":[[0,1],[4,5]],"type":"matching"},
//                    {"type":"tree_reversal","vertices":[2,1,0]}]}
// Keys are emitted in sorted order, so dump(parse(dump(x))) is byte-stable.
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const Schedule& s);
Permutation permutation_from_json(const nlohmann::json& j);
Schedule schedule_from_json(const nlohmann::json& j);

// Parses either an inline JSON integer array or, when the string does not
// start with '[', the named file containing one.
Permutation parse_permutation_arg(const std::string& arg);

std::string schedule_to_string(const Schedule& s);
Schedule schedule_from_string(const std::string& text);

}  // namespace revroute
