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

#include "revroute/duration.hpp"

namespace revroute {

// How long reversing a contiguous segment of len vertices takes.
//
//   linear_third  (len + 1) / 3, exact rational.
//   exact_sqrt    sqrt((len + 1)^2 - parity(len)) / 3, floating point.
//                 Agrees with linear_third for even len and is smaller for
//                 odd len; both equal 1 at len = 2.
//   unit_swap     1 for a swap (len = 2), 0 for the len = 1 no-op, and an
//                 error for longer reversals.
//
// A matching round takes unit time under every model, however many disjoint
// swaps it carries.
enum class CostModel { linear_third, exact_sqrt, unit_swap };

// Accepts "linear", "sqrt", "unit"; throws InvalidInput otherwise.
CostModel parse_cost_model(const std::string& name);
std::string cost_model_name(CostModel model);

// Duration of a reversal over len consecutive vertices (len >= 1).
Duration reversal_duration(int len, CostModel model);

Duration matching_round_duration(CostModel model);

}  // namespace revroute
