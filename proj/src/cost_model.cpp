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

#include "revroute/cost_model.hpp"

#include <cmath>

#include "revroute/errors.hpp"

namespace revroute {

CostModel parse_cost_model(const std::string& name) {
  if (name == "linear") return CostModel::linear_third;
  if (name == "sqrt") return CostModel::exact_sqrt;
  if (name == "unit") return CostModel::unit_swap;
  throw InvalidInput("unknown cost model: " + name);
}

std::string cost_model_name(CostModel model) {
  switch (model) {
    case CostModel::linear_third:
      return "linear";
    case CostModel::exact_sqrt:
      return "sqrt";
    case CostModel::unit_swap:
      return "unit";
  }
  throw InvalidInput("unknown cost model");
}

Duration reversal_duration(int length, CostModel model) {
  if (length < 1) throw InvalidInput("reversal of length < 1");
  switch (model) {
    case CostModel::linear_third:
      return Duration(Rational(length + 1, 3));
    case CostModel::exact_sqrt: {
      std::int64_t sq = static_cast<std::int64_t>(length + 1) * (length + 1) -
                        length % 2;
      return Duration::from_double(std::sqrt(static_cast<double>(sq)) / 3.0);
    }
    case CostModel::unit_swap:
      // Only swaps have a defined duration; a length-1 reversal is a no-op.
      if (length == 1) return Duration(Rational(0));
      if (length == 2) return Duration(Rational(1));
      throw InvalidInput("unit cost model only admits swaps");
  }
  throw InvalidInput("unknown cost model");
}

Duration matching_round_duration(CostModel model) {
  (void)model;
  return Duration(Rational(1));
}

}  // namespace revroute
