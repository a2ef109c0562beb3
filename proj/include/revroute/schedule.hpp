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

#include <utility>
#include <variant>
#include <vector>

#include "revroute/cost_model.hpp"
#include "revroute/permutation.hpp"

namespace revroute {

// Reversal of the contiguous path segment [lo, hi], endpoints inclusive.
struct PathReversal {
  int lo = 0;
  int hi = 0;
  int length() const { return hi - lo + 1; }
  bool operator==(const PathReversal& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

// Reversal along an explicit simple path of graph vertices.
struct TreeReversal {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const TreeReversal& o) const {
    return vertices == o.vertices;
  }
};

// One synchronous round of vertex-disjoint swaps.
struct MatchingRound {
  std::vector<std::pair<int, int>> swaps;
  bool operator==(const MatchingRound& o) const { return swaps == o.swaps; }
};

using Op = std::variant<PathReversal, TreeReversal, MatchingRound>;

struct Schedule {
  int n = 0;  // number of positions the ops act on
  std::vector<Op> ops;
};

// Length-1 reversals and empty matching rounds are legal no-ops; they are
// stripped before costing.
bool is_noop(const Op& op);
Schedule normalized(const Schedule& s);

Duration op_duration(const Op& op, CostModel model);

// Positions an op touches, each listed once.
std::vector<int> op_support(const Op& op);

// Applies the op to a token arrangement (arr[p] = token at position p).
// Throws InvalidInput on out-of-range indices, a repeated vertex in a tree
// reversal, or overlapping swaps in a round.
void apply_op(std::vector<int>& arr, const Op& op);
void apply_schedule(std::vector<int>& arr, const Schedule& s);

// Earliest-start makespan: each op starts at the latest finish time among
// earlier ops whose support intersects its own (transitively, via per-
// position finish times), and ops on disjoint supports overlap.  No-ops are
// stripped first; the empty schedule has makespan 0.
Duration makespan(const Schedule& s, CostModel model);

// True when applying the schedule to perm's token arrangement places every
// token at its destination.
bool routes(const Schedule& s, const Permutation& perm);

}  // namespace revroute
