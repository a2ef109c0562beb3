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

#include <functional>
#include <string>

#include "revroute/labeling.hpp"
#include "revroute/schedule.hpp"

namespace revroute {

// Odd-even transposition rounds: alternating phases compare pairs (0,1),
// (2,3),... and (1,2),(3,4),...; adjacent tokens swap iff out of
// destination order.  Stops once a full odd+even pass makes no swap; only
// non-empty rounds are emitted, so the identity yields an empty schedule.
// At most n rounds for any permutation.
Schedule odd_even_sort(const Permutation& perm);

// A binary sorter returns reversals (indices relative to the string) whose
// application sorts the bits ascending.
using BinarySorter = std::function<std::vector<PathReversal>(const Bits&)>;

// Tripartite sort: recursively sorts the thirds with boundaries at
// ceil(n/3) and ceil(2n/3) (outer thirds forward, the middle one backward
// via recursion on the bit-complement), then emits one merge reversal from
// the first 1 to the last 0.  A level whose input is already sorted emits
// nothing, and the merge is skipped when the recursion already sorted the
// string.
std::vector<PathReversal> tbs(const Bits& bits);

// Adaptive variant: dynamic programming over all partition pairs
// 0 <= i <= j < n-1 (sections [0,i], [i+1,j], [j+1,n-1]; i = j means an
// empty middle), minimizing max of the three section costs plus the merge
// cost, memoized on (segment, orientation).  Merge cost is derived from
// section zero/one counts without materializing the sorted sections.
// Ties break toward the smallest i, then smallest j.  Never costs more
// than tbs on the same string.
std::vector<PathReversal> atbs(const Bits& bits);

// Divide and conquer: label the segment, sort the labels with the given
// sorter, recurse on the two halves (split at len/2; the halves run
// concurrently under the makespan semantics).  Throws VerificationError if
// the sorter fails to sort its labels, InvalidInput if the permutation is
// not a bijection.
Schedule gdc(const Permutation& perm, const BinarySorter& sorter);
Schedule gdc_tbs(const Permutation& perm);
Schedule gdc_atbs(const Permutation& perm);

// Routing for sparse permutations: compresses the k movers into a window
// around the path median (left and right sides run concurrently), permutes
// them inside the window with odd-even rounds, then replays the compression
// reversals in reverse order.  Cost is about n/3 plus a term quadratic in k.
Schedule middle_exchange(const Permutation& perm);

// Dispatch by name: "oes", "gdc-tbs", "gdc-atbs", "middle-exchange".
Schedule run_path_algorithm(const std::string& name, const Permutation& perm);

}  // namespace revroute
