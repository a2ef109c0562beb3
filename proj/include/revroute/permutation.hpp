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

#include <vector>

#include "revroute/rng.hpp"

namespace revroute {

// A routing instance on positions 0..n-1: dest[i] is the destination of the
// token that starts at position i.  The routing task is done when the token
// destined for position p sits at p for every p.
struct Permutation {
  std::vector<int> dest;

  int n() const { return static_cast<int>(dest.size()); }
  // Throws InvalidInput unless dest is a bijection on 0..n-1.
  void validate() const;
  bool operator==(const Permutation& o) const { return dest == o.dest; }
};

Permutation identity_permutation(int n);
Permutation descending_permutation(int n);
bool is_identity(const Permutation& p);

// max |dest[i] - i|; 0 when n <= 1.
int d_infinity(const Permutation& p);

// Uniform over the symmetric group (Fisher-Yates with rejection-sampled
// bounded draws, portable across platforms).
Permutation random_permutation(int n, Rng& rng);

}  // namespace revroute
