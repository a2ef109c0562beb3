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

#include <cstdint>
#include <functional>
#include <optional>

#include "revroute/permutation.hpp"
#include "revroute/schedule.hpp"

namespace revroute {

using PathAlgorithm = std::function<Schedule(const Permutation&)>;

struct ExhaustiveReport {
  bool all_correct = true;
  std::uint64_t count = 0;
  Duration max_cost;
  Permutation argmax;
  double mean_cost = 0.0;
  std::optional<Permutation> first_failure;
};

// Runs the algorithm on every permutation of n, verifying that each
// schedule routes its permutation.  Work is chunked over the lexicographic
// rank space and merged in rank order, so the report is identical for any
// worker count (workers = 0 picks the hardware default).
ExhaustiveReport exhaustive_verify(int n, const PathAlgorithm& algorithm,
                                   CostModel model, int workers = 0);

struct BruteForceResult {
  bool known = false;
  Duration cost;
};

// Exact minimum makespan over all reversal schedules, found by iterative
// deepening on the cost threshold (exact rationals, linear model only).
// Consecutive ops on disjoint supports are explored in one canonical order
// only.  Gives up and reports unknown once node_budget states are visited.
BruteForceResult brute_force_min_time(const Permutation& perm,
                                      const Rational& cost_budget,
                                      std::uint64_t node_budget = 50'000'000);

// Natural log of the displacement-ball volume bound, defined for 0 < k < n.
// The two regime branches agree at k/n = 1/2.
double log_phi(int k, int n);

// |{pi : d_infinity(pi) <= k}| by enumeration; n <= 10.
std::uint64_t ball_size(int k, int n);

struct BallFraction {
  double fraction;
  double std_error;
};

// Monte Carlo estimate of the fraction of permutations with
// d_infinity <= (1 - eps) * n.
BallFraction ball_fraction(int n, double eps, int trials, std::uint64_t seed);

}  // namespace revroute
