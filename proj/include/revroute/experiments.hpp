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
#include <string>
#include <utility>
#include <vector>

#include "revroute/cost_model.hpp"

namespace revroute {

struct SweepRow {
  std::string algorithm;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Mean/spread of the makespan over random permutations at each grid size.
// Below n = 12 the whole symmetric group is enumerated instead and the
// trials column reports n!.  Trial t at size n draws from the stream
// derive_seed(seed, n, t), so rows do not depend on batching.  Sampled rows
// report the sample (N-1) deviation; exhaustive rows the population value.
std::vector<SweepRow> sweep(const std::string& algorithm,
                            const std::vector<int>& n_grid, int trials,
                            std::uint64_t seed, CostModel model);

// Geometric grid 16..512; the adaptive sorter is capped at n <= 207 (it is
// quartic per call), which trims the grid to 16..181.
std::vector<int> default_grid(const std::string& algorithm);

// "algorithm,n,trials,seed,mean,std,min,max" with one row per grid point;
// byte-identical for identical inputs.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(const std::string& text);

struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double r_squared = 0.0;
};

// Least squares for y = a n + b sqrt(n) + c via the 3x3 normal equations in
// extended precision.  Needs at least three distinct n; throws
// VerificationError when the system is degenerate.
FitResult fit_mean(const std::vector<std::pair<int, double>>& points);
// Same basis fitted to the variance (input points carry the deviation).
FitResult fit_variance(const std::vector<std::pair<int, double>>& points);
std::string fit_json(const FitResult& fit);

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 0.0;
  int categories = 0;
};

// Samples random permutations and tests whether their indicator strings are
// uniform over the balanced length-n strings.  n must be even and <= 12 so
// categories can be counted exactly.
ChiSquareResult bitization_check(int n, int samples, std::uint64_t seed);

struct ExpectMaxResult {
  double empirical_mean = 0.0;
  double bound = 0.0;
  bool within = false;
};

// Empirical E[max of m Binomial(n, p) draws] against p n + 2 sqrt(n ln(mn)).
ExpectMaxResult expect_max_check(int n, int m, double p, int trials,
                                 std::uint64_t seed);

struct EnvelopeRow {
  int n = 0;
  double mean_excess = 0.0;
  double max_excess = 0.0;
};

// Cost of the sparse path router beyond n/3 on random k-mover permutations
// (mover positions uniform; the action on them resampled until it has no
// fixed point).  k = 0 reports zero excess.
std::vector<EnvelopeRow> sparse_envelope(int k, const std::vector<int>& n_grid,
                                         int trials, std::uint64_t seed);

}  // namespace revroute
