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

#include "revroute/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "revroute/errors.hpp"
#include "revroute/parallel.hpp"
#include "revroute/rng.hpp"

namespace revroute {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Permutation of lexicographic rank r (factorial number system).
Permutation nth_permutation(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Permutation p;
  p.dest.reserve(n);
  std::uint64_t f = factorial(n);
  for (int i = n; i > 0; --i) {
    f /= static_cast<std::uint64_t>(i);
    std::uint64_t digit = rank / f;
    rank %= f;
    p.dest.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return p;
}

struct ExhaustivePartial {
  std::uint64_t count = 0;
  bool has_max = false;
  Duration max_cost;
  Permutation argmax;
  std::optional<Permutation> first_failure;
  // Per-block sums; final accumulation in block order keeps the mean
  // independent of the worker count.
  std::vector<double> block_sums;
};

}  // namespace

ExhaustiveReport exhaustive_verify(int n, const PathAlgorithm& algorithm,
                                   CostModel model, int workers) {
  if (n < 0 || n > 12)
    throw InvalidInput("exhaustive verification is limited to n <= 12");
  std::uint64_t total = factorial(n);
  std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  if (blocks == 0) blocks = 1;

  auto map = [&](std::uint64_t block_lo,
                 std::uint64_t block_hi) -> ExhaustivePartial {
    ExhaustivePartial part;
    for (std::uint64_t block = block_lo; block < block_hi; ++block) {
      std::uint64_t lo = total * block / blocks;
      std::uint64_t hi = total * (block + 1) / blocks;
      double sum = 0.0;
      for (std::uint64_t rank = lo; rank < hi; ++rank) {
        Permutation perm = nth_permutation(n, rank);
        Schedule schedule = algorithm(perm);
        if (!routes(schedule, perm) && !part.first_failure)
          part.first_failure = perm;
        Duration cost = makespan(schedule, model);
        sum += cost.to_double();
        if (!part.has_max || part.max_cost < cost) {
          part.has_max = true;
          part.max_cost = cost;
          part.argmax = perm;
        }
        ++part.count;
      }
      part.block_sums.push_back(sum);
    }
    return part;
  };
  auto reduce = [](ExhaustivePartial acc, const ExhaustivePartial& part) {
    acc.count += part.count;
    if (part.has_max && (!acc.has_max || acc.max_cost < part.max_cost)) {
      acc.has_max = true;
      acc.max_cost = part.max_cost;
      acc.argmax = part.argmax;
    }
    if (!acc.first_failure && part.first_failure)
      acc.first_failure = part.first_failure;
    acc.block_sums.insert(acc.block_sums.end(), part.block_sums.begin(),
                          part.block_sums.end());
    return acc;
  };
  ExhaustivePartial merged =
      chunked_reduce<ExhaustivePartial>(blocks, workers, map, reduce, {});

  ExhaustiveReport report;
  report.count = merged.count;
  report.all_correct = !merged.first_failure.has_value();
  report.first_failure = merged.first_failure;
  report.max_cost = merged.max_cost;
  report.argmax = merged.argmax;
  double sum = 0.0;
  for (double s : merged.block_sums) sum += s;
  report.mean_cost =
      merged.count == 0 ? 0.0 : sum / static_cast<double>(merged.count);
  return report;
}

namespace {

// Depth-first search for a reversal schedule finishing within the
// threshold, all durations held as integer thirds.
struct ReversalSearch {
  int n;
  int threshold = 0;
  std::vector<int> arr;
  std::vector<int> finish;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exhausted = false;

  bool solved() const {
    for (int p = 0; p < n; ++p)
      if (arr[p] != p) return false;
    return true;
  }

  // Every remaining move of the token at p needs at least (dist + 2)/3 more
  // time after finish[p], with equality for one direct reversal.
  int lower_bound() const {
    int lb = 0;
    for (int p = 0; p < n; ++p)
      if (arr[p] != p)
        lb = std::max(lb, finish[p] + std::abs(arr[p] - p) + 2);
    return lb;
  }

  bool dfs(int prev_lo, int prev_hi) {
    if (solved()) return true;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (lower_bound() > threshold) return false;
    for (int lo = 0; lo + 1 < n; ++lo) {
      for (int hi = lo + 1; hi < n; ++hi) {
        // Adjacent ops on disjoint segments commute; explore them in one
        // canonical order only.
        if (prev_lo >= 0 && (hi < prev_lo || lo > prev_hi) &&
            lo < prev_lo)
          continue;
        int start = 0;
        for (int p = lo; p <= hi; ++p) start = std::max(start, finish[p]);
        int end = start + (hi - lo + 2);
        if (end > threshold) continue;
        std::reverse(arr.begin() + lo, arr.begin() + hi + 1);
        std::vector<int> saved(finish.begin() + lo, finish.begin() + hi + 1);
        std::fill(finish.begin() + lo, finish.begin() + hi + 1, end);
        bool found = dfs(lo, hi);
        std::copy(saved.begin(), saved.end(), finish.begin() + lo);
        std::reverse(arr.begin() + lo, arr.begin() + hi + 1);
        if (found) return true;
        if (exhausted) return false;
      }
    }
    return false;
  }
};

}  // namespace

BruteForceResult brute_force_min_time(const Permutation& perm,
                                      const Rational& cost_budget,
                                      std::uint64_t node_budget) {
  perm.validate();
  BruteForceResult result;
  if (is_identity(perm)) {
    if (Rational(0) <= cost_budget) {
      result.known = true;
      result.cost = Duration(Rational(0));
    }
    return result;
  }
  ReversalSearch search;
  search.n = perm.n();
  search.budget = node_budget;
  int start = 0;
  for (int p = 0; p < perm.n(); ++p)
    if (perm.dest[p] != p)
      start = std::max(start, std::abs(perm.dest[p] - p) + 2);
  for (int t = start; Rational(t, 3) <= cost_budget; ++t) {
    search.threshold = t;
    search.arr = perm.dest;
    search.finish.assign(search.n, 0);
    if (search.dfs(-1, -1)) {
      result.known = true;
      result.cost = Duration(Rational(t, 3));
      return result;
    }
    if (search.exhausted) return result;
  }
  return result;
}

double log_phi(int k, int n) {
  if (k <= 0 || k >= n) throw InvalidInput("log_phi needs 0 < k < n");
  double value = 0.0;
  if (2 * k <= n) {
    value = (static_cast<double>(n - 2 * k) / (2 * k + 1)) *
            std::lgamma(2.0 * k + 2.0);
    for (int i = k + 1; i <= 2 * k; ++i)
      value += 2.0 / i * std::lgamma(i + 1.0);
  } else {
    value = (static_cast<double>(2 * k + 2 - n) / n) * std::lgamma(n + 1.0);
    for (int i = k + 1; i <= n - 1; ++i)
      value += 2.0 / i * std::lgamma(i + 1.0);
  }
  return value;
}

std::uint64_t ball_size(int k, int n) {
  if (n < 0 || n > 10) throw InvalidInput("ball enumeration needs n <= 10");
  if (k < 0) throw InvalidInput("ball radius must be non-negative");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) inside = std::abs(p[i] - i) <= k;
    if (inside) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

BallFraction ball_fraction(int n, double eps, int trials,
                           std::uint64_t seed) {
  if (n <= 0 || trials <= 0)
    throw InvalidInput("ball fraction needs positive n and trials");
  int k = static_cast<int>(std::floor((1.0 - eps) * n));
  Rng rng(seed);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    Permutation perm = random_permutation(n, rng);
    if (d_infinity(perm) <= k) ++hits;
  }
  double fraction = static_cast<double>(hits) / trials;
  double std_error =
      std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(trials));
  return BallFraction{fraction, std_error};
}

}  // namespace revroute
