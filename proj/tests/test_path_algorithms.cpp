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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "revroute/errors.hpp"
#include "revroute/path_algorithms.hpp"
#include "revroute/rng.hpp"

using namespace revroute;

namespace {

Bits apply_reversals(const Bits& bits, const std::vector<PathReversal>& ops) {
  Bits work = bits;
  for (const PathReversal& r : ops)
    std::reverse(work.begin() + r.lo, work.begin() + r.hi + 1);
  return work;
}

Duration reversal_makespan(std::size_t n, const std::vector<PathReversal>& ops) {
  Schedule s;
  s.n = static_cast<int>(n);
  for (const PathReversal& r : ops) s.ops.emplace_back(r);
  return makespan(s, CostModel::linear_third);
}

Bits random_bits(int n, Rng& rng) {
  Bits b(n);
  for (int i = 0; i < n; ++i) b[i] = rng.below(2) ? 1 : 0;
  return b;
}

}  // namespace

TEST_CASE("odd even sort anchors") {
  CHECK(odd_even_sort(identity_permutation(6)).ops.empty());

  Schedule s = odd_even_sort(descending_permutation(4));
  CHECK(s.ops.size() == 4);
  CHECK(routes(s, descending_permutation(4)));
  CHECK(makespan(s, CostModel::unit_swap).rational() == Rational(4));
  CHECK(makespan(s, CostModel::linear_third).rational() == Rational(4));

  Schedule one = odd_even_sort(Permutation{{1, 0}});
  CHECK(one.ops.size() == 1);
  CHECK(makespan(one, CostModel::unit_swap).rational() == Rational(1));
}

TEST_CASE("odd even sort dominates displacement") {
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    Permutation p = random_permutation(32, rng);
    Schedule s = odd_even_sort(p);
    CHECK(routes(s, p));
    CHECK(Rational(d_infinity(p)) <=
          makespan(s, CostModel::unit_swap).rational());
  }
}

TEST_CASE("tripartite sort anchor") {
  std::vector<PathReversal> ops = tbs(parse_bits("11001001"));
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == PathReversal{0, 2});
  CHECK(ops[1] == PathReversal{3, 4});
  CHECK(ops[2] == PathReversal{1, 6});
  CHECK(bits_sorted(apply_reversals(parse_bits("11001001"), ops)));
  CHECK(reversal_makespan(8, ops).rational() == Rational(11, 3));

  CHECK(tbs(parse_bits("0001")).empty());
  CHECK(tbs(parse_bits("")).empty());
  std::vector<PathReversal> swap = tbs(parse_bits("10"));
  REQUIRE(swap.size() == 1);
  CHECK(swap[0] == PathReversal{0, 1});
}

TEST_CASE("tripartite sort on a long string") {
  Bits bits = parse_bits("010011100011010011110111001");
  std::vector<PathReversal> ops = tbs(bits);
  CHECK(bits_sorted(apply_reversals(bits, ops)));
  REQUIRE_FALSE(ops.empty());
  // The final merge folds the middle third back; its segment spans
  // positions 5..20, which costs 17/3 on its own.
  CHECK(ops.back() == PathReversal{5, 20});
  CHECK(reversal_duration(ops.back().length(), CostModel::linear_third)
            .rational() == Rational(17, 3));
}

TEST_CASE("both bit sorters sort every short string") {
  for (int n = 0; n <= 12; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Bits bits(n);
      for (int i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
      Bits t = apply_reversals(bits, tbs(bits));
      Bits a = apply_reversals(bits, atbs(bits));
      CHECK(bits_sorted(t));
      CHECK(bits_sorted(a));
    }
  }
}

TEST_CASE("adaptive sorter never loses to the plain one") {
  for (int n : {8, 9, 10, 11, 12}) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      Bits bits(n);
      for (int i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
      Duration plain = reversal_makespan(n, tbs(bits));
      Duration adaptive = reversal_makespan(n, atbs(bits));
      REQUIRE(adaptive.rational() <= plain.rational());
    }
  }
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Bits bits = random_bits(96, rng);
    CHECK(reversal_makespan(96, atbs(bits)).rational() <=
          reversal_makespan(96, tbs(bits)).rational());
  }
}

TEST_CASE("adaptive sorter is deterministic") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    Bits bits = random_bits(40, rng);
    CHECK(atbs(bits) == atbs(bits));
  }
  CHECK(atbs(parse_bits("0011")).empty());
}

TEST_CASE("divide and conquer first level") {
  Permutation p{{7, 6, 0, 2, 5, 1, 3, 4}};
  Schedule s = gdc_tbs(p);
  CHECK(routes(s, p));

  // Root labels of this arrangement are 11001001, so the first level is
  // exactly the three tripartite reversals; after them each half is closed.
  std::size_t root_ops = tbs(binary_label(p.dest, 0, 8)).size();
  REQUIRE(root_ops == 3);
  std::vector<int> arr = p.dest;
  for (std::size_t i = 0; i < root_ops; ++i) apply_op(arr, s.ops[i]);
  CHECK(arr == std::vector<int>{0, 3, 1, 2, 5, 7, 6, 4});
  CHECK(*std::max_element(arr.begin(), arr.begin() + 4) < 4);
  CHECK(*std::min_element(arr.begin() + 4, arr.end()) >= 4);
}

TEST_CASE("every path router sorts every small permutation") {
  for (const char* name : {"oes", "gdc-tbs", "gdc-atbs", "middle-exchange"}) {
    for (int n = 1; n <= 6; ++n) {
      std::vector<int> dest(n);
      std::iota(dest.begin(), dest.end(), 0);
      do {
        Permutation p{dest};
        Schedule s = run_path_algorithm(name, p);
        REQUIRE(routes(s, p));
      } while (std::next_permutation(dest.begin(), dest.end()));
    }
  }
  CHECK_THROWS_AS(run_path_algorithm("bogus", identity_permutation(3)),
                  InvalidInput);
}

TEST_CASE("divide and conquer on random inputs") {
  // Composed makespans are compared on average only: a cheaper label sort
  // may order equal-label tokens differently, so the adaptive variant can
  // lose on an individual permutation (e.g. [2,0,1,3]).
  Rng rng(99);
  Rational plain_total, adaptive_total;
  for (int t = 0; t < 25; ++t) {
    Permutation p = random_permutation(64, rng);
    Schedule st = gdc_tbs(p);
    Schedule sa = gdc_atbs(p);
    CHECK(routes(st, p));
    CHECK(routes(sa, p));
    plain_total = plain_total + makespan(st, CostModel::linear_third).rational();
    adaptive_total =
        adaptive_total + makespan(sa, CostModel::linear_third).rational();
  }
  CHECK(adaptive_total <= plain_total);
}

TEST_CASE("adaptive divide and conquer can lose on a single input") {
  // Labels of [2,0,1,3] are 1001; the adaptive sorter's optimal single
  // reversal (0,2) swaps the two left-half tokens, costing an extra swap
  // at the next level, while the plain sorter's two swaps happen to leave
  // both halves sorted.
  Permutation p{{2, 0, 1, 3}};
  CHECK(makespan(gdc_tbs(p), CostModel::linear_third).rational() ==
        Rational(2));
  CHECK(makespan(gdc_atbs(p), CostModel::linear_third).rational() ==
        Rational(7, 3));
}

TEST_CASE("middle exchange handles sparse inputs") {
  CHECK(middle_exchange(identity_permutation(50)).ops.empty());

  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    int n = 20 + static_cast<int>(rng.below(60));
    // Plant k movers on a random support with a derangement action.
    int k = 2 + static_cast<int>(rng.below(3));
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(rng.below(n - i));
      std::swap(ids[i], ids[j]);
    }
    std::vector<int> spots(ids.begin(), ids.begin() + k);
    std::vector<int> image = spots;
    bool fixed = true;
    while (fixed) {
      for (int i = k - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(i + 1));
        std::swap(image[i], image[j]);
      }
      fixed = false;
      for (int i = 0; i < k; ++i) fixed = fixed || image[i] == spots[i];
    }
    Permutation p = identity_permutation(n);
    for (int i = 0; i < k; ++i) p.dest[spots[i]] = image[i];

    Schedule s = middle_exchange(p);
    CHECK(routes(s, p));
    // Compression plus dilation clears the median window twice; everything
    // else is a small inner sort.
    CHECK(makespan(s, CostModel::linear_third).to_double() <
          n / 3.0 + 5.0 * k * k);
  }
}

TEST_CASE("middle exchange on dense permutations") {
  Rng rng(8);
  for (int t = 0; t < 15; ++t) {
    Permutation p = random_permutation(12, rng);
    CHECK(routes(middle_exchange(p), p));
  }
}
