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

#include "revroute/path_algorithms.hpp"

#include <algorithm>
#include <climits>
#include <vector>

#include "revroute/errors.hpp"

namespace revroute {

Schedule odd_even_sort(const Permutation& perm) {
  perm.validate();
  Schedule s;
  s.n = perm.n();
  std::vector<int> arr = perm.dest;
  int empty_streak = 0;
  int phase = 0;
  while (empty_streak < 2) {
    MatchingRound round;
    for (int i = phase % 2; i + 1 < s.n; i += 2) {
      if (arr[i] > arr[i + 1]) {
        std::swap(arr[i], arr[i + 1]);
        round.swaps.emplace_back(i, i + 1);
      }
    }
    if (round.swaps.empty()) {
      ++empty_streak;
    } else {
      empty_streak = 0;
      s.ops.emplace_back(std::move(round));
    }
    if (++phase > 2 * s.n + 4)
      throw VerificationError("odd-even sort failed to converge");
  }
  return s;
}

namespace {

// Reverses work[lo..hi] and records the op when it moves anything.
void emit_reversal(Bits& work, int lo, int hi,
                   std::vector<PathReversal>& out) {
  if (lo >= hi) return;
  std::reverse(work.begin() + lo, work.begin() + hi + 1);
  out.push_back(PathReversal{lo, hi});
}

bool segment_sorted(const Bits& work, int lo, int len, bool descending) {
  for (int i = lo + 1; i < lo + len; ++i) {
    bool descent = work[i - 1] > work[i];
    if (descending ? work[i - 1] < work[i] : descent) return false;
  }
  return true;
}

// Emits the reversal that joins the two out-of-place runs left between the
// recursively sorted sections, or nothing when they are already in order.
void merge_runs(Bits& work, int lo, int len, bool descending,
                std::vector<PathReversal>& out) {
  std::uint8_t early = descending ? 1 : 0;
  int first = -1, last = -1;
  for (int i = lo; i < lo + len; ++i) {
    if (first < 0 && work[i] != early) first = i;
    if (work[i] == early) last = i;
  }
  if (first >= 0 && first < last) emit_reversal(work, first, last, out);
}

void tbs_rec(Bits& work, int lo, int len, bool descending,
             std::vector<PathReversal>& out) {
  if (len <= 1 || segment_sorted(work, lo, len, descending)) return;
  int z1 = (len + 2) / 3;
  int z2 = (2 * len + 2) / 3;
  tbs_rec(work, lo, z1, descending, out);
  tbs_rec(work, lo + z1, z2 - z1, !descending, out);
  tbs_rec(work, lo + z2, len - z2, descending, out);
  merge_runs(work, lo, len, descending, out);
}

}  // namespace

std::vector<PathReversal> tbs(const Bits& bits) {
  Bits work = bits;
  std::vector<PathReversal> out;
  tbs_rec(work, 0, static_cast<int>(work.size()), false, out);
  return out;
}

namespace {

// Memoized minimizer over partition pairs.  Costs are integer thirds of the
// linear reversal duration, so ties and comparisons stay exact.
struct AdaptivePlan {
  int n = 0;
  std::vector<int> zeros_prefix;        // zeros in bits[0..i)
  std::vector<int> descent_prefix[2];   // "10" / "01" patterns before i
  std::vector<int> cost[2];             // by orientation, index lo * n + hi
  std::vector<int> split_i[2];
  std::vector<int> split_j[2];

  explicit AdaptivePlan(const Bits& bits)
      : n(static_cast<int>(bits.size())) {
    zeros_prefix.assign(n + 1, 0);
    for (int i = 0; i < n; ++i)
      zeros_prefix[i + 1] = zeros_prefix[i] + (bits[i] == 0 ? 1 : 0);
    for (int o = 0; o < 2; ++o) {
      descent_prefix[o].assign(n + 1, 0);
      cost[o].assign(static_cast<std::size_t>(n) * n, 0);
      split_i[o].assign(static_cast<std::size_t>(n) * n, -1);
      split_j[o].assign(static_cast<std::size_t>(n) * n, -1);
    }
    for (int i = 1; i < n; ++i) {
      descent_prefix[0][i + 1] =
          descent_prefix[0][i] + (bits[i - 1] > bits[i] ? 1 : 0);
      descent_prefix[1][i + 1] =
          descent_prefix[1][i] + (bits[i - 1] < bits[i] ? 1 : 0);
    }
  }

  int zeros(int lo, int hi) const {
    return zeros_prefix[hi + 1] - zeros_prefix[lo];
  }
  bool sorted(int o, int lo, int hi) const {
    return descent_prefix[o][hi + 1] - descent_prefix[o][lo + 1] == 0;
  }

  void solve() {
    for (int len = 2; len <= n; ++len) {
      for (int lo = 0; lo + len <= n; ++lo) {
        int hi = lo + len - 1;
        for (int o = 0; o < 2; ++o) {
          if (sorted(o, lo, hi)) continue;
          int best = INT_MAX, best_i = -1, best_j = -1;
          for (int i = lo; i < hi; ++i) {
            int cost_a = cost[o][lo * n + i];
            int za = zeros(lo, i);
            int oa = i - lo + 1 - za;
            for (int j = i; j < hi; ++j) {
              int cost_b = j == i ? 0 : cost[1 - o][(i + 1) * n + j];
              int cost_c = cost[o][(j + 1) * n + hi];
              int zb = j == i ? 0 : zeros(i + 1, j);
              int ob = j == i ? 0 : j - i - zb;
              int zc = zeros(j + 1, hi);
              int oc = hi - j - zc;
              int run1 = o == 0 ? oa + ob : za + zb;
              int run2 = o == 0 ? zb + zc : ob + oc;
              int merge = run1 > 0 && run2 > 0 ? run1 + run2 + 1 : 0;
              int total = std::max(std::max(cost_a, cost_b), cost_c) + merge;
              if (total < best) {
                best = total;
                best_i = i;
                best_j = j;
              }
            }
          }
          cost[o][lo * n + hi] = best;
          split_i[o][lo * n + hi] = best_i;
          split_j[o][lo * n + hi] = best_j;
        }
      }
    }
  }

  void rebuild(Bits& work, int o, int lo, int hi,
               std::vector<PathReversal>& out) const {
    int i = split_i[o][lo * n + hi];
    if (i < 0) return;  // segment already sorted
    int j = split_j[o][lo * n + hi];
    rebuild(work, o, lo, i, out);
    if (j > i) rebuild(work, 1 - o, i + 1, j, out);
    rebuild(work, o, j + 1, hi, out);
    merge_runs(work, lo, hi - lo + 1, o == 1, out);
  }
};

}  // namespace

std::vector<PathReversal> atbs(const Bits& bits) {
  int n = static_cast<int>(bits.size());
  if (n <= 1 || bits_sorted(bits)) return {};
  AdaptivePlan plan(bits);
  plan.solve();
  Bits work = bits;
  std::vector<PathReversal> out;
  plan.rebuild(work, 0, 0, n - 1, out);
  if (!bits_sorted(work))
    throw VerificationError("adaptive plan failed to sort its input");
  return out;
}

namespace {

void gdc_rec(std::vector<int>& arr, int lo, int len,
             const BinarySorter& sorter, std::vector<Op>& ops) {
  if (len <= 1) return;
  Bits labels = binary_label(arr, lo, len);
  if (!bits_sorted(labels)) {
    for (const PathReversal& r : sorter(labels)) {
      if (r.lo < 0 || r.hi >= len || r.lo > r.hi)
        throw VerificationError("binary sorter emitted a bad reversal");
      if (r.lo == r.hi) continue;
      std::reverse(arr.begin() + lo + r.lo, arr.begin() + lo + r.hi + 1);
      ops.emplace_back(PathReversal{lo + r.lo, lo + r.hi});
    }
    if (!bits_sorted(binary_label(arr, lo, len)))
      throw VerificationError("binary sorter failed to sort its labels");
  }
  int half = len / 2;
  gdc_rec(arr, lo, half, sorter, ops);
  gdc_rec(arr, lo + half, len - half, sorter, ops);
}

}  // namespace

Schedule gdc(const Permutation& perm, const BinarySorter& sorter) {
  perm.validate();
  Schedule s;
  s.n = perm.n();
  std::vector<int> arr = perm.dest;
  gdc_rec(arr, 0, s.n, sorter, s.ops);
  return s;
}

Schedule gdc_tbs(const Permutation& perm) { return gdc(perm, tbs); }

Schedule gdc_atbs(const Permutation& perm) { return gdc(perm, atbs); }

Schedule middle_exchange(const Permutation& perm) {
  perm.validate();
  int n = perm.n();
  Schedule s;
  s.n = n;
  std::vector<int> movers;
  for (int i = 0; i < n; ++i)
    if (perm.dest[i] != i) movers.push_back(i);
  int k = static_cast<int>(movers.size());
  if (k == 0) return s;

  int h = n / 2;
  int t = 0;
  while (t < k && movers[t] < h) ++t;

  // Gather the movers left of the median into [h-t, h-1] and the rest into
  // [h, h+k-t-1].  Each side is a chain of reversals, so the two sides run
  // concurrently under the makespan semantics.
  std::vector<PathReversal> compression;
  auto push = [&compression](int lo, int hi) {
    if (lo < hi) compression.push_back(PathReversal{lo, hi});
  };
  for (int i = 1; i < t; ++i) push(movers[i - 1] - i + 1, movers[i] - 1);
  if (t >= 1) push(movers[t - 1] - t + 1, h - 1);
  for (int j = k - 1; j > t; --j)
    push(movers[j - 1] + 1, movers[j] + k - 1 - j);
  if (t < k) push(h, movers[t] + k - t - 1);

  // Track where compression leaves each original position's token.
  std::vector<int> carried(n);
  for (int i = 0; i < n; ++i) carried[i] = i;
  for (const PathReversal& r : compression)
    std::reverse(carried.begin() + r.lo, carried.begin() + r.hi + 1);
  std::vector<int> landing(n, -1);
  for (int p = 0; p < n; ++p) landing[carried[p]] = p;

  int window_lo = h - t;
  Permutation inner;
  inner.dest.assign(k, 0);
  for (int y : movers)
    inner.dest[landing[y] - window_lo] = landing[perm.dest[y]] - window_lo;
  inner.validate();

  for (const PathReversal& r : compression) s.ops.emplace_back(r);
  for (const Op& op : odd_even_sort(inner).ops) {
    MatchingRound shifted;
    for (const auto& [u, v] : std::get<MatchingRound>(op).swaps)
      shifted.swaps.emplace_back(u + window_lo, v + window_lo);
    s.ops.emplace_back(std::move(shifted));
  }
  for (auto it = compression.rbegin(); it != compression.rend(); ++it)
    s.ops.emplace_back(*it);
  return s;
}

Schedule run_path_algorithm(const std::string& name,
                            const Permutation& perm) {
  if (name == "oes") return odd_even_sort(perm);
  if (name == "gdc-tbs") return gdc_tbs(perm);
  if (name == "gdc-atbs") return gdc_atbs(perm);
  if (name == "middle-exchange") return middle_exchange(perm);
  throw InvalidInput("unknown routing algorithm: " + name);
}

}  // namespace revroute
