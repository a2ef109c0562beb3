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

#include "revroute/schedule.hpp"

#include <algorithm>

#include "revroute/errors.hpp"

namespace revroute {

bool is_noop(const Op& op) {
  if (const auto* r = std::get_if<PathReversal>(&op)) return r->length() <= 1;
  if (const auto* t = std::get_if<TreeReversal>(&op)) return t->length() <= 1;
  return std::get<MatchingRound>(op).swaps.empty();
}

Schedule normalized(const Schedule& s) {
  Schedule out;
  out.n = s.n;
  for (const Op& op : s.ops)
    if (!is_noop(op)) out.ops.push_back(op);
  return out;
}

Duration op_duration(const Op& op, CostModel model) {
  if (const auto* r = std::get_if<PathReversal>(&op))
    return reversal_duration(r->length(), model);
  if (const auto* t = std::get_if<TreeReversal>(&op))
    return reversal_duration(t->length(), model);
  return matching_round_duration(model);
}

std::vector<int> op_support(const Op& op) {
  std::vector<int> support;
  if (const auto* r = std::get_if<PathReversal>(&op)) {
    for (int p = r->lo; p <= r->hi; ++p) support.push_back(p);
  } else if (const auto* t = std::get_if<TreeReversal>(&op)) {
    support = t->vertices;
  } else {
    for (const auto& [u, v] : std::get<MatchingRound>(op).swaps) {
      support.push_back(u);
      support.push_back(v);
    }
  }
  return support;
}

namespace {

void check_position(int p, int n) {
  if (p < 0 || p >= n) throw InvalidInput("op touches position out of range");
}

}  // namespace

void apply_op(std::vector<int>& arr, const Op& op) {
  int n = static_cast<int>(arr.size());
  if (const auto* r = std::get_if<PathReversal>(&op)) {
    if (r->lo > r->hi) throw InvalidInput("reversal with lo > hi");
    check_position(r->lo, n);
    check_position(r->hi, n);
    std::reverse(arr.begin() + r->lo, arr.begin() + r->hi + 1);
  } else if (const auto* t = std::get_if<TreeReversal>(&op)) {
    std::vector<char> seen(arr.size(), 0);
    for (int v : t->vertices) {
      check_position(v, n);
      if (seen[v]) throw InvalidInput("tree reversal repeats a vertex");
      seen[v] = 1;
    }
    int k = t->length();
    for (int i = 0; i < k / 2; ++i)
      std::swap(arr[t->vertices[i]], arr[t->vertices[k - 1 - i]]);
  } else {
    std::vector<char> busy(arr.size(), 0);
    for (const auto& [u, v] : std::get<MatchingRound>(op).swaps) {
      check_position(u, n);
      check_position(v, n);
      if (u == v || busy[u] || busy[v])
        throw InvalidInput("matching round swaps are not vertex-disjoint");
      busy[u] = busy[v] = 1;
      std::swap(arr[u], arr[v]);
    }
  }
}

void apply_schedule(std::vector<int>& arr, const Schedule& s) {
  if (static_cast<int>(arr.size()) != s.n)
    throw InvalidInput("schedule size does not match arrangement");
  for (const Op& op : s.ops) apply_op(arr, op);
}

Duration makespan(const Schedule& s, CostModel model) {
  // Ops touching a common position execute in list order, so tracking the
  // last finish time per position realizes the earliest-start rule exactly.
  std::vector<Duration> finish(s.n, Duration(Rational(0)));
  Duration total(Rational(0));
  for (const Op& op : s.ops) {
    if (is_noop(op)) continue;
    Duration start(Rational(0));
    std::vector<int> support = op_support(op);
    for (int p : support) {
      check_position(p, s.n);
      start = max(start, finish[p]);
    }
    Duration end = start + op_duration(op, model);
    for (int p : support) finish[p] = end;
    total = max(total, end);
  }
  return total;
}

bool routes(const Schedule& s, const Permutation& perm) {
  if (s.n != perm.n()) return false;
  // Label each token with its destination; routing is complete when every
  // position holds its own label.
  std::vector<int> arr = perm.dest;
  apply_schedule(arr, s);
  for (int p = 0; p < s.n; ++p)
    if (arr[p] != p) return false;
  return true;
}

}  // namespace revroute
