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

#include "revroute/token_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "revroute/errors.hpp"

namespace revroute {

int TokenTree::vertex_count() const {
  return static_cast<int>(std::count(in_tree.begin(), in_tree.end(), 1));
}

int TokenTree::token_count() const {
  return static_cast<int>(std::count(token.begin(), token.end(), 1));
}

TokenTree token_tree(const Graph& g, int root,
                     const std::vector<int>& movers) {
  if (movers.empty())
    throw InvalidInput("token tree needs at least one token");
  int n = g.n();
  if (root < 0 || root >= n)
    throw InvalidInput("token tree root out of range");

  TokenTree t;
  t.root = root;
  t.in_tree.assign(n, 0);
  t.parent.assign(n, -1);
  t.depth.assign(n, 0);
  t.children.assign(n, {});
  t.token.assign(n, 0);
  for (int v : movers) {
    if (v < 0 || v >= n) throw InvalidInput("token vertex out of range");
    if (t.token[v]) throw InvalidInput("token vertex repeated");
    t.token[v] = 1;
  }

  std::vector<int> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw InvalidInput("token tree requires a connected graph");

  std::vector<char> keep = t.token;
  keep[root] = 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (keep[*it] && *it != root) keep[parent[*it]] = 1;
  for (int v : order) {
    if (!keep[v]) continue;
    t.in_tree[v] = 1;
    if (v != root) {
      t.parent[v] = parent[v];
      t.depth[v] = t.depth[parent[v]] + 1;
      // BFS discovers a vertex's kept children in ascending id order.
      t.children[parent[v]].push_back(v);
    }
  }
  return t;
}

namespace {

bool is_intersection(const TokenTree& t, int v) {
  std::size_t kids = t.children[v].size();
  return kids >= 2 || (t.token[v] && kids >= 1);
}

void collect_subtree(const TokenTree& t, int v, std::vector<int>& out) {
  out.push_back(v);
  for (int c : t.children[v]) collect_subtree(t, c, out);
}

int subtree_tokens(const TokenTree& t, int v) {
  int total = t.token[v];
  for (int c : t.children[v]) total += subtree_tokens(t, c);
  return total;
}

// Emits a reversal along the explicit path and mirrors its effect on the
// occupancy flags.
void emit_path_reversal(TokenTree& t, const std::vector<int>& path,
                        std::vector<Op>& ops) {
  if (path.size() < 2) return;
  std::size_t a = 0, b = path.size() - 1;
  while (a < b) std::swap(t.token[path[a++]], t.token[path[b--]]);
  TreeReversal r;
  r.vertices = path;
  ops.emplace_back(std::move(r));
}

// Rounds of parent-child swaps: every tokenless vertex of the region pulls
// the token of its smallest-id tokened child still in the region, vertices
// scanned top-down.  Stops at the first round with nothing to pull; the
// terminal occupancy is closed upward within the region.
void percolate(TokenTree& t, const std::vector<char>& region,
               std::vector<Op>& ops) {
  std::vector<int> verts;
  for (int v = 0; v < static_cast<int>(region.size()); ++v)
    if (region[v]) verts.push_back(v);
  std::sort(verts.begin(), verts.end(), [&t](int a, int b) {
    return t.depth[a] != t.depth[b] ? t.depth[a] < t.depth[b] : a < b;
  });
  while (true) {
    MatchingRound round;
    std::vector<char> busy(region.size(), 0);
    for (int u : verts) {
      if (busy[u] || t.token[u]) continue;
      for (int c : t.children[u]) {
        if (!region[c] || !t.token[c] || busy[c]) continue;
        t.token[u] = 1;
        t.token[c] = 0;
        busy[u] = busy[c] = 1;
        round.swaps.emplace_back(u, c);
        break;
      }
    }
    if (round.swaps.empty()) break;
    ops.emplace_back(std::move(round));
  }
}

}  // namespace

std::vector<int> intersection_vertices(const TokenTree& t) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(t.in_tree.size()); ++v)
    if (t.in_tree[v] && is_intersection(t, v)) out.push_back(v);
  return out;
}

std::vector<Op> move_up_to(TokenTree& t, int v) {
  if (v < 0 || v >= static_cast<int>(t.in_tree.size()) || !t.in_tree[v])
    throw InvalidInput("vertex is not in the token tree");
  std::vector<Op> ops;

  std::vector<int> sub;
  collect_subtree(t, v, sub);

  // Children with more tokens first, so the cheap chains close last.
  std::vector<int> kids = t.children[v];
  std::sort(kids.begin(), kids.end(), [&t](int a, int b) {
    int ca = subtree_tokens(t, a), cb = subtree_tokens(t, b);
    return ca != cb ? ca > cb : a < b;
  });

  bool chains_only = true;
  for (int u : sub)
    if (u != v && is_intersection(t, u)) {
      chains_only = false;
      break;
    }

  if (chains_only) {
    // Every child subtree is a bare chain whose leaf holds the one token.
    // One reversal per chain lifts it to the chain head; when v itself is
    // tokenless the first chain is extended by v to fill it.
    bool first = true;
    for (int b : kids) {
      std::vector<int> path;
      if (first && !t.token[v]) path.push_back(v);
      int u = b;
      path.push_back(u);
      while (!t.children[u].empty()) {
        u = t.children[u][0];
        path.push_back(u);
      }
      emit_path_reversal(t, path, ops);
      first = false;
    }
    return ops;
  }

  for (int b : kids) {
    int m = subtree_tokens(t, b);
    std::vector<int> bsub;
    collect_subtree(t, b, bsub);
    int w = -1;
    for (int u : bsub) {
      if (!is_intersection(t, u)) continue;
      if (w < 0 || t.depth[u] < t.depth[w] ||
          (t.depth[u] == t.depth[w] && u < w))
        w = u;
    }
    if (w < 0) {
      // No junction below b: the subtree is a chain with a single token.
      for (int u : bsub)
        if (t.token[u]) {
          w = u;
          break;
        }
    }
    auto gathered = move_up_to(t, w);
    ops.insert(ops.end(), gathered.begin(), gathered.end());

    int d = t.depth[w] - t.depth[b];
    std::vector<int> path;  // path[0] = w rising to path[d] = b
    for (int cur = w;; cur = t.parent[cur]) {
      path.push_back(cur);
      if (cur == b) break;
    }

    if (d + 1 >= m) {
      // The cluster fits on the path: raise it onto the m vertices above w,
      // then one long reversal carries it to b.
      std::vector<char> region(t.in_tree.size(), 0);
      std::vector<int> wsub;
      collect_subtree(t, w, wsub);
      for (int u : wsub) region[u] = 1;
      for (int i = 1; i < m; ++i) region[path[i]] = 1;
      percolate(t, region, ops);
      for (int i = 0; i < m; ++i)
        if (!t.token[path[i]])
          throw VerificationError("cluster failed to fill the path");
      if (m <= d) {
        std::vector<int> down(path.rbegin(), path.rend());
        emit_path_reversal(t, down, ops);
      }
    } else {
      // Path shorter than the cluster: pull everything straight up to b.
      std::vector<char> region(t.in_tree.size(), 0);
      for (int u : bsub) region[u] = 1;
      percolate(t, region, ops);
    }
  }

  if (!t.token[v]) {
    // Swap the hole at v with the deepest bottom token; upward closure of
    // the children makes the whole path below v tokened.
    int u = -1;
    for (int x : sub) {
      if (!t.token[x]) continue;
      bool bottom = true;
      for (int c : t.children[x])
        if (t.token[c]) {
          bottom = false;
          break;
        }
      if (!bottom) continue;
      if (u < 0 || t.depth[x] > t.depth[u] ||
          (t.depth[x] == t.depth[u] && x < u))
        u = x;
    }
    if (u < 0) throw VerificationError("subtree holds no token");
    std::vector<int> path;
    for (int cur = u; cur != v; cur = t.parent[cur]) {
      if (!t.token[cur])
        throw VerificationError("hole swap crossed a tokenless vertex");
      path.push_back(cur);
    }
    path.push_back(v);
    std::reverse(path.begin(), path.end());
    emit_path_reversal(t, path, ops);
  }
  return ops;
}

Schedule tree_route_matchings(const Graph& tree, const Permutation& perm) {
  perm.validate();
  int n = tree.n();
  if (perm.n() != n)
    throw InvalidInput("permutation size does not match tree");
  if (n == 0 || !tree.connected() || tree.edge_count() != n - 1)
    throw InvalidInput("matching router requires a tree");

  int root = graph_center(tree).center;
  std::vector<int> parent(n, -1), depth(n, 0), order;
  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : tree.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }

  // Fill leaves bottom-up: every vertex of maximal remaining depth is a
  // leaf of the still-active subtree, so static (depth, id) order works.
  std::vector<int> targets(order);
  std::sort(targets.begin(), targets.end(), [&depth](int a, int b) {
    return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
  });

  std::vector<int> arr = perm.dest;
  std::vector<std::pair<int, int>> swaps;
  for (int leaf : targets) {
    if (leaf == root) continue;
    int q = 0;
    while (arr[q] != leaf) ++q;
    // Walk q and leaf up to their meeting point to lay out the swap path.
    std::vector<int> up_q, up_l;
    int a = q, b = leaf;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        up_q.push_back(a);
        a = parent[a];
      } else {
        up_l.push_back(b);
        b = parent[b];
      }
    }
    up_q.push_back(a);
    for (auto it = up_l.rbegin(); it != up_l.rend(); ++it)
      up_q.push_back(*it);
    for (std::size_t i = 0; i + 1 < up_q.size(); ++i) {
      std::swap(arr[up_q[i]], arr[up_q[i + 1]]);
      swaps.emplace_back(up_q[i], up_q[i + 1]);
    }
  }

  // Greedy list scheduling; conflicting swaps keep their relative order.
  std::vector<int> last_round(n, 0);
  std::vector<MatchingRound> rounds;
  for (const auto& [u, v] : swaps) {
    int r = std::max(last_round[u], last_round[v]) + 1;
    if (static_cast<int>(rounds.size()) < r) rounds.resize(r);
    rounds[r - 1].swaps.emplace_back(u, v);
    last_round[u] = last_round[v] = r;
  }

  Schedule s;
  s.n = n;
  for (auto& round : rounds) s.ops.emplace_back(std::move(round));
  return s;
}

SparseRoute route_sparse_sections(const Graph& g, const Permutation& perm) {
  perm.validate();
  if (perm.n() != g.n())
    throw InvalidInput("permutation size does not match graph");
  SparseRoute out;
  out.schedule.n = g.n();
  out.compression_ops = 0;
  out.inner_ops = 0;
  out.root = 0;

  std::vector<int> movers;
  for (int v = 0; v < g.n(); ++v)
    if (perm.dest[v] != v) movers.push_back(v);
  if (movers.empty()) return out;

  // Root at the vertex closest to the farthest token; this keeps the
  // gathering radius at most the graph radius and lets nearby clusters
  // stay cheap.
  std::vector<int> far(g.n(), 0);
  for (int y : movers) {
    std::vector<int> dist = bfs_distances(g, y);
    for (int v = 0; v < g.n(); ++v) {
      if (dist[v] < 0)
        throw InvalidInput("sparse routing requires a connected graph");
      far[v] = std::max(far[v], dist[v]);
    }
  }
  int root = 0;
  for (int v = 1; v < g.n(); ++v)
    if (far[v] < far[root]) root = v;
  out.root = root;

  TokenTree t = token_tree(g, root, movers);
  std::vector<Op> compression = move_up_to(t, root);

  int k = static_cast<int>(movers.size());
  std::vector<int> cluster;
  for (int v = 0; v < g.n(); ++v)
    if (t.token[v]) cluster.push_back(v);
  if (static_cast<int>(cluster.size()) != k)
    throw VerificationError("gathering lost a token");

  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < k; ++i) local[cluster[i]] = i;
  Graph inner_graph(k);
  for (int v : cluster) {
    if (v == root) continue;
    if (local[t.parent[v]] < 0)
      throw VerificationError("gathered cluster is not closed upward");
    inner_graph.add_edge(local[t.parent[v]], local[v]);
  }

  // Where the gathering leaves each original position's token.
  std::vector<int> carried(g.n());
  std::iota(carried.begin(), carried.end(), 0);
  for (const Op& op : compression) apply_op(carried, op);
  std::vector<int> landing(g.n(), -1);
  for (int p = 0; p < g.n(); ++p) landing[carried[p]] = p;

  Permutation inner;
  inner.dest.assign(k, -1);
  for (int y : movers) {
    if (local[landing[y]] < 0 || local[landing[perm.dest[y]]] < 0)
      throw VerificationError("token landed outside the cluster");
    inner.dest[local[landing[y]]] = local[landing[perm.dest[y]]];
  }
  inner.validate();
  Schedule inner_schedule = tree_route_matchings(inner_graph, inner);

  out.schedule.ops = compression;
  for (const Op& op : inner_schedule.ops) {
    MatchingRound global;
    for (const auto& [u, v] : std::get<MatchingRound>(op).swaps)
      global.swaps.emplace_back(cluster[u], cluster[v]);
    out.schedule.ops.emplace_back(std::move(global));
  }
  for (auto it = compression.rbegin(); it != compression.rend(); ++it)
    out.schedule.ops.push_back(*it);
  out.compression_ops = compression.size();
  out.inner_ops = inner_schedule.ops.size();
  return out;
}

Schedule route_sparse_general(const Graph& g, const Permutation& perm) {
  return route_sparse_sections(g, perm).schedule;
}

}  // namespace revroute
