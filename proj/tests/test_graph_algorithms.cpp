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
#include <vector>

#include "revroute/errors.hpp"
#include "revroute/rng.hpp"
#include "revroute/token_tree.hpp"

using namespace revroute;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Random tree: each vertex beyond 0 attaches to an earlier one.
Graph random_tree(int n, Rng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    g.add_edge(v, static_cast<int>(rng.below(v)));
  return g;
}

Permutation random_sparse(int n, int k, Rng& rng) {
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
  return p;
}

}  // namespace

TEST_CASE("graph construction and validation") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(g.add_edge(0, 1), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidInput);
  CHECK_FALSE(g.connected());
  g.add_edge(2, 3);
  CHECK(g.connected());
}

TEST_CASE("edge list and grid parsing") {
  Graph g = Graph::from_edge_list("4\n0 1\n1 2\n\n2 3\n");
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(Graph::from_edge_list("3\n0 1 2\n"), InvalidInput);
  CHECK_THROWS_AS(Graph::from_edge_list(""), InvalidInput);

  Graph grid = Graph::grid(2, 3);
  CHECK(grid.n() == 6);
  CHECK(grid.edge_count() == 7);
  CHECK(grid.has_edge(0, 1));
  CHECK(grid.has_edge(0, 3));
  CHECK_FALSE(grid.has_edge(2, 3));
  CHECK_THROWS_AS(Graph::grid(0, 3), InvalidInput);

  CHECK(load_graph_arg("grid:5x5").n() == 25);
  CHECK_THROWS_AS(load_graph_arg("grid:5x"), InvalidInput);
  CHECK_THROWS_AS(load_graph_arg("/nonexistent/graph.txt"), InvalidInput);
}

TEST_CASE("bfs distances and centers") {
  Graph p5 = path_graph(5);
  CHECK(bfs_distances(p5, 0) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(graph_center(p5).center == 2);
  CHECK(graph_center(p5).radius == 2);

  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(graph_center(k4).center == 0);
  CHECK(graph_center(k4).radius == 1);

  CHECK(graph_center(Graph::grid(5, 5)).center == 12);
  CHECK(graph_center(Graph::grid(5, 5)).radius == 4);
  CHECK(graph_center(Graph::grid(4, 4)).center == 5);
  CHECK(graph_center(Graph::grid(4, 4)).radius == 4);

  Graph split(3);
  split.add_edge(0, 1);
  CHECK(bfs_distances(split, 0)[2] == -1);
  CHECK_THROWS_AS(graph_center(split), InvalidInput);
}

TEST_CASE("token tree pruning") {
  Graph grid = Graph::grid(3, 3);
  TokenTree t = token_tree(grid, 0, {8});
  CHECK(t.vertex_count() == 5);
  CHECK(t.token_count() == 1);
  CHECK(t.parent[8] == 5);
  CHECK(t.parent[5] == 2);
  CHECK(t.parent[2] == 1);
  CHECK(t.parent[1] == 0);
  CHECK(t.depth[8] == 4);
  CHECK_FALSE(t.in_tree[4]);
  CHECK(intersection_vertices(t).empty());

  TokenTree ends = token_tree(path_graph(5), 2, {0, 4});
  CHECK(ends.vertex_count() == 5);
  CHECK(ends.children[2] == std::vector<int>{1, 3});
  CHECK(intersection_vertices(ends) == std::vector<int>{2});

  CHECK_THROWS_AS(token_tree(grid, 0, {}), InvalidInput);
  CHECK_THROWS_AS(token_tree(grid, 0, {3, 3}), InvalidInput);
  Graph split(2);
  CHECK_THROWS_AS(token_tree(split, 0, {1}), InvalidInput);
}

TEST_CASE("intersections stay below the token count") {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    int n = 10 + static_cast<int>(rng.below(30));
    Graph g = random_tree(n, rng);
    int k = 2 + static_cast<int>(rng.below(4));
    std::vector<int> movers;
    while (static_cast<int>(movers.size()) < k) {
      int v = static_cast<int>(rng.below(n));
      if (std::find(movers.begin(), movers.end(), v) == movers.end())
        movers.push_back(v);
    }
    TokenTree tree = token_tree(g, 0, movers);
    CHECK(static_cast<int>(intersection_vertices(tree).size()) <= k - 1);
  }
}

TEST_CASE("single token rides one reversal to the root") {
  Graph grid = Graph::grid(3, 3);
  TokenTree t = token_tree(grid, 0, {8});
  std::vector<Op> ops = move_up_to(t, 0);
  CHECK(t.token[0]);
  CHECK(t.token_count() == 1);
  REQUIRE(ops.size() == 1);
  const auto* rev = std::get_if<TreeReversal>(&ops[0]);
  REQUIRE(rev != nullptr);
  CHECK(rev->length() == 5);
  // One reversal over the depth-4 chain costs (5+1)/3 = 2.
  CHECK(op_duration(ops[0], CostModel::linear_third).rational() ==
        Rational(2));
}

TEST_CASE("gathering leaves no token below a hole") {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 8 + static_cast<int>(rng.below(40));
    Graph g = rng.below(2) ? random_tree(n, rng) : Graph::grid(4, (n + 3) / 4);
    n = g.n();
    int k = 2 + static_cast<int>(rng.below(3));
    std::vector<int> movers;
    while (static_cast<int>(movers.size()) < k) {
      int v = static_cast<int>(rng.below(n));
      if (std::find(movers.begin(), movers.end(), v) == movers.end())
        movers.push_back(v);
    }
    int root = static_cast<int>(rng.below(n));
    TokenTree t = token_tree(g, root, movers);
    std::vector<char> before = t.token;
    std::vector<Op> ops = move_up_to(t, root);

    // Replay the emitted ops on a plain occupancy vector; the tree's own
    // bookkeeping has to agree with them.
    std::vector<int> occupancy(n, 0);
    for (int v : movers) occupancy[v] = 1;
    for (const Op& op : ops) apply_op(occupancy, op);
    for (int v = 0; v < n; ++v)
      CHECK(occupancy[v] == (t.token[v] ? 1 : 0));
    CHECK(t.token_count() == k);

    // Postcondition: a tokenless vertex has no token anywhere below it.
    for (int v = 0; v < n; ++v) {
      if (!t.in_tree[v] || t.token[v] || v == root) continue;
      for (int u = 0; u < n; ++u) {
        if (!t.in_tree[u] || !t.token[u]) continue;
        int w = u;
        while (w != -1 && w != v) w = t.parent[w];
        CHECK(w != v);
      }
    }
  }
}

TEST_CASE("matching router on tiny trees") {
  CHECK(tree_route_matchings(path_graph(4), identity_permutation(4))
            .ops.empty());

  Permutation ends{{2, 1, 0}};
  Schedule s = tree_route_matchings(path_graph(3), ends);
  CHECK(routes(s, ends));
  CHECK(s.ops.size() == 3);

  Graph cycle(3);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(0, 2);
  CHECK_THROWS_AS(tree_route_matchings(cycle, identity_permutation(3)),
                  InvalidInput);
}

TEST_CASE("matching router on random trees") {
  Rng rng(404);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng.below(10));
    Graph g = random_tree(n, rng);
    Permutation p = random_permutation(n, rng);
    Schedule s = tree_route_matchings(g, p);
    CHECK(routes(s, p));
    CHECK(makespan(s, CostModel::unit_swap).rational() <=
          Rational(static_cast<int>(s.ops.size())));
  }
}

TEST_CASE("sparse routing anchors") {
  Graph grid = Graph::grid(4, 4);
  CHECK(route_sparse_general(grid, identity_permutation(16)).ops.empty());

  SparseRoute trivial =
      route_sparse_sections(grid, identity_permutation(16));
  CHECK(trivial.schedule.ops.empty());
  CHECK(trivial.root == 0);

  // Adjacent movers need no compression: one swap round.
  Permutation swap8 = identity_permutation(8);
  swap8.dest[3] = 4;
  swap8.dest[4] = 3;
  Schedule s = route_sparse_general(path_graph(8), swap8);
  CHECK(routes(s, swap8));
  CHECK(makespan(s, CostModel::linear_third).rational() == Rational(1));

  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  Permutation cross{{1, 0, 3, 2}};
  CHECK_THROWS_AS(route_sparse_general(split, cross), InvalidInput);
}

TEST_CASE("sparse routing replays compression backwards") {
  Rng rng(2718);
  for (int t = 0; t < 40; ++t) {
    Graph g = Graph::grid(4, 4);
    Permutation p = random_sparse(16, 2 + static_cast<int>(rng.below(3)), rng);
    SparseRoute route = route_sparse_sections(g, p);
    CHECK(routes(route.schedule, p));
    std::size_t total = route.schedule.ops.size();
    std::size_t dilation = total - route.compression_ops - route.inner_ops;
    REQUIRE(dilation == route.compression_ops);
    for (std::size_t i = 0; i < dilation; ++i)
      CHECK(route.schedule.ops[route.compression_ops + route.inner_ops + i] ==
            route.schedule.ops[route.compression_ops - 1 - i]);
  }
}

TEST_CASE("sparse routing on assorted graphs") {
  Rng rng(5150);
  for (int t = 0; t < 60; ++t) {
    Graph g = rng.below(2) ? Graph::grid(3 + static_cast<int>(rng.below(4)),
                                         3 + static_cast<int>(rng.below(4)))
                           : random_tree(9 + static_cast<int>(rng.below(20)),
                                         rng);
    int k = 2 + static_cast<int>(rng.below(3));
    Permutation p = random_sparse(g.n(), k, rng);
    Schedule s = route_sparse_general(g, p);
    CHECK(routes(s, p));
  }
}
