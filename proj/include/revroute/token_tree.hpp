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

#include "revroute/graph.hpp"
#include "revroute/schedule.hpp"

namespace revroute {

// BFS shortest-path tree from the root (neighbors visited in id order),
// pruned to vertices whose subtree holds a token.  Every leaf therefore
// holds a token, except possibly the root itself.  token[] tracks current
// occupancy and is updated as move_up_to emits operations.
struct TokenTree {
  int root = 0;
  std::vector<char> in_tree;
  std::vector<int> parent;  // -1 for the root and for pruned-out vertices
  std::vector<int> depth;
  std::vector<std::vector<int>> children;  // ids ascending
  std::vector<char> token;

  int vertex_count() const;
  int token_count() const;
};

// Throws InvalidInput if movers is empty, has duplicates, or the graph is
// disconnected.
TokenTree token_tree(const Graph& g, int root, const std::vector<int>& movers);

// Vertices where two tokens' root paths first meet; a token lying on
// another token's root path is itself an intersection vertex.  At most
// k - 1 of them for k tokens.
std::vector<int> intersection_vertices(const TokenTree& t);

// Moves every token in the subtree of v up to v: afterwards a tokenless
// vertex has a tokenless subtree.  Emits tree reversals and matching
// rounds, updating t.token as it goes.
std::vector<Op> move_up_to(TokenTree& t, int v);

// Routes a permutation on a tree (the graph must be connected and
// acyclic) with matching rounds: repeatedly places the token destined for
// the deepest unresolved leaf and strips that leaf; the resulting swap list
// is packed into rounds greedily, preserving the order of conflicting
// swaps.
Schedule tree_route_matchings(const Graph& tree, const Permutation& perm);

struct SparseRoute {
  Schedule schedule;           // compression ++ inner ++ dilation
  std::size_t compression_ops; // prefix of schedule.ops
  std::size_t inner_ops;       // middle section
  int root;
};

// Routes a sparse permutation on a general graph: root the token tree at
// the vertex minimizing the maximum distance to the movers (tie: smallest
// id; that distance never exceeds the graph radius), compress the tokens
// to the root with move_up_to, permute them on the compacted subtree with
// matching rounds, then replay the compression operations in reverse
// order.  The identity yields an empty schedule.
SparseRoute route_sparse_sections(const Graph& g, const Permutation& perm);
Schedule route_sparse_general(const Graph& g, const Permutation& perm);

}  // namespace revroute
