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

#include <string>
#include <vector>

namespace revroute {

// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  // Throws InvalidInput on loops, duplicate edges, or out-of-range ids.
  void add_edge(int u, int v);
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  int edge_count() const { return edges_; }
  bool connected() const;

  // Text format: first line is the vertex count, each following non-empty
  // line one edge "u v".
  static Graph from_edge_list(const std::string& text);
  static Graph grid(int rows, int cols);  // row-major ids

 private:
  int n_;
  int edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Parses either "grid:RxC" or a path to an edge-list file.
Graph load_graph_arg(const std::string& arg);

// Distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

struct CenterInfo {
  int center;
  int radius;
};

// Vertex of minimum eccentricity, smallest id on ties.  Throws
// InvalidInput when the graph is disconnected or empty.
CenterInfo graph_center(const Graph& g);

}  // namespace revroute
