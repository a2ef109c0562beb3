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

#include "revroute/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "revroute/errors.hpp"

namespace revroute {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidInput("graph with negative vertex count");
  adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InvalidInput("edge endpoint out of range");
  if (u == v) throw InvalidInput("graph may not contain loops");
  if (has_edge(u, v)) throw InvalidInput("duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<int> dist = bfs_distances(*this, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

Graph Graph::from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0)
        throw InvalidInput("edge list must start with the vertex count");
      continue;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int u, v;
    std::string extra;
    if (!(fields >> u >> v) || fields >> extra)
      throw InvalidInput("edge line must read \"u v\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InvalidInput("edge list must start with the vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::grid(int rows, int cols) {
  if (rows <= 0 || cols <= 0)
    throw InvalidInput("grid dimensions must be positive");
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

Graph load_graph_arg(const std::string& arg) {
  if (arg.rfind("grid:", 0) == 0) {
    std::string dims = arg.substr(5);
    std::size_t x = dims.find('x');
    if (x == std::string::npos)
      throw InvalidInput("grid spec must look like grid:RxC");
    try {
      int rows = std::stoi(dims.substr(0, x));
      int cols = std::stoi(dims.substr(x + 1));
      return Graph::grid(rows, cols);
    } catch (const std::logic_error&) {
      throw InvalidInput("grid spec must look like grid:RxC");
    }
  }
  std::ifstream in(arg);
  if (!in) throw InvalidInput("cannot open graph file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Graph::from_edge_list(buf.str());
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.n())
    throw InvalidInput("BFS source out of range");
  std::vector<int> dist(g.n(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

CenterInfo graph_center(const Graph& g) {
  if (g.n() == 0) throw InvalidInput("empty graph has no center");
  CenterInfo best{-1, -1};
  for (int v = 0; v < g.n(); ++v) {
    int ecc = 0;
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw InvalidInput("graph center requires connectivity");
      ecc = std::max(ecc, d);
    }
    if (best.center < 0 || ecc < best.radius) best = {v, ecc};
  }
  return best;
}

}  // namespace revroute
