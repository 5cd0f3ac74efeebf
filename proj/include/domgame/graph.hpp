// Copyright 2026 The domgame Authors.
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

#ifndef DOMGAME_GRAPH_HPP_
#define DOMGAME_GRAPH_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is stored as one bitset row per vertex, plus the closed
// neighborhood rows N[v] = N(v) + v, which is what the game engine unions
// on every move. Safe to share across threads once built.
class Graph {
 public:
  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) are collapsed. Throws InvalidInput on n < 1, a self-loop,
  // or an endpoint outside 0..n-1.
  static Graph FromEdgeList(int n, std::span<const Edge> edges);
  static Graph FromEdgeList(int n, std::initializer_list<Edge> edges) {
    return FromEdgeList(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return open_[v]; }
  const VertexSet& closed_neighbors(Vertex v) const { return closed_[v]; }
  int degree(Vertex v) const { return degree_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return open_[u].contains(v); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Same graph with vertex v renamed to perm[v].
  Graph Relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.open_ == b.open_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> open_;
  std::vector<VertexSet> closed_;
  std::vector<int> degree_;
};

// N[v]. Throws InvalidInput for a vertex outside the graph.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

// N[S], the set of vertices dominated by S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// delta(G); 0 when an isolated vertex exists.
int min_degree(const Graph& g);

int max_degree(const Graph& g);

bool has_isolated_vertex(const Graph& g);

// Connected components, each sorted ascending, listed by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace domgame

#endif  // DOMGAME_GRAPH_HPP_
