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

#include "domgame/graph.hpp"

#include <algorithm>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

Graph Graph::FromEdgeList(int n, std::span<const Edge> edges) {
  if (n < 1) throw InvalidInput("graph must have at least one vertex, got n=" + std::to_string(n));
  Graph g;
  g.n_ = n;
  g.open_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    g.open_[u].insert(v);
    g.open_[v].insert(u);
  }
  g.closed_ = g.open_;
  g.degree_.resize(n);
  int twice_m = 0;
  for (Vertex v = 0; v < n; ++v) {
    g.closed_[v].insert(v);
    g.degree_[v] = g.open_[v].size();
    twice_m += g.degree_[v];
  }
  g.m_ = twice_m / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    open_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

Graph Graph::Relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidInput("permutation size mismatch");
  std::vector<Edge> relabeled;
  for (auto [u, v] : edges()) relabeled.emplace_back(perm[u], perm[v]);
  return FromEdgeList(n_, relabeled);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.order()));
  }
  return g.closed_neighbors(v);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) { out |= g.closed_neighbors(v); });
  return out;
}

int min_degree(const Graph& g) {
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool has_isolated_vertex(const Graph& g) { return min_degree(g) == 0; }

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      g.neighbors(u).for_each([&](Vertex w) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

}  // namespace domgame
