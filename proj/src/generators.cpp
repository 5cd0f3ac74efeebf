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

#include "domgame/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "domgame/errors.hpp"

namespace domgame {

GraphModel parse_model(const std::string& name) {
  if (name == "regular-pairing" || name == "regular") return GraphModel::kRegularPairing;
  if (name == "degree-floor-repair" || name == "floor-repair") return GraphModel::kDegreeFloorRepair;
  throw InvalidInput("unknown graph model '" + name + "'");
}

std::string ToString(GraphModel m) {
  return m == GraphModel::kRegularPairing ? "regular-pairing" : "degree-floor-repair";
}

namespace {

// Incremental stub pairing: join two random free stubs whenever that keeps
// the graph simple, restarting when no such pair is left.
Graph PairingAttempts(int n, int delta, std::mt19937_64& rng, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), delta, v);
    std::set<Edge> edges;
    while (!stubs.empty()) {
      std::vector<std::pair<std::size_t, std::size_t>> candidates;
      for (std::size_t i = 0; i < stubs.size(); ++i)
        for (std::size_t j = i + 1; j < stubs.size(); ++j) {
          const auto e = std::minmax(stubs[i], stubs[j]);
          if (e.first != e.second && !edges.count(e)) candidates.push_back({i, j});
        }
      if (candidates.empty()) break;
      const auto [i, j] =
          candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      edges.insert(std::minmax(stubs[i], stubs[j]));
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
      stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (stubs.empty()) {
      const std::vector<Edge> list(edges.begin(), edges.end());
      return Graph::FromEdgeList(n, list);
    }
  }
  throw Error("pairing model found no simple " + std::to_string(delta) + "-regular graph on " +
              std::to_string(n) + " vertices in " + std::to_string(max_attempts) + " attempts");
}

Graph FloorRepair(int n, int delta, std::mt19937_64& rng) {
  // Start sparse, then join each deficient vertex to random non-neighbors.
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<int> deg(n, 0);
  auto join = [&](Vertex u, Vertex v) {
    adj[u][v] = adj[v][u] = true;
    ++deg[u];
    ++deg[v];
  };
  std::bernoulli_distribution coin(n > 1 ? std::min(1.0, delta / static_cast<double>(n - 1)) / 2
                                         : 0.0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) join(u, v);
    }
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (Vertex u : order) {
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && !adj[u][v]) candidates.push_back(v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    // Prefer partners that are themselves short of the floor.
    std::stable_partition(candidates.begin(), candidates.end(),
                          [&](Vertex v) { return deg[v] < delta; });
    for (std::size_t i = 0; deg[u] < delta && i < candidates.size(); ++i) join(u, candidates[i]);
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.push_back({u, v});
    }
  }
  return Graph::FromEdgeList(n, edges);
}

}  // namespace

Graph gen_min_degree_graph(int n, int delta, GraphModel model, std::uint64_t seed,
                           int max_attempts) {
  if (n < 1 || delta < 0 || delta >= n) {
    throw InvalidInput("need 0 <= delta < n, got n=" + std::to_string(n) +
                       " delta=" + std::to_string(delta));
  }
  std::mt19937_64 rng(seed);
  if (model == GraphModel::kRegularPairing) {
    if ((static_cast<std::int64_t>(n) * delta) % 2 != 0) {
      throw InvalidInput("regular graph needs n*delta even, got n=" + std::to_string(n) +
                         " delta=" + std::to_string(delta));
    }
    return PairingAttempts(n, delta, rng, max_attempts);
  }
  return FloorRepair(n, delta, rng);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1 || p < 0 || p > 1) throw InvalidInput("G(n,p) needs n >= 1 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::FromEdgeList(n, edges);
}

Graph complete_graph(int n) { return complete_multipartite(std::vector<int>(n, 1)); }

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::FromEdgeList(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::FromEdgeList(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::FromEdgeList(leaves + 1, edges);
}

Graph complete_bipartite(int m, int n) { return complete_multipartite({m, n}); }

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw InvalidInput("multipartite parts must be non-empty");
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  return Graph::FromEdgeList(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph::FromEdgeList(10, edges);
}

Graph hypercube_graph(int dim) {
  if (dim < 0 || dim > 20) throw InvalidInput("hypercube dimension must be in [0, 20]");
  const int n = 1 << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const Vertex u = v ^ (1 << b);
      if (v < u) edges.push_back({v, u});
    }
  }
  return Graph::FromEdgeList(n, edges);
}

}  // namespace domgame
