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

#ifndef DOMGAME_GENERATORS_HPP_
#define DOMGAME_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

enum class GraphModel {
  kRegularPairing,     // incremental stub pairing, restarted on dead ends
  kDegreeFloorRepair,  // sparse random graph, low-degree vertices topped up
};

// Parses "regular-pairing" or "degree-floor-repair". Throws InvalidInput.
GraphModel parse_model(const std::string& name);
std::string ToString(GraphModel m);

// Random simple graph with minimum degree >= delta; delta-regular under the
// pairing model. Reproducible for a given seed. Throws InvalidInput for
// delta >= n, delta < 0 or odd n*delta under the pairing model, and Error
// when the pairing retry budget runs out.
Graph gen_min_degree_graph(int n, int delta, GraphModel model, std::uint64_t seed,
                           int max_attempts = 10000);

// G(n, p) with a seeded generator; isolated vertices allowed.
Graph gen_gnp(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int m, int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph petersen_graph();
Graph hypercube_graph(int dim);

}  // namespace domgame

#endif  // DOMGAME_GENERATORS_HPP_
