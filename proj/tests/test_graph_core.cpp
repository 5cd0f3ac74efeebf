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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "domgame/errors.hpp"
#include "domgame/generators.hpp"
#include "domgame/graph.hpp"
#include "domgame/graph_io.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

std::vector<Vertex> Members(const VertexSet& s) { return s.to_vector(); }

}  // namespace

TEST_CASE("from_edge_list builds the given edges") {
  const Graph p2 = Graph::FromEdgeList(2, {{0, 1}});
  CHECK(p2.order() == 2);
  CHECK(p2.size() == 1);
  CHECK(p2.degree(0) == 1);
  CHECK(p2.degree(1) == 1);

  const Graph c4 = Graph::FromEdgeList(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(min_degree(c4) == 2);
  CHECK(c4.size() == 4);
}

TEST_CASE("from_edge_list rejects malformed input") {
  CHECK_THROWS_AS(Graph::FromEdgeList(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph::FromEdgeList(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(Graph::FromEdgeList(3, {{-1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Graph::FromEdgeList(0, {}), InvalidInput);
}

TEST_CASE("duplicate edges collapse in either orientation") {
  const Graph g = Graph::FromEdgeList(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("closed neighborhoods") {
  const Graph c4 = cycle_graph(4);
  CHECK(Members(closed_neighborhood(c4, 0)) == std::vector<Vertex>{0, 1, 3});
  CHECK(Members(closed_neighborhood(complete_graph(5), 2)) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(Members(closed_neighborhood(path_graph(2), 1)) == std::vector<Vertex>{0, 1});
  CHECK_THROWS_AS(closed_neighborhood(c4, 4), InvalidInput);
  CHECK_THROWS_AS(closed_neighborhood(c4, -1), InvalidInput);
}

TEST_CASE("min_degree") {
  CHECK(min_degree(petersen_graph()) == 3);
  CHECK(min_degree(complete_graph(5)) == 4);
  CHECK(min_degree(star_graph(3)) == 1);
  CHECK(min_degree(Graph::FromEdgeList(3, {{0, 1}})) == 0);
  CHECK(has_isolated_vertex(Graph::FromEdgeList(3, {{0, 1}})));
}

TEST_CASE("named graphs have the expected shape") {
  const Graph pet = petersen_graph();
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  CHECK(max_degree(pet) == 3);
  const Graph q3 = hypercube_graph(3);
  CHECK(q3.size() == 12);
  CHECK(min_degree(q3) == 3);
  CHECK(complete_bipartite(3, 3).size() == 9);
  CHECK(complete_multipartite({2, 2, 2}).size() == 12);
  CHECK(is_connected(pet));
  CHECK(components(Graph::FromEdgeList(4, {{0, 1}, {2, 3}})).size() == 2);
}

TEST_CASE("|N[v]| = d(v) + 1 and edge extraction round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = gen_gnp(n, 0.3, rng());
    for (Vertex v = 0; v < n; ++v) {
      CHECK(closed_neighborhood(g, v).size() == g.degree(v) + 1);
    }
    const auto edges = g.edges();
    CHECK(Graph::FromEdgeList(n, edges) == g);
    CHECK(static_cast<int>(edges.size()) == g.size());
  }
}

TEST_CASE("vertex sets") {
  VertexSet a(70, {0, 5, 64, 69});
  VertexSet b(70, {5, 6, 69});
  CHECK((a | b).size() == 5);
  CHECK((a & b).to_vector() == std::vector<Vertex>{5, 69});
  CHECK((a - b).to_vector() == std::vector<Vertex>{0, 64});
  CHECK(a.complement().size() == 66);
  CHECK(VertexSet::Full(70).size() == 70);
  CHECK(VertexSet::Full(70).complement().empty());
  std::vector<Vertex> seen;
  a.for_each([&](Vertex v) { seen.push_back(v); });
  CHECK(seen == std::vector<Vertex>{0, 5, 64, 69});
}

TEST_CASE("graph6 decodes the reference examples") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == complete_graph(4));
  const Graph p2 = parse_graph6("A_");
  CHECK(p2.order() == 2);
  CHECK(p2.size() == 1);
  CHECK(parse_graph6(">>graph6<<C~\n") == k4);
}

TEST_CASE("graph6 rejects malformed text") {
  CHECK_THROWS_AS(parse_graph6(""), InvalidInput);
  CHECK_THROWS_AS(parse_graph6("C"), InvalidInput);       // truncated payload
  CHECK_THROWS_AS(parse_graph6("C~~"), InvalidInput);     // trailing bytes
  CHECK_THROWS_AS(parse_graph6("C\x7f"), InvalidInput);   // byte out of range
  CHECK_THROWS_AS(parse_graph6("A`"), InvalidInput);      // nonzero padding
  CHECK_THROWS_AS(parse_graph6("~"), InvalidInput);       // truncated size field
}

TEST_CASE("graph6 agrees with an independent hand decoder") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    const oracle::Adj a = oracle::RandomGnp(n, 0.4, rng);
    const Graph g = oracle::ToGraph(a);
    const std::string text = encode_graph6(g);
    const oracle::Adj back = oracle::DecodeGraph6(text);
    CHECK(back.m == a.m);
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 round-trips every graph on up to 5 vertices and a sample to 8") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<Edge> edges;
      int k = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
          if (mask >> k & 1) edges.push_back({u, v});
      const Graph g = Graph::FromEdgeList(n, edges);
      REQUIRE(parse_graph6(encode_graph6(g)) == g);
    }
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = gen_gnp(6 + static_cast<int>(rng() % 3), 0.5, rng());
    REQUIRE(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 handles the long size form") {
  const Graph g = path_graph(100);
  const std::string text = encode_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("edge-list text") {
  const Graph g = parse_edge_list("# a square\n4 4\n0 1\n1 2\n\n2 3\n3 0\n");
  CHECK(g == cycle_graph(4));
  CHECK(parse_edge_list(format_edge_list(petersen_graph())) == petersen_graph());
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list(""), InvalidInput);
}

TEST_CASE("graph files and corpus directories") {
  const auto dir = std::filesystem::temp_directory_path() / "domgame_io_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.g6") << "C~\nA_\n";
  std::ofstream(dir / "a.txt") << "3 2\n0 1\n1 2\n";
  std::ofstream(dir / "ignored.csv") << "x";
  const auto graphs = load_corpus_dir(dir);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0].id == "a");
  CHECK(graphs[0].graph == path_graph(3));
  CHECK(graphs[1].id == "b:1");
  CHECK(graphs[2].id == "b:2");
  std::filesystem::remove_all(dir);
}
