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

#include <memory>
#include <random>

#include "domgame/errors.hpp"
#include "domgame/game.hpp"
#include "domgame/generators.hpp"
#include "domgame/structure.hpp"
#include "oracles.hpp"

using namespace domgame;

namespace {

std::shared_ptr<const Graph> Share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

std::uint32_t Mask(const VertexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](Vertex v) { m |= 1u << v; });
  return m;
}

Color FromOracle(oracle::Col c) {
  return c == oracle::Col::W ? Color::kWhite : c == oracle::Col::B ? Color::kBlue : Color::kRed;
}

}  // namespace

TEST_CASE("colors on a star after a leaf move") {
  const Graph star = star_graph(3);  // center 0, leaves 1..3
  const ResidualView v = colors(star, VertexSet(4, {0, 1}));
  CHECK(v.color[1] == Color::kRed);
  CHECK(v.color[0] == Color::kBlue);
  CHECK(v.white_deg[0] == 2);
  CHECK(v.residual_deg[0] == 2);
  CHECK(v.color[2] == Color::kWhite);
  CHECK(v.color[3] == Color::kWhite);
  CHECK(v.residual_deg[2] == 1);
}

TEST_CASE("colors of the empty and the full dominated set") {
  const Graph pet = petersen_graph();
  const ResidualView fresh = colors(pet, VertexSet(10));
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(fresh.color[v] == Color::kWhite);
    CHECK(fresh.white_deg[v] == 3);
  }
  const ResidualView done = colors(pet, VertexSet::Full(10));
  CHECK(done.count(Color::kRed) == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(done.residual_deg[v] == 0);
}

TEST_CASE("legal moves") {
  GameState p3(Share(path_graph(3)), Player::kDominator);
  CHECK(legal_moves(p3).to_vector() == std::vector<Vertex>{0, 1, 2});
  CHECK(legal_moves(apply_move(p3, 1)).empty());

  GameState star(Share(star_graph(3)), Player::kDominator);
  star.play(1);
  CHECK(legal_moves(star).to_vector() == std::vector<Vertex>{0, 2, 3});
}

TEST_CASE("apply_move") {
  const GameState p3(Share(path_graph(3)), Player::kDominator);
  const GameState after = apply_move(p3, 1);
  CHECK(after.dominated().size() == 3);
  CHECK(is_over(after));
  CHECK(after.moves() == std::vector<Vertex>{1});
  CHECK(after.turn() == 1);
  CHECK(p3.turn() == 0);  // the original is untouched
  CHECK_THROWS_AS(apply_move(after, 0), IllegalMove);
  CHECK_THROWS_AS(apply_move(p3, 7), InvalidInput);

  const GameState c4 = apply_move(GameState(Share(cycle_graph(4)), Player::kDominator), 0);
  CHECK(c4.dominated().to_vector() == std::vector<Vertex>{0, 1, 3});
  const ResidualView v = colors(c4.graph(), c4.dominated());
  CHECK(v.color[2] == Color::kWhite);
  CHECK(v.color[1] == Color::kBlue);
  CHECK(v.color[3] == Color::kBlue);
  CHECK(v.color[0] == Color::kRed);
}

TEST_CASE("is_over") {
  const GameState k5(Share(complete_graph(5)), Player::kDominator);
  CHECK_FALSE(is_over(k5));
  CHECK(is_over(apply_move(k5, 3)));
  CHECK(is_over(apply_move(GameState(Share(path_graph(2)), Player::kStaller), 0)));
}

TEST_CASE("player to move alternates from the first player") {
  GameState s(Share(path_graph(6)), Player::kStaller);
  CHECK(s.to_move() == Player::kStaller);
  s.play(0);
  CHECK(s.to_move() == Player::kDominator);
  s.play(5);
  CHECK(s.to_move() == Player::kStaller);
}

TEST_CASE("random play: colors match the definitions and every invariant holds") {
  std::mt19937_64 rng(2024);
  int positions = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const oracle::Adj a = oracle::RandomGnp(n, 0.1 + 0.6 * (trial % 5) / 4.0, rng);
    const auto g = Share(oracle::ToGraph(a));
    GameState s(g, trial % 2 ? Player::kDominator : Player::kStaller);
    ResidualView prev = colors(*g, s.dominated());
    while (true) {
      ++positions;
      const ResidualView view = colors(*g, s.dominated());
      const oracle::View ref = oracle::Colors(a, Mask(s.dominated()));
      VertexSet non_red(n);
      for (Vertex v = 0; v < n; ++v) {
        REQUIRE(view.color[v] == FromOracle(ref.col[v]));
        REQUIRE(view.residual_deg[v] == ref.res_deg[v]);
        REQUIRE(view.white_deg[v] == ref.white_deg[v]);
        REQUIRE(color_transition_allowed(prev.color[v], view.color[v]));
        if (view.color[v] != Color::kRed) non_red.insert(v);
      }
      CHECK(residual_invariants_check(*g, view).empty());
      CHECK(legal_moves(s) == non_red);
      CHECK(is_over(s) == (s.dominated().size() == n));
      CHECK(is_over(s) == non_red.empty());
      if (is_over(s)) break;
      const auto legal = non_red.to_vector();
      const Vertex v = legal[rng() % legal.size()];
      const VertexSet before = s.dominated();
      s.play(v);
      CHECK(before.is_subset_of(s.dominated()));
      CHECK(s.dominated().size() > before.size());
      prev = view;
    }
    VertexSet rebuilt(n);
    for (Vertex v : s.moves()) rebuilt |= closed_neighborhood(*g, v);
    CHECK(rebuilt == s.dominated());
  }
  CHECK(positions > 1000);
}

TEST_CASE("residual edges drop red endpoints and blue pairs") {
  // Path 0-1-2-3-4 after playing 1: 0,1 red; 2 blue; 3,4 white.
  const Graph p5 = path_graph(5);
  const ResidualView v = colors(p5, closed_neighborhood(p5, 1));
  CHECK_FALSE(residual_edge(p5, v, 0, 1));
  CHECK_FALSE(residual_edge(p5, v, 1, 2));
  CHECK(residual_edge(p5, v, 2, 3));
  CHECK(residual_edge(p5, v, 3, 4));
  // Two adjacent blue vertices lose their edge.
  const Graph c = cycle_graph(6);
  const ResidualView u = colors(c, VertexSet(6, {0, 1}));  // 0,1 blue, adjacent
  CHECK(u.color[0] == Color::kBlue);
  CHECK(u.color[1] == Color::kBlue);
  CHECK_FALSE(residual_edge(c, u, 0, 1));
  CHECK(u.blue_deg[0] == 0);
  CHECK(u.residual_deg[0] == 1);
}
