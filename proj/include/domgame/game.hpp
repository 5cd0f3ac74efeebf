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

#ifndef DOMGAME_GAME_HPP_
#define DOMGAME_GAME_HPP_

#include <memory>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"
#include "domgame/vertex_set.hpp"

namespace domgame {

enum class Player { kDominator, kStaller };

inline Player Other(Player p) {
  return p == Player::kDominator ? Player::kStaller : Player::kDominator;
}
std::string_view ToString(Player p);

// White: not yet dominated. Blue: dominated, but some closed neighbor is
// not. Red: the whole closed neighborhood is dominated.
enum class Color : unsigned char { kWhite, kBlue, kRed };

std::string_view ToString(Color c);

// Coloring and residual-graph degrees derived from (graph, dominated).
//
// The residual graph drops red vertices and blue-blue edges. white_deg and
// blue_deg count white/blue neighbors inside the residual graph, and
// residual_deg is the residual degree, all computed from the definitions.
struct ResidualView {
  std::vector<Color> color;
  std::vector<int> white_deg;
  std::vector<int> blue_deg;
  std::vector<int> residual_deg;

  int order() const { return static_cast<int>(color.size()); }
  VertexSet with_color(Color c) const;
  int count(Color c) const;
};

ResidualView colors(const Graph& g, const VertexSet& dominated);

// True when {u, v} is an edge of the residual graph described by `view`.
bool residual_edge(const Graph& g, const ResidualView& view, Vertex u, Vertex v);

// Value type for one position of the domination game. The graph is shared
// and immutable, so copies are cheap apart from the move list.
class GameState {
 public:
  GameState(std::shared_ptr<const Graph> graph, Player first);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }

  const VertexSet& dominated() const { return dominated_; }
  const std::vector<Vertex>& moves() const { return moves_; }
  // Number of moves played so far; the next turn is turn()+1 in 1-based
  // trace numbering.
  int turn() const { return static_cast<int>(moves_.size()); }
  Player first_player() const { return first_; }
  Player to_move() const { return turn() % 2 == 0 ? first_ : Other(first_); }

  bool is_legal(Vertex v) const;

  // Plays v in place. Throws IllegalMove when N[v] is already dominated and
  // InvalidInput when v is out of range.
  void play(Vertex v);

 private:
  std::shared_ptr<const Graph> graph_;
  VertexSet dominated_;
  std::vector<Vertex> moves_;
  Player first_;
};

// Vertices whose closed neighborhood still contains an undominated vertex.
VertexSet legal_moves(const GameState& s);

GameState apply_move(const GameState& s, Vertex v);

bool is_over(const GameState& s);

}  // namespace domgame

#endif  // DOMGAME_GAME_HPP_
