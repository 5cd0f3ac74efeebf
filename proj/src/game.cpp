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

#include "domgame/game.hpp"

#include <string>

#include "domgame/errors.hpp"

namespace domgame {

std::string_view ToString(Player p) {
  return p == Player::kDominator ? "Dominator" : "Staller";
}

std::string_view ToString(Color c) {
  switch (c) {
    case Color::kWhite:
      return "W";
    case Color::kBlue:
      return "B";
    case Color::kRed:
      return "R";
  }
  return "?";
}

VertexSet ResidualView::with_color(Color c) const {
  VertexSet s(order());
  for (Vertex v = 0; v < order(); ++v)
    if (color[v] == c) s.insert(v);
  return s;
}

int ResidualView::count(Color c) const {
  int k = 0;
  for (Color x : color) k += (x == c);
  return k;
}

ResidualView colors(const Graph& g, const VertexSet& dominated) {
  const int n = g.order();
  ResidualView view;
  view.color.resize(n);
  view.white_deg.assign(n, 0);
  view.blue_deg.assign(n, 0);
  view.residual_deg.assign(n, 0);

  for (Vertex v = 0; v < n; ++v) {
    if (!dominated.contains(v)) {
      view.color[v] = Color::kWhite;
    } else if (!g.closed_neighbors(v).is_subset_of(dominated)) {
      view.color[v] = Color::kBlue;
    } else {
      view.color[v] = Color::kRed;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (view.color[v] == Color::kRed) continue;
    g.neighbors(v).for_each([&](Vertex u) {
      if (!residual_edge(g, view, v, u)) return;
      ++view.residual_deg[v];
      if (view.color[u] == Color::kWhite) ++view.white_deg[v];
      if (view.color[u] == Color::kBlue) ++view.blue_deg[v];
    });
  }
  return view;
}

bool residual_edge(const Graph& g, const ResidualView& view, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) return false;
  if (view.color[u] == Color::kRed || view.color[v] == Color::kRed) return false;
  return !(view.color[u] == Color::kBlue && view.color[v] == Color::kBlue);
}

GameState::GameState(std::shared_ptr<const Graph> graph, Player first)
    : graph_(std::move(graph)), dominated_(graph_->order()), first_(first) {}

bool GameState::is_legal(Vertex v) const {
  return v >= 0 && v < graph_->order() && !graph_->closed_neighbors(v).is_subset_of(dominated_);
}

void GameState::play(Vertex v) {
  if (v < 0 || v >= graph_->order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
  if (!is_legal(v)) {
    throw IllegalMove("vertex " + std::to_string(v) + " dominates no new vertex");
  }
  dominated_ |= graph_->closed_neighbors(v);
  moves_.push_back(v);
}

VertexSet legal_moves(const GameState& s) {
  const Graph& g = s.graph();
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.closed_neighbors(v).is_subset_of(s.dominated())) out.insert(v);
  return out;
}

GameState apply_move(const GameState& s, Vertex v) {
  GameState next = s;
  next.play(v);
  return next;
}

bool is_over(const GameState& s) { return s.dominated().size() == s.graph().order(); }

}  // namespace domgame
