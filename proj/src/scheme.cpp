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

#include "domgame/scheme.hpp"

#include <algorithm>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {

Family Family::MinDeg(int d) {
  if (d < 4 || d > kMaxParamD) {
    throw InvalidInput("MinDeg family needs 4 <= d <= " + std::to_string(kMaxParamD) + ", got " +
                       std::to_string(d));
  }
  return {FamilyKind::kMinDeg, d};
}

int Family::stage_count() const {
  switch (kind) {
    case FamilyKind::kTwoThirds:
      return 1;
    case FamilyKind::kDeg3:
      return 3;
    case FamilyKind::kMinDeg:
      return 4;
  }
  return 0;
}

int Family::phase_count() const {
  switch (kind) {
    case FamilyKind::kTwoThirds:
      return 2;
    case FamilyKind::kDeg3:
      return 4;
    case FamilyKind::kMinDeg:
      return 5;
  }
  return 0;
}

int Family::required_min_degree() const {
  switch (kind) {
    case FamilyKind::kTwoThirds:
      return 1;
    case FamilyKind::kDeg3:
      return 3;
    case FamilyKind::kMinDeg:
      return d;
  }
  return 0;
}

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::kTwoThirds:
      return "two-thirds";
    case FamilyKind::kDeg3:
      return "deg3";
    case FamilyKind::kMinDeg:
      return "mindeg(" + std::to_string(d) + ")";
  }
  return "?";
}

Family auto_family(int delta) {
  if (delta >= 4) return Family::MinDeg(std::min(delta, kMaxParamD));
  if (delta == 3) return Family::Deg3();
  return Family::TwoThirds();
}

void require_family_precondition(const Graph& g, const Family& family) {
  const int delta = min_degree(g);
  if (delta < family.required_min_degree()) {
    std::string what = family.kind == FamilyKind::kTwoThirds
                           ? "isolate-free graph required"
                           : "minimum degree >= " + std::to_string(family.required_min_degree()) +
                                 " required";
    throw PreconditionViolated(family.name() + ": " + what + " (delta=" + std::to_string(delta) +
                               ")");
  }
}

std::string Scheme::label() const {
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      return "A0." + std::to_string(stage);
    case FamilyKind::kDeg3:
      return "A1." + std::to_string(stage);
    case FamilyKind::kMinDeg:
      return "A2." + std::to_string(stage);
  }
  return "?";
}

Scheme make_scheme(const Family& family, int stage) {
  if (stage < 1 || stage > family.stage_count()) {
    throw InvalidInput(family.name() + " has no value assignment stage " + std::to_string(stage));
  }
  Scheme sc;
  sc.family = family;
  sc.stage = stage;
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      sc.white = 2;
      sc.top_class = 1;
      sc.blue[1] = 1;
      break;
    case FamilyKind::kDeg3: {
      sc.white = 34;
      sc.top_class = 3;
      // (B1, B2, B>=3) per stage.
      static constexpr std::array<std::array<Points, 3>, 3> kBlue = {{
          {16, 16, 16},
          {10, 13, 16},
          {9, 13, 0},
      }};
      const auto& row = kBlue[stage - 1];
      sc.blue[1] = row[0];
      sc.blue[2] = row[1];
      if (stage < 3) sc.blue[3] = row[2];
      break;
    }
    case FamilyKind::kMinDeg: {
      const Params p = scheme_params(family.d);
      sc.white = p.a;
      sc.top_class = 4;
      switch (stage) {
        case 1:
          sc.blue[1] = sc.blue[2] = sc.blue[3] = sc.blue[4] = p.b;
          break;
        case 2:
          sc.blue[4] = p.b;
          sc.blue[3] = p.b - p.x1;
          sc.blue[2] = p.b - 2 * p.x1;
          sc.blue[1] = p.b - 3 * p.x1;
          break;
        case 3:
          sc.blue[3] = p.b - p.x1;
          sc.blue[2] = p.b - p.x1 - p.x2;
          sc.blue[1] = p.b - p.x1 - 2 * p.x2;
          break;
        case 4:
          sc.blue[2] = p.b - p.x1 - p.x2;
          sc.blue[1] = p.b - p.x1 - p.x2 - p.x3;
          break;
      }
      break;
    }
  }
  return sc;
}

Points vertex_value(const Scheme& scheme, Color color, int blue_residual_degree) {
  switch (color) {
    case Color::kRed:
      return 0;
    case Color::kWhite:
      return scheme.white;
    case Color::kBlue:
      break;
  }
  if (blue_residual_degree < 1) {
    throw InvalidInput("a blue vertex has residual degree >= 1, got " +
                       std::to_string(blue_residual_degree));
  }
  const int cls = std::min(blue_residual_degree, scheme.top_class);
  const auto& v = scheme.blue[cls];
  if (!v) {
    throw StageInapplicable(scheme.label() + " assigns no value to a blue vertex of degree " +
                            std::to_string(blue_residual_degree));
  }
  return *v;
}

bool scheme_applicable(const Scheme& scheme, const ResidualView& view) {
  for (Vertex v = 0; v < view.order(); ++v) {
    if (view.color[v] != Color::kBlue) continue;
    const int cls = std::min(view.residual_deg[v], scheme.top_class);
    if (cls < 1 || !scheme.blue[cls]) return false;
  }
  return true;
}

Points potential(const ResidualView& view, const Scheme& scheme) {
  Points total = 0;
  for (Vertex v = 0; v < view.order(); ++v) {
    total += vertex_value(scheme, view.color[v], view.residual_deg[v]);
  }
  return total;
}

Points potential(const GameState& s, const Scheme& scheme) {
  return potential(colors(s.graph(), s.dominated()), scheme);
}

GainEvaluator::GainEvaluator(const GameState& s) : GainEvaluator(s.graph(), s.dominated()) {}

GainEvaluator::GainEvaluator(const Graph& g, const VertexSet& dominated)
    : graph_(&g), dominated_(dominated), view_(colors(g, dominated)), legal_(g.order()) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (view_.color[v] != Color::kRed) legal_.insert(v);
}

Points GainEvaluator::Gain(const Scheme& scheme, Vertex v) const {
  if (v < 0 || v >= graph_->order() || !legal_.contains(v)) {
    throw IllegalMove("vertex " + std::to_string(v) + " dominates no new vertex");
  }
  const Graph& g = *graph_;
  const VertexSet fresh = g.closed_neighbors(v) - dominated_;
  const VertexSet after = dominated_ | fresh;
  VertexSet affected = closed_neighborhood(g, fresh);

  Points total = 0;
  affected.for_each([&](Vertex u) {
    if (!after.contains(u)) return;  // still white, value unchanged
    const Points before = vertex_value(scheme, view_.color[u], view_.residual_deg[u]);
    const int white_left = g.neighbors(u).count_minus(after);
    const Points now = white_left > 0 ? vertex_value(scheme, Color::kBlue, white_left) : 0;
    total += before - now;
  });
  return total;
}

std::pair<Vertex, Points> GainEvaluator::Max(const Scheme& scheme) const {
  if (legal_.empty()) throw GameOver("no legal move: the game is over");
  std::pair<Vertex, Points> best{-1, 0};
  legal_.for_each([&](Vertex v) {
    const Points x = Gain(scheme, v);
    if (best.first < 0 || x > best.second) best = {v, x};
  });
  return best;
}

std::pair<Vertex, Points> GainEvaluator::Min(const Scheme& scheme) const {
  if (legal_.empty()) throw GameOver("no legal move: the game is over");
  std::pair<Vertex, Points> best{-1, 0};
  legal_.for_each([&](Vertex v) {
    const Points x = Gain(scheme, v);
    if (best.first < 0 || x < best.second) best = {v, x};
  });
  return best;
}

Points gain(const GameState& s, const Scheme& scheme, Vertex v) {
  return GainEvaluator(s).Gain(scheme, v);
}

std::pair<Vertex, Points> max_gain(const GameState& s, const Scheme& scheme) {
  return GainEvaluator(s).Max(scheme);
}

Points switch_drop(const ResidualView& view, const Scheme& from, const Scheme& to) {
  if (!(from.family == to.family)) throw InvalidInput("switch between different families");
  if (to.stage <= from.stage) {
    throw InvalidInput("switch must move to a later stage (" + from.label() + " -> " + to.label() +
                       ")");
  }
  return potential(view, from) - potential(view, to);
}

Points switch_drop(const GameState& s, const Scheme& from, const Scheme& to) {
  return switch_drop(colors(s.graph(), s.dominated()), from, to);
}

}  // namespace domgame
