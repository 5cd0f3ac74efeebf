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

#ifndef DOMGAME_SCHEME_HPP_
#define DOMGAME_SCHEME_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "domgame/game.hpp"
#include "domgame/params.hpp"

namespace domgame {

enum class FamilyKind { kTwoThirds, kDeg3, kMinDeg };

// A strategy family: which value tables and phase conditions the greedy
// Dominator uses. MinDeg carries its degree parameter d >= 4.
struct Family {
  FamilyKind kind = FamilyKind::kTwoThirds;
  int d = 0;

  static Family TwoThirds() { return {FamilyKind::kTwoThirds, 0}; }
  static Family Deg3() { return {FamilyKind::kDeg3, 3}; }
  static Family MinDeg(int d);

  // Number of value assignments (1, 3 or 4).
  int stage_count() const;
  // Number of phases of the Dominator-start game (2, 4 or 5).
  int phase_count() const;
  // Minimum degree the family requires of the input graph.
  int required_min_degree() const;
  std::string name() const;

  friend bool operator==(const Family&, const Family&) = default;
};

// Family for a graph with minimum degree delta: MinDeg(min(delta, 64)) for
// delta >= 4, Deg3 for delta == 3, TwoThirds otherwise.
Family auto_family(int delta);

// Throws PreconditionViolated when g does not meet family's degree floor.
void require_family_precondition(const Graph& g, const Family& family);

// One value assignment: white value plus the value of a blue vertex by its
// residual degree class. Class k covers degree k, the top class covers all
// larger degrees. A missing entry means the stage omits that class.
struct Scheme {
  Family family;
  int stage = 1;
  Points white = 0;
  int top_class = 1;
  std::array<std::optional<Points>, 5> blue{};  // indices 1..top_class

  std::string label() const;  // e.g. "A1.2"
};

Scheme make_scheme(const Family& family, int stage);

// Table entry for a vertex. Red is 0 and white is constant. Throws
// StageInapplicable for a blue class the stage omits, InvalidInput for a
// blue vertex with residual degree < 1.
Points vertex_value(const Scheme& scheme, Color color, int blue_residual_degree);

// Whether every blue vertex of the view falls in a class the stage defines.
bool scheme_applicable(const Scheme& scheme, const ResidualView& view);

Points potential(const ResidualView& view, const Scheme& scheme);
Points potential(const GameState& s, const Scheme& scheme);

// Evaluates move gains from one position without re-deriving the full
// residual view per candidate. Only N[X] can change value, where X is the
// set of vertices the move newly dominates.
class GainEvaluator {
 public:
  explicit GainEvaluator(const GameState& s);
  GainEvaluator(const Graph& g, const VertexSet& dominated);

  const ResidualView& view() const { return view_; }
  const VertexSet& legal() const { return legal_; }

  // potential(s) - potential(s + v) under `scheme`. Throws IllegalMove.
  Points Gain(const Scheme& scheme, Vertex v) const;

  // Largest (smallest) gain over legal moves, smallest id on ties. Throws
  // GameOver when no legal move exists.
  std::pair<Vertex, Points> Max(const Scheme& scheme) const;
  std::pair<Vertex, Points> Min(const Scheme& scheme) const;

 private:
  const Graph* graph_;
  VertexSet dominated_;
  ResidualView view_;
  VertexSet legal_;
};

Points gain(const GameState& s, const Scheme& scheme, Vertex v);
std::pair<Vertex, Points> max_gain(const GameState& s, const Scheme& scheme);

// potential(from) - potential(to) for a later stage of the same family.
// Throws InvalidInput for a mismatched family or non-increasing stage and
// StageInapplicable when `to` cannot value the position.
Points switch_drop(const GameState& s, const Scheme& from, const Scheme& to);
Points switch_drop(const ResidualView& view, const Scheme& from, const Scheme& to);

}  // namespace domgame

#endif  // DOMGAME_SCHEME_HPP_
