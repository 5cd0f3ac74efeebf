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

#ifndef DOMGAME_STRUCTURE_HPP_
#define DOMGAME_STRUCTURE_HPP_

#include <string>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/scheme.hpp"

namespace domgame {

// One failed degree cap on the residual graph.
struct Violation {
  std::string rule;      // which checkpoint, e.g. "deg3/after-phase-2"
  Vertex vertex = -1;
  Color color = Color::kWhite;
  std::string quantity;  // "white_deg", "residual_deg", "blue_deg", ...
  int observed = 0;
  std::string relation;  // "<=", ">=" or "=="
  int bound = 0;

  std::string describe() const;
};

// The degree caps that hold once phase `boundary` has ended:
//   two-thirds: 1 (every component is a white-blue pair)
//   deg3:       1, 2, 3 (3: stars with a white center and >= 3 blue leaves)
//   mindeg:     1, 2, 3, 4 (4: whites see only blues, blues see one white)
// The caps persist for the rest of the game. Throws InvalidInput for a
// boundary the family does not have.
std::vector<Violation> structural_check(const ResidualView& view, const Family& family,
                                        int boundary);
std::vector<Violation> structural_check(const GameState& s, const Family& family, int boundary);

// Number of phase boundaries that carry a structural checkpoint.
int checkpoint_count(const Family& family);

// Residual-degree facts that hold in every position: a white vertex keeps
// its original degree with d^W + d^B = d, and a blue vertex has only white
// residual neighbors, at least one.
std::vector<Violation> residual_invariants_check(const Graph& g, const ResidualView& view);

// Colors move only W->B, W->R or B->R.
bool color_transition_allowed(Color before, Color after);

}  // namespace domgame

#endif  // DOMGAME_STRUCTURE_HPP_
