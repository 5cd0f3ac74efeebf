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

#ifndef DOMGAME_SOLVER_HPP_
#define DOMGAME_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/graph.hpp"

namespace domgame {

// Hard limit of the bitmask representation used by the solver.
inline constexpr int kSolverHardMaxOrder = 64;

struct SolverConfig {
  // Graphs with more vertices are refused with CapExceeded.
  int cap = 22;
  // Entry budget for the hash-table memo used above 24 vertices.
  std::size_t max_entries = std::size_t{1} << 26;
};

// Exact minimax for the domination game. The value of a position depends
// only on (dominated set, player to move), which is the memo key. Values
// count the moves still to be played under optimal play.
class GameSolver {
 public:
  explicit GameSolver(const Graph& g, SolverConfig config = {});

  // Remaining game length from `dominated` with `mover` to play.
  int Value(std::uint64_t dominated, Player mover);
  int Value(const GameState& s);

  // Smallest-id optimal move for the player to move. Throws GameOver.
  Vertex BestMove(const GameState& s);

  std::size_t memo_entries() const { return entries_; }

 private:
  int Solve(std::uint64_t dominated, bool staller);
  int Lookup(std::uint64_t dominated, bool staller) const;
  void Store(std::uint64_t dominated, bool staller, int value);

  int n_;
  std::uint64_t full_;
  std::vector<std::uint64_t> closed_;
  SolverConfig config_;
  bool flat_;
  // flat_ memo: index (dominated << 1) | staller, stored as value + 1.
  std::vector<std::uint8_t> table_;
  std::unordered_map<std::uint64_t, std::uint8_t> map_;
  std::size_t entries_ = 0;
};

// gamma_g (first = Dominator) or gamma_g' (first = Staller).
int game_value(const Graph& g, Player first, const SolverConfig& config = {});

// gamma(G) by branch and bound over the lowest undominated vertex.
int domination_number(const Graph& g, const SolverConfig& config = {});

struct SandwichReport {
  int gamma = 0;
  int gamma_g = 0;
  int gamma_g_prime = 0;
  // gamma <= gamma_g <= 2 gamma - 1
  bool holds = false;
};

SandwichReport check_sandwich(const Graph& g, const SolverConfig& config = {});

std::uint64_t ToMask(const VertexSet& s);

}  // namespace domgame

#endif  // DOMGAME_SOLVER_HPP_
