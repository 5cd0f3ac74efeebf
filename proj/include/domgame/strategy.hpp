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

#ifndef DOMGAME_STRATEGY_HPP_
#define DOMGAME_STRATEGY_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "domgame/game.hpp"
#include "domgame/phases.hpp"
#include "domgame/scheme.hpp"
#include "domgame/solver.hpp"
#include "domgame/structure.hpp"

namespace domgame {

enum class PolicyKind {
  kGreedyDominator,   // maximum gain under the active assignment
  kExactOptimal,      // optimal play from the exact solver
  kRandomStaller,     // uniform over legal moves, seeded
  kMinGainStaller,    // minimum gain under the active assignment
  kWorstCaseStaller,  // longest completion against the greedy Dominator
};

struct Policy {
  PolicyKind kind = PolicyKind::kGreedyDominator;
  std::uint64_t seed = 0;

  static Policy GreedyDominator() { return {PolicyKind::kGreedyDominator, 0}; }
  static Policy ExactOptimal() { return {PolicyKind::kExactOptimal, 0}; }
  static Policy RandomStaller(std::uint64_t seed) { return {PolicyKind::kRandomStaller, seed}; }
  static Policy MinGainStaller() { return {PolicyKind::kMinGainStaller, 0}; }
  static Policy WorstCaseStaller() { return {PolicyKind::kWorstCaseStaller, 0}; }

  std::string name() const;
};

struct TurnRecord {
  int index = 0;  // 1-based
  Player player = Player::kDominator;
  Vertex vertex = -1;
  int phase = 0;
  int stage = 1;
  Points gain = 0;         // under the active assignment
  Points potential_after = 0;
};

// Start and end turn of a phase. Skipped phases have begin == end == the
// last turn of the phase before them.
struct PhaseSpan {
  int phase = 0;
  int begin = 0;
  int end = 0;
  bool skipped = false;
};

struct Trace {
  std::string graph_id;
  Family family;
  Player first = Player::kDominator;
  std::string dominator_policy;
  std::string staller_policy;
  Points initial_potential = 0;
  std::vector<TurnRecord> turns;
  std::vector<SwitchRecord> switches;
  std::vector<PhaseSpan> phases;

  int length() const { return static_cast<int>(turns.size()); }
};

// Depth-first search over Staller's choices against the deterministic
// greedy Dominator. Positions are memoized on (dominated set, phase,
// player to move), which fixes the rest of the game.
//
// With auditing on, every expanded position is checked once: residual
// invariants, the structural caps of all passed phase boundaries, switch
// drops, Dominator's threshold and the per-turn gain floor of every
// available Staller move.
class GreedyAdversary {
 public:
  struct Options {
    std::size_t node_budget = 20'000'000;
    bool audit = false;
  };

  GreedyAdversary(std::shared_ptr<const Graph> graph, const Family& family, Options options);
  GreedyAdversary(std::shared_ptr<const Graph> graph, const Family& family)
      : GreedyAdversary(std::move(graph), family, Options{}) {}

  // Longest game from the start position. Throws BudgetExceeded.
  int Length(Player first);

  // Longest completion from a position with the given active phase.
  int Remaining(const VertexSet& dominated, int phase, Player mover);

  // Staller move attaining Remaining(), smallest id on ties.
  Vertex BestStallerMove(const VertexSet& dominated, int phase);

  std::size_t nodes() const { return nodes_; }
  const std::vector<std::string>& findings() const { return findings_; }

 private:
  struct Key {
    VertexSet dominated;
    int phase;
    bool staller;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.dominated.hash() ^ (static_cast<std::size_t>(k.phase) * 0x9e3779b97f4a7c15ULL) ^
             (k.staller ? 0x5bd1e995ULL : 0);
    }
  };
  struct Entry {
    int remaining;
    Vertex best;
  };

  Entry Expand(const VertexSet& dominated, int phase, bool staller);
  void Finding(const std::string& what);

  std::shared_ptr<const Graph> graph_;
  Family family_;
  Options options_;
  PhaseMachine base_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::size_t nodes_ = 0;
  std::vector<std::string> findings_;
};

// Advances the phase machine for the coming Dominator turn and returns the
// maximum-gain move under the now-active assignment. Throws GameOver, or
// InvalidInput when it is not Dominator's turn.
Vertex greedy_dominator_move(const GameState& s, PhaseMachine& machine);

// Everything a Staller policy may consult besides the position.
struct StallerContext {
  const PhaseMachine* machine = nullptr;
  std::mt19937_64* rng = nullptr;
  GreedyAdversary* adversary = nullptr;
  GameSolver* solver = nullptr;
};

Vertex staller_move(const GameState& s, const Policy& policy, const StallerContext& ctx);

struct PlayOptions {
  std::string graph_id;
  int solver_cap = 22;
  std::size_t node_budget = 20'000'000;
};

// Plays one full game. Throws PreconditionViolated when the graph does not
// meet the family's degree floor. In a Staller-start game the opening turn
// is recorded as phase 0 under the family's first assignment.
Trace play_game(std::shared_ptr<const Graph> g, const Family& family, const Policy& dominator,
                const Policy& staller, Player first, const PlayOptions& options = {});

// Maximum game length over all Staller play against the greedy Dominator.
int worst_case_length_vs_greedy(std::shared_ptr<const Graph> g, const Family& family, Player first,
                                std::size_t node_budget = 20'000'000);

// Result of replaying a trace against every per-turn and per-phase rule.
struct AuditReport {
  std::vector<std::string> findings;
  bool ok() const { return findings.empty(); }
};

// Replays `trace` on g with full residual recomputation, independent of the
// incremental gain path, and checks: recorded gains and potentials, color
// monotonicity, residual invariants, phase-rule consistency, per-turn gain
// floors, Dominator thresholds (when greedy), switch drops, structural caps
// of passed boundaries, per-phase averages and ledger conservation.
AuditReport audit_trace(const Graph& g, const Trace& trace);

// Phase spans (b_i, e_i) reconstructed from the turn records.
std::vector<PhaseSpan> phase_spans(const Family& family, const std::vector<TurnRecord>& turns);

}  // namespace domgame

#endif  // DOMGAME_STRATEGY_HPP_
