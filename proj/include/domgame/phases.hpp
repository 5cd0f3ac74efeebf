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

#ifndef DOMGAME_PHASES_HPP_
#define DOMGAME_PHASES_HPP_

#include <vector>

#include "domgame/scheme.hpp"

namespace domgame {

// Per-phase constants of a family. Phase i (1-based) is entry i-1.
struct PhaseSpec {
  int stage = 1;
  // Dominator must be able to gain at least this much, under `stage`, for
  // the phase to continue.
  Points threshold = 1;
  // Lower bound on the gain of any move made while the phase is active.
  Points turn_floor = 1;
};

std::vector<PhaseSpec> phase_table(const Family& family);

// Lower bound on the opening Staller move of a Staller-start game, under
// the family's first assignment.
Points opening_floor(const Family& family);

// Guaranteed average decrease per turn (3, 61 or s).
Points average_floor(const Family& family);

// Initial potential per vertex (white value).
Points white_value(const Family& family);

struct SwitchRecord {
  int before_turn = 0;  // 1-based index of the Dominator turn it precedes
  int from_phase = 0;
  int to_phase = 0;
  int from_stage = 0;
  int to_stage = 0;
  Points drop = 0;
};

// Phase automaton for the greedy Dominator. Phase 0 is the opening turn of
// a Staller-start game. Transitions happen only immediately before a
// Dominator turn: if the current phase's condition fails, the machine moves
// to the smallest later phase whose condition holds, skipping the rest.
// The machine also keeps the gain ledger.
class PhaseMachine {
 public:
  PhaseMachine(const Family& family, Player first);

  const Family& family() const { return family_; }
  int phase() const { return phase_; }
  int stage() const { return spec(phase_).stage; }
  const Scheme& scheme() const { return schemes_[stage() - 1]; }
  const Scheme& scheme_for_stage(int stage) const { return schemes_[stage - 1]; }
  const PhaseSpec& spec(int phase) const { return table_[phase == 0 ? 0 : phase - 1]; }

  // Re-evaluates the phase conditions on `s`, where Dominator is about to
  // play. Returns the switch record when the value assignment changed.
  // Throws StageInapplicable if a candidate phase's assignment cannot value
  // the position, which means the structural guarantees were broken.
  const SwitchRecord* Advance(const GameState& s);
  const SwitchRecord* Advance(const GameState& s, const GainEvaluator& eval);
  // Same, for a position known only by its evaluator; `turn` is the 1-based
  // index of the Dominator turn about to be played (0 if unknown).
  const SwitchRecord* AdvanceAt(const GainEvaluator& eval, int turn);

  // Copy positioned at `phase` with an empty ledger.
  PhaseMachine AtPhase(int phase) const;

  void RecordGain(Points g) { gains_.push_back(g); }
  const std::vector<Points>& gains() const { return gains_; }
  const std::vector<SwitchRecord>& switches() const { return switches_; }

 private:
  Family family_;
  std::vector<PhaseSpec> table_;
  std::vector<Scheme> schemes_;
  int phase_;
  std::vector<Points> gains_;
  std::vector<SwitchRecord> switches_;
};

// Functional form: returns the machine advanced for a Dominator turn on s.
PhaseMachine advance_phase(PhaseMachine m, const GameState& s);

}  // namespace domgame

#endif  // DOMGAME_PHASES_HPP_
