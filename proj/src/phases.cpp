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

#include "domgame/phases.hpp"

#include <string>

#include "domgame/errors.hpp"

namespace domgame {

std::vector<PhaseSpec> phase_table(const Family& family) {
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      return {{1, 4, 2}, {1, 1, 3}};
    case FamilyKind::kDeg3:
      return {{1, 88, 34}, {2, 91, 31}, {3, 84, 38}, {3, 1, 61}};
    case FamilyKind::kMinDeg: {
      const Params p = scheme_params(family.d);
      const Points d = p.d;
      return {
          {1, 5 * p.a - 4 * p.b, p.a},
          {2, 4 * p.a - 3 * p.b + (4 * d - 6) * p.x1, p.a + (d - 6) * p.x1},
          {3, 3 * p.a - 2 * p.b + 2 * p.x1 + (3 * d - 2) * p.x2, p.a + (d - 4) * p.x2},
          {4, 2 * p.a + (2 * d - 2) * p.x3, p.a + (d - 2) * p.x3},
          {4, 1, p.s},
      };
    }
  }
  return {};
}

Points opening_floor(const Family& family) {
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      return 3;
    case FamilyKind::kDeg3:
      return 34 + 3 * 18;
    case FamilyKind::kMinDeg: {
      const Params p = scheme_params(family.d);
      return p.a + p.d * (p.a - p.b);
    }
  }
  return 0;
}

Points average_floor(const Family& family) {
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      return 3;
    case FamilyKind::kDeg3:
      return 61;
    case FamilyKind::kMinDeg:
      return scheme_params(family.d).s;
  }
  return 0;
}

Points white_value(const Family& family) { return make_scheme(family, 1).white; }

PhaseMachine::PhaseMachine(const Family& family, Player first)
    : family_(family), table_(phase_table(family)), phase_(first == Player::kDominator ? 1 : 0) {
  for (int st = 1; st <= family.stage_count(); ++st) schemes_.push_back(make_scheme(family, st));
}

const SwitchRecord* PhaseMachine::Advance(const GameState& s) {
  GainEvaluator eval(s);
  return Advance(s, eval);
}

const SwitchRecord* PhaseMachine::Advance(const GameState& s, const GainEvaluator& eval) {
  if (s.to_move() != Player::kDominator) {
    throw InvalidInput("phase conditions are evaluated only before a Dominator turn");
  }
  return AdvanceAt(eval, s.turn() + 1);
}

PhaseMachine PhaseMachine::AtPhase(int phase) const {
  if (phase < 0 || phase > static_cast<int>(table_.size())) {
    throw InvalidInput(family_.name() + " has no phase " + std::to_string(phase));
  }
  PhaseMachine m = *this;
  m.phase_ = phase;
  m.gains_.clear();
  m.switches_.clear();
  return m;
}

const SwitchRecord* PhaseMachine::AdvanceAt(const GainEvaluator& eval, int turn) {
  if (eval.legal().empty()) throw GameOver("phase advance on a finished game");

  auto condition_holds = [&](int phase) {
    const PhaseSpec& ps = spec(phase);
    const Scheme& sc = schemes_[ps.stage - 1];
    if (!scheme_applicable(sc, eval.view())) {
      throw StageInapplicable("phase " + std::to_string(phase) + " assignment " + sc.label() +
                              " cannot value the residual graph before turn " +
                              std::to_string(turn));
    }
    return eval.Max(sc).second >= ps.threshold;
  };

  int start = phase_ + 1;
  if (phase_ >= 1 && condition_holds(phase_)) return nullptr;
  if (phase_ == 0) start = 1;

  const int last = static_cast<int>(table_.size());
  int next = last;
  for (int i = start; i < last; ++i) {
    if (condition_holds(i)) {
      next = i;
      break;
    }
  }
  if (next == last && !scheme_applicable(schemes_[spec(last).stage - 1], eval.view())) {
    throw StageInapplicable("final assignment cannot value the residual graph before turn " +
                            std::to_string(turn));
  }

  const int from_phase = phase_;
  const int from_stage = stage();
  phase_ = next;
  if (stage() == from_stage) return nullptr;
  SwitchRecord rec;
  rec.before_turn = turn;
  rec.from_phase = from_phase;
  rec.to_phase = phase_;
  rec.from_stage = from_stage;
  rec.to_stage = stage();
  rec.drop = switch_drop(eval.view(), schemes_[from_stage - 1], scheme());
  switches_.push_back(rec);
  return &switches_.back();
}

PhaseMachine advance_phase(PhaseMachine m, const GameState& s) {
  m.Advance(s);
  return m;
}

}  // namespace domgame
