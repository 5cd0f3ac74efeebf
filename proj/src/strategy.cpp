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

#include "domgame/strategy.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {

std::string Policy::name() const {
  switch (kind) {
    case PolicyKind::kGreedyDominator:
      return "greedy";
    case PolicyKind::kExactOptimal:
      return "exact";
    case PolicyKind::kRandomStaller:
      return "random(" + std::to_string(seed) + ")";
    case PolicyKind::kMinGainStaller:
      return "min-gain";
    case PolicyKind::kWorstCaseStaller:
      return "worst-case";
  }
  return "?";
}

// --- GreedyAdversary -------------------------------------------------------

namespace {
constexpr std::size_t kMaxStoredFindings = 200;
}  // namespace

GreedyAdversary::GreedyAdversary(std::shared_ptr<const Graph> graph, const Family& family,
                                 Options options)
    : graph_(std::move(graph)),
      family_(family),
      options_(options),
      base_(family, Player::kDominator) {
  require_family_precondition(*graph_, family_);
}

void GreedyAdversary::Finding(const std::string& what) {
  if (findings_.size() < kMaxStoredFindings) findings_.push_back(what);
}

GreedyAdversary::Entry GreedyAdversary::Expand(const VertexSet& dominated, int phase,
                                               bool staller) {
  const Graph& g = *graph_;
  if (dominated.size() == g.order()) return {0, -1};
  Key key{dominated, phase, staller};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (++nodes_ > options_.node_budget) {
    throw BudgetExceeded("greedy-vs-adversary search exceeded " +
                         std::to_string(options_.node_budget) + " positions");
  }

  const GainEvaluator eval(g, dominated);
  auto check_structure = [&](int active_phase) {
    if (!options_.audit) return;
    for (const auto& v : residual_invariants_check(g, eval.view())) Finding(v.describe());
    const int passed = std::min(active_phase - 1, checkpoint_count(family_));
    for (int b = 1; b <= passed; ++b) {
      for (const auto& v : structural_check(eval.view(), family_, b)) Finding(v.describe());
    }
  };

  Entry entry{-1, -1};
  if (!staller) {
    PhaseMachine m = base_.AtPhase(phase);
    const SwitchRecord* sw = m.AdvanceAt(eval, 0);
    check_structure(m.phase());
    const auto [v, gained] = eval.Max(m.scheme());
    if (options_.audit) {
      if (sw != nullptr && sw->drop < 0) {
        Finding("negative switch drop " + std::to_string(sw->drop) + " entering phase " +
                std::to_string(sw->to_phase));
      }
      const PhaseSpec& ps = m.spec(m.phase());
      if (gained < ps.threshold || gained < ps.turn_floor) {
        Finding("Dominator gain " + std::to_string(gained) + " below threshold/floor in phase " +
                std::to_string(m.phase()));
      }
    }
    entry = {1 + Expand(dominated | g.closed_neighbors(v), m.phase(), true).remaining, v};
  } else {
    check_structure(phase);
    const Scheme& sc = base_.scheme_for_stage(base_.spec(phase).stage);
    const Points floor = phase == 0 ? opening_floor(family_) : base_.spec(phase).turn_floor;
    eval.legal().for_each([&](Vertex v) {
      if (options_.audit) {
        const Points gained = eval.Gain(sc, v);
        if (gained < floor) {
          Finding("Staller move " + std::to_string(v) + " gains " + std::to_string(gained) +
                  " < floor " + std::to_string(floor) + " in phase " + std::to_string(phase));
        }
      }
      const int r = 1 + Expand(dominated | g.closed_neighbors(v), phase, false).remaining;
      if (r > entry.remaining) entry = {r, v};
    });
  }
  memo_.emplace(std::move(key), entry);
  return entry;
}

int GreedyAdversary::Remaining(const VertexSet& dominated, int phase, Player mover) {
  return Expand(dominated, phase, mover == Player::kStaller).remaining;
}

Vertex GreedyAdversary::BestStallerMove(const VertexSet& dominated, int phase) {
  const Entry e = Expand(dominated, phase, true);
  if (e.best < 0) throw GameOver("no Staller move in a finished game");
  return e.best;
}

int GreedyAdversary::Length(Player first) {
  const VertexSet none(graph_->order());
  return first == Player::kDominator ? Remaining(none, 1, first) : Remaining(none, 0, first);
}

// --- Policies and game driver -----------------------------------------------

Vertex greedy_dominator_move(const GameState& s, PhaseMachine& machine) {
  if (s.to_move() != Player::kDominator) throw InvalidInput("greedy move requested for Staller");
  const GainEvaluator eval(s);
  machine.Advance(s, eval);
  return eval.Max(machine.scheme()).first;
}

Vertex staller_move(const GameState& s, const Policy& policy, const StallerContext& ctx) {
  if (is_over(s)) throw GameOver("no Staller move in a finished game");
  switch (policy.kind) {
    case PolicyKind::kRandomStaller: {
      if (ctx.rng == nullptr) throw InvalidInput("random Staller needs a generator");
      const auto legal = legal_moves(s).to_vector();
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      return legal[pick(*ctx.rng)];
    }
    case PolicyKind::kMinGainStaller: {
      if (ctx.machine == nullptr) throw InvalidInput("min-gain Staller needs the phase machine");
      return GainEvaluator(s).Min(ctx.machine->scheme()).first;
    }
    case PolicyKind::kWorstCaseStaller: {
      if (ctx.adversary == nullptr || ctx.machine == nullptr) {
        throw InvalidInput("worst-case Staller needs the adversary search and phase machine");
      }
      return ctx.adversary->BestStallerMove(s.dominated(), ctx.machine->phase());
    }
    case PolicyKind::kExactOptimal: {
      if (ctx.solver == nullptr) throw InvalidInput("exact Staller needs the solver");
      return ctx.solver->BestMove(s);
    }
    case PolicyKind::kGreedyDominator:
      break;
  }
  throw InvalidInput("policy " + policy.name() + " cannot play for Staller");
}

std::vector<PhaseSpan> phase_spans(const Family& family, const std::vector<TurnRecord>& turns) {
  (void)family;
  std::vector<PhaseSpan> spans;
  int current = -1;
  int last_end = 0;
  for (const TurnRecord& r : turns) {
    if (r.phase != current) {
      if (current >= 0) {
        spans.back().end = last_end;
      }
      for (int j = std::max(current + 1, 1); j < r.phase; ++j) {
        spans.push_back({j, last_end, last_end, true});
      }
      spans.push_back({r.phase, r.index, r.index, false});
      current = r.phase;
    }
    last_end = r.index;
  }
  if (!spans.empty()) spans.back().end = last_end;
  return spans;
}

Trace play_game(std::shared_ptr<const Graph> g, const Family& family, const Policy& dominator,
                const Policy& staller, Player first, const PlayOptions& options) {
  require_family_precondition(*g, family);
  if (dominator.kind != PolicyKind::kGreedyDominator &&
      dominator.kind != PolicyKind::kExactOptimal) {
    throw InvalidInput("policy " + dominator.name() + " cannot play for Dominator");
  }

  GameState s(g, first);
  PhaseMachine machine(family, first);
  std::mt19937_64 rng(staller.seed);
  std::optional<GreedyAdversary> adversary;
  std::optional<GameSolver> solver;
  if (staller.kind == PolicyKind::kWorstCaseStaller) {
    adversary.emplace(g, family, GreedyAdversary::Options{options.node_budget, false});
  }
  if (dominator.kind == PolicyKind::kExactOptimal || staller.kind == PolicyKind::kExactOptimal) {
    solver.emplace(*g, SolverConfig{options.solver_cap});
  }

  Trace t;
  t.graph_id = options.graph_id;
  t.family = family;
  t.first = first;
  t.dominator_policy = dominator.name();
  t.staller_policy = staller.name();
  t.initial_potential = white_value(family) * g->order();

  while (!is_over(s)) {
    const Player mover = s.to_move();
    const GainEvaluator eval(s);
    Vertex v = -1;
    if (mover == Player::kDominator) {
      machine.Advance(s, eval);
      v = dominator.kind == PolicyKind::kGreedyDominator ? eval.Max(machine.scheme()).first
                                                         : solver->BestMove(s);
    } else {
      StallerContext ctx{&machine, &rng, adversary ? &*adversary : nullptr,
                         solver ? &*solver : nullptr};
      v = staller_move(s, staller, ctx);
    }
    const Points gained = eval.Gain(machine.scheme(), v);
    s.play(v);
    machine.RecordGain(gained);
    TurnRecord r;
    r.index = s.turn();
    r.player = mover;
    r.vertex = v;
    r.phase = machine.phase();
    r.stage = machine.stage();
    r.gain = gained;
    r.potential_after = potential(s, machine.scheme());
    t.turns.push_back(r);
  }
  t.switches = machine.switches();
  t.phases = phase_spans(family, t.turns);
  return t;
}

int worst_case_length_vs_greedy(std::shared_ptr<const Graph> g, const Family& family, Player first,
                                std::size_t node_budget) {
  GreedyAdversary search(std::move(g), family, GreedyAdversary::Options{node_budget, false});
  return search.Length(first);
}

// --- Trace audit -------------------------------------------------------------

namespace {

// Largest gain under `sc` by recomputing the residual view after each
// candidate move.
Points BruteMaxGain(const Graph& g, const VertexSet& dominated, const ResidualView& view,
                    const Scheme& sc) {
  const Points before = potential(view, sc);
  Points best = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (view.color[v] == Color::kRed) continue;
    const Points after = potential(colors(g, dominated | g.closed_neighbors(v)), sc);
    best = std::max(best, before - after);
  }
  return best;
}

}  // namespace

AuditReport audit_trace(const Graph& g, const Trace& trace) {
  AuditReport rep;
  auto fail = [&](int turn, const std::string& what) {
    std::ostringstream os;
    os << "turn " << turn << ": " << what;
    rep.findings.push_back(os.str());
  };

  const Family& family = trace.family;
  const auto table = phase_table(family);
  std::vector<Scheme> schemes;
  for (int st = 1; st <= family.stage_count(); ++st) schemes.push_back(make_scheme(family, st));
  const int last_phase = static_cast<int>(table.size());
  auto spec = [&](int phase) -> const PhaseSpec& { return table[phase == 0 ? 0 : phase - 1]; };
  const bool greedy = trace.dominator_policy == Policy::GreedyDominator().name();

  if (trace.initial_potential != schemes[0].white * g.order()) {
    fail(0, "initial potential " + std::to_string(trace.initial_potential) + " != " +
                std::to_string(schemes[0].white * g.order()));
  }

  VertexSet dominated(g.order());
  int prev_phase = trace.first == Player::kDominator ? 1 : 0;
  Points ledger = trace.initial_potential;
  std::vector<Points> phase_sum(last_phase + 1, 0);
  std::vector<int> phase_count(last_phase + 1, 0);
  std::size_t next_switch = 0;

  for (const TurnRecord& r : trace.turns) {
    const ResidualView view = colors(g, dominated);
    const Player expected =
        (r.index - 1) % 2 == 0 ? trace.first : Other(trace.first);
    if (r.player != expected) fail(r.index, "wrong player recorded");
    if (r.phase < 0 || r.phase > last_phase) {
      fail(r.index, "phase " + std::to_string(r.phase) + " out of range");
      return rep;
    }
    if (r.phase == 0 && !(trace.first == Player::kStaller && r.index == 1)) {
      fail(r.index, "phase 0 outside the Staller opening");
    }
    if (r.stage != spec(r.phase).stage) fail(r.index, "stage does not match phase");
    if (r.vertex < 0 || r.vertex >= g.order() || view.color[r.vertex] == Color::kRed) {
      fail(r.index, "illegal move " + std::to_string(r.vertex));
      return rep;
    }

    for (const auto& v : residual_invariants_check(g, view)) fail(r.index, v.describe());
    const int passed = std::min(r.phase - 1, checkpoint_count(family));
    for (int b = 1; b <= passed; ++b) {
      for (const auto& v : structural_check(view, family, b)) fail(r.index, v.describe());
    }

    // Phase rule: changes only before Dominator turns, never backwards,
    // each abandoned or skipped phase's condition fails, the new one holds.
    auto condition = [&](int phase) -> std::optional<bool> {
      const Scheme& sc = schemes[spec(phase).stage - 1];
      if (!scheme_applicable(sc, view)) return std::nullopt;
      return BruteMaxGain(g, dominated, view, sc) >= spec(phase).threshold;
    };
    if (r.player == Player::kStaller) {
      if (r.phase != prev_phase) fail(r.index, "phase changed before a Staller turn");
    } else {
      if (r.phase < prev_phase) fail(r.index, "phase moved backwards");
      if (r.phase == prev_phase) {
        if (condition(r.phase) != std::optional<bool>(true)) {
          fail(r.index, "phase " + std::to_string(r.phase) + " continued without its condition");
        }
      } else {
        for (int j = std::max(prev_phase, 1); j < r.phase; ++j) {
          if (condition(j) != std::optional<bool>(false)) {
            fail(r.index, "phase " + std::to_string(j) + " left or skipped while its condition holds");
          }
        }
        if (condition(r.phase) != std::optional<bool>(true)) {
          fail(r.index, "entered phase " + std::to_string(r.phase) + " without its condition");
        }
      }
    }

    const Scheme& prev_scheme = schemes[spec(prev_phase).stage - 1];
    const Scheme& sc = schemes[r.stage - 1];
    if (prev_scheme.stage != sc.stage) {
      if (next_switch >= trace.switches.size() ||
          trace.switches[next_switch].before_turn != r.index) {
        fail(r.index, "assignment changed without a switch record");
      } else {
        const SwitchRecord& sw = trace.switches[next_switch++];
        if (!scheme_applicable(sc, view)) {
          fail(r.index, "switched to an inapplicable assignment " + sc.label());
        } else {
          const Points drop = potential(view, prev_scheme) - potential(view, sc);
          if (sw.drop != drop) fail(r.index, "recorded switch drop differs from recomputation");
          if (drop < 0) fail(r.index, "switch drop " + std::to_string(drop) + " is negative");
          ledger -= drop;
        }
      }
    }

    const VertexSet after = dominated | g.closed_neighbors(r.vertex);
    const ResidualView view_after = colors(g, after);
    Points gained = 0;
    Points p_after = 0;
    try {
      gained = potential(view, sc) - potential(view_after, sc);
      p_after = potential(view_after, sc);
    } catch (const StageInapplicable& e) {
      fail(r.index, e.what());
      return rep;
    }
    if (gained != r.gain) {
      fail(r.index, "recorded gain " + std::to_string(r.gain) + " != recomputed " +
                        std::to_string(gained));
    }
    if (p_after != r.potential_after) fail(r.index, "recorded potential differs from recomputation");
    ledger -= gained;
    if (ledger != p_after) fail(r.index, "ledger does not match the running potential");

    const Points floor = r.phase == 0 ? opening_floor(family) : spec(r.phase).turn_floor;
    if (gained < floor) {
      fail(r.index, "gain " + std::to_string(gained) + " below the per-turn floor " +
                        std::to_string(floor) + " of phase " + std::to_string(r.phase));
    }
    if (r.player == Player::kDominator && greedy) {
      const Points best = BruteMaxGain(g, dominated, view, sc);
      if (gained != best) fail(r.index, "Dominator move is not a maximum-gain move");
      if (gained < spec(r.phase).threshold) {
        fail(r.index, "Dominator gain " + std::to_string(gained) + " below threshold " +
                          std::to_string(spec(r.phase).threshold));
      }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!color_transition_allowed(view.color[v], view_after.color[v])) {
        fail(r.index, "vertex " + std::to_string(v) + " changed color backwards");
      }
    }
    if (!(dominated.is_subset_of(after) && after.size() > dominated.size())) {
      fail(r.index, "dominated set did not grow");
    }

    phase_sum[r.phase] += gained;
    phase_count[r.phase] += 1;
    prev_phase = r.phase;
    dominated = after;
  }

  if (dominated.size() != g.order()) fail(trace.length(), "game not finished");
  if (next_switch != trace.switches.size()) fail(trace.length(), "unmatched switch records");
  if (ledger != 0) fail(trace.length(), "ledger does not close at zero");

  const Points avg = average_floor(family);
  for (int p = 1; p <= last_phase; ++p) {
    if (phase_count[p] > 0 && phase_sum[p] < avg * phase_count[p]) {
      fail(trace.length(), "phase " + std::to_string(p) + " average " +
                               std::to_string(phase_sum[p]) + "/" + std::to_string(phase_count[p]) +
                               " below " + std::to_string(avg));
    }
  }
  const auto spans = phase_spans(family, trace.turns);
  if (!trace.phases.empty()) {
    bool same = spans.size() == trace.phases.size();
    for (std::size_t i = 0; same && i < spans.size(); ++i) {
      same = spans[i].phase == trace.phases[i].phase && spans[i].begin == trace.phases[i].begin &&
             spans[i].end == trace.phases[i].end && spans[i].skipped == trace.phases[i].skipped;
    }
    if (!same) fail(trace.length(), "phase spans do not match the turn records");
  }
  return rep;
}

}  // namespace domgame
