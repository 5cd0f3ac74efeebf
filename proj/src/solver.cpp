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

#include "domgame/solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "domgame/errors.hpp"

namespace domgame {
namespace {

constexpr int kFlatMaxOrder = 24;

void CheckCap(const Graph& g, const SolverConfig& config) {
  const int cap = std::min(config.cap, kSolverHardMaxOrder);
  if (g.order() > cap) {
    throw CapExceeded("exact solver cap is " + std::to_string(cap) + " vertices, graph has " +
                      std::to_string(g.order()) + "; use the greedy strategy search instead");
  }
}

std::vector<std::uint64_t> ClosedMasks(const Graph& g) {
  std::vector<std::uint64_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = ToMask(g.closed_neighbors(v));
  return out;
}

std::uint64_t FullMask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

std::uint64_t ToMask(const VertexSet& s) {
  if (s.universe() > 64) throw InvalidInput("vertex set too large for a 64-bit mask");
  return s.words().empty() ? 0 : s.words()[0];
}

GameSolver::GameSolver(const Graph& g, SolverConfig config)
    : n_((CheckCap(g, config), g.order())),
      full_(FullMask(g.order())),
      closed_(ClosedMasks(g)),
      config_(config) {
  flat_ = n_ <= kFlatMaxOrder;
  if (flat_) table_.assign(std::size_t{2} << n_, 0);
}

int GameSolver::Lookup(std::uint64_t dominated, bool staller) const {
  if (flat_) return static_cast<int>(table_[(dominated << 1) | staller]) - 1;
  auto it = map_.find((dominated << 1) | staller);
  return it == map_.end() ? -1 : static_cast<int>(it->second) - 1;
}

void GameSolver::Store(std::uint64_t dominated, bool staller, int value) {
  ++entries_;
  if (flat_) {
    table_[(dominated << 1) | staller] = static_cast<std::uint8_t>(value + 1);
    return;
  }
  if (entries_ > config_.max_entries) {
    throw CapExceeded("exact solver memo exceeded " + std::to_string(config_.max_entries) +
                      " entries");
  }
  map_.emplace(((dominated << 1) | staller), static_cast<std::uint8_t>(value + 1));
}

int GameSolver::Solve(std::uint64_t dominated, bool staller) {
  if (dominated == full_) return 0;
  if (int cached = Lookup(dominated, staller); cached >= 0) return cached;

  // Every move dominates at least one new vertex, so the remaining length
  // lies in [1, undominated]. Hitting either end early is exact.
  const int upper = std::popcount(full_ & ~dominated);
  int best = staller ? 0 : upper + 1;
  for (int v = 0; v < n_; ++v) {
    if ((closed_[v] & ~dominated) == 0) continue;
    const int value = 1 + Solve(dominated | closed_[v], !staller);
    if (staller) {
      best = std::max(best, value);
      if (best == upper) break;
    } else {
      best = std::min(best, value);
      if (best == 1) break;
    }
  }
  Store(dominated, staller, best);
  return best;
}

int GameSolver::Value(std::uint64_t dominated, Player mover) {
  return Solve(dominated & full_, mover == Player::kStaller);
}

int GameSolver::Value(const GameState& s) { return Value(ToMask(s.dominated()), s.to_move()); }

Vertex GameSolver::BestMove(const GameState& s) {
  const std::uint64_t dom = ToMask(s.dominated());
  if (dom == full_) throw GameOver("no move in a finished game");
  const bool staller = s.to_move() == Player::kStaller;
  const int target = Solve(dom, staller);
  for (int v = 0; v < n_; ++v) {
    if ((closed_[v] & ~dom) == 0) continue;
    if (1 + Solve(dom | closed_[v], !staller) == target) return v;
  }
  throw Error("solver inconsistency: no move attains the position value");
}

int game_value(const Graph& g, Player first, const SolverConfig& config) {
  GameSolver solver(g, config);
  return solver.Value(0, first);
}

namespace {

struct DomSetSearch {
  int n;
  std::uint64_t full;
  std::vector<std::uint64_t> closed;
  int max_closed;
  int best;

  void Run(std::uint64_t dominated, int used) {
    if (dominated == full) {
      best = std::min(best, used);
      return;
    }
    const int missing = std::popcount(full & ~dominated);
    const int need = (missing + max_closed - 1) / max_closed;
    if (used + need >= best) return;
    const int u = std::countr_zero(full & ~dominated);
    // Some member of N[u] must be chosen; try the ones covering most first.
    std::vector<std::pair<int, int>> options;
    for (std::uint64_t m = closed[u]; m != 0; m &= m - 1) {
      const int w = std::countr_zero(m);
      options.emplace_back(-std::popcount(closed[w] & ~dominated), w);
    }
    std::sort(options.begin(), options.end());
    for (auto [neg_gain, w] : options) Run(dominated | closed[w], used + 1);
  }
};

}  // namespace

int domination_number(const Graph& g, const SolverConfig& config) {
  CheckCap(g, config);
  DomSetSearch search{g.order(), FullMask(g.order()), ClosedMasks(g), 1, g.order()};
  for (auto m : search.closed) search.max_closed = std::max(search.max_closed, std::popcount(m));
  search.Run(0, 0);
  return search.best;
}

SandwichReport check_sandwich(const Graph& g, const SolverConfig& config) {
  SandwichReport r;
  r.gamma = domination_number(g, config);
  GameSolver solver(g, config);
  r.gamma_g = solver.Value(0, Player::kDominator);
  r.gamma_g_prime = solver.Value(0, Player::kStaller);
  r.holds = r.gamma <= r.gamma_g && r.gamma_g <= 2 * r.gamma - 1;
  return r;
}

}  // namespace domgame
