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

// Reference implementations used only by the tests. Each is written from
// the definitions with plain containers and shares no code with the
// library, so agreement is evidence rather than tautology.

#ifndef DOMGAME_TESTS_ORACLES_HPP_
#define DOMGAME_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "domgame/graph.hpp"

namespace oracle {

struct Adj {
  int n = 0;
  std::vector<std::vector<bool>> m;

  bool edge(int u, int v) const { return m[u][v]; }
  int degree(int v) const { return static_cast<int>(std::count(m[v].begin(), m[v].end(), true)); }
  // N[v] as a bitmask; the oracles stay below 32 vertices.
  std::uint32_t closed(int v) const {
    std::uint32_t c = 1u << v;
    for (int u = 0; u < n; ++u)
      if (m[v][u]) c |= 1u << u;
    return c;
  }
};

inline Adj FromEdges(int n, const std::vector<std::pair<int, int>>& edges) {
  Adj a{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (auto [u, v] : edges) a.m[u][v] = a.m[v][u] = true;
  return a;
}

inline Adj FromGraph(const domgame::Graph& g) {
  const auto edges = g.edges();
  return FromEdges(g.order(), {edges.begin(), edges.end()});
}

inline domgame::Graph ToGraph(const Adj& a) {
  std::vector<domgame::Edge> e;
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.m[u][v]) e.push_back({u, v});
  return domgame::Graph::FromEdgeList(a.n, e);
}

// Reads graph6 for n <= 62 by following the format description literally:
// one size byte n+63, then the upper triangle column by column (x(0,1),
// x(0,2), x(1,2), x(0,3), ...), six bits per byte, most significant first.
inline Adj DecodeGraph6(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int six = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((six >> b) & 1);
  }
  Adj a{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k)) a.m[i][j] = a.m[j][i] = true;
  return a;
}

// Smallest dominating set size by trying every subset.
inline int BruteGamma(const Adj& a) {
  const std::uint32_t full = (a.n == 32) ? ~0u : ((1u << a.n) - 1);
  int best = a.n;
  for (std::uint32_t sub = 0; sub <= full; ++sub) {
    const int size = __builtin_popcount(sub);
    if (size >= best) continue;
    std::uint32_t dom = 0;
    for (int v = 0; v < a.n; ++v)
      if (sub >> v & 1) dom |= a.closed(v);
    if (dom == full) best = size;
    if (sub == full) break;
  }
  return best;
}

// Game length by exhaustive minimax, no memo, no pruning.
inline int PlainMinimax(const Adj& a, std::uint32_t dominated, bool dominator_to_move) {
  const std::uint32_t full = (1u << a.n) - 1;
  if (dominated == full) return 0;
  int best = dominator_to_move ? 1 << 30 : -1;
  for (int v = 0; v < a.n; ++v) {
    const std::uint32_t c = a.closed(v);
    if ((c & ~dominated) == 0) continue;
    const int r = 1 + PlainMinimax(a, dominated | c, !dominator_to_move);
    best = dominator_to_move ? std::min(best, r) : std::max(best, r);
  }
  return best;
}

enum class Col { W, B, R };

struct View {
  std::vector<Col> col;
  std::vector<int> res_deg;  // residual degree
  std::vector<int> white_deg;
};

// Colors and residual degrees straight from the definitions.
inline View Colors(const Adj& a, std::uint32_t dominated) {
  View v;
  v.col.resize(a.n);
  for (int x = 0; x < a.n; ++x) {
    if (!(dominated >> x & 1)) {
      v.col[x] = Col::W;
    } else if ((a.closed(x) & ~dominated) == 0) {
      v.col[x] = Col::R;
    } else {
      v.col[x] = Col::B;
    }
  }
  v.res_deg.assign(a.n, 0);
  v.white_deg.assign(a.n, 0);
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y) {
      if (!a.edge(x, y)) continue;
      if (v.col[y] == Col::W && v.col[x] != Col::R) ++v.white_deg[x];
      const bool kept = v.col[x] != Col::R && v.col[y] != Col::R &&
                        !(v.col[x] == Col::B && v.col[y] == Col::B);
      if (kept) ++v.res_deg[x];
    }
  }
  return v;
}

// Value tables typed in from the published tables. blue[k] is the value
// of a blue vertex of residual degree k (k >= 1, clamped to the last
// entry); -1 marks a class the stage does not define.
struct Table {
  long long white;
  std::vector<long long> blue;  // index 0 unused
};

inline Table TwoThirds() { return {2, {0, 1}}; }

inline Table Deg3(int stage) {
  switch (stage) {
    case 1: return {34, {0, 16, 16, 16}};
    case 2: return {34, {0, 10, 13, 16}};
    default: return {34, {0, 9, 13, -1}};
  }
}

struct P {
  long long a, b, x1, x2, x3, s;
};

// Direct power-sum evaluation of the parameter polynomials.
inline P Params(long long d) {
  const long long d2 = d * d, d3 = d2 * d, d4 = d3 * d;
  return {30 * d4 - 56 * d3 - 258 * d2 + 708 * d - 432,
          111 * d3 - 561 * d2 + 888 * d - 432,
          6 * d3 - 19 * d2 + 15 * d,
          15 * d3 - 64 * d2 + 65 * d,
          30 * d3 - 144 * d2 + 202 * d - 72,
          90 * d4 - 390 * d3 + 348 * d2 + 348 * d - 432};
}

inline Table MinDeg(int d, int stage) {
  const P p = Params(d);
  switch (stage) {
    case 1: return {p.a, {0, p.b, p.b, p.b, p.b}};
    case 2: return {p.a, {0, p.b - 3 * p.x1, p.b - 2 * p.x1, p.b - p.x1, p.b}};
    case 3: return {p.a, {0, p.b - p.x1 - 2 * p.x2, p.b - p.x1 - p.x2, p.b - p.x1, -1}};
    default: return {p.a, {0, p.b - p.x1 - p.x2 - p.x3, p.b - p.x1 - p.x2, -1, -1}};
  }
}

// Potential, or -1 when some blue class is undefined in the table.
inline long long Potential(const Adj& a, std::uint32_t dominated, const Table& t) {
  const View v = Colors(a, dominated);
  long long p = 0;
  for (int x = 0; x < a.n; ++x) {
    if (v.col[x] == Col::W) p += t.white;
    if (v.col[x] == Col::B) {
      const int k = std::min<int>(v.res_deg[x], static_cast<int>(t.blue.size()) - 1);
      if (t.blue[k] < 0) return -1;
      p += t.blue[k];
    }
  }
  return p;
}

inline long long Gain(const Adj& a, std::uint32_t dominated, int v, const Table& t) {
  return Potential(a, dominated, t) - Potential(a, dominated | a.closed(v), t);
}

inline Adj RandomGnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Adj a{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) a.m[u][v] = a.m[v][u] = true;
  return a;
}

}  // namespace oracle

#endif  // DOMGAME_TESTS_ORACLES_HPP_
