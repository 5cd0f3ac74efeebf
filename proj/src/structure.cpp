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

#include "domgame/structure.hpp"

#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {
namespace {

struct Cap {
  Color color;
  const char* quantity;
  const char* relation;
  int bound;
};

int Quantity(const ResidualView& view, Vertex v, std::string_view q) {
  if (q == "white_deg") return view.white_deg[v];
  if (q == "blue_deg") return view.blue_deg[v];
  return view.residual_deg[v];
}

bool Satisfied(int observed, std::string_view relation, int bound) {
  if (relation == "<=") return observed <= bound;
  if (relation == ">=") return observed >= bound;
  return observed == bound;
}

std::vector<Cap> CapsFor(const Family& family, int boundary) {
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      if (boundary == 1) {
        return {{Color::kWhite, "white_deg", "==", 0},
                {Color::kWhite, "residual_deg", "==", 1},
                {Color::kBlue, "residual_deg", "==", 1}};
      }
      break;
    case FamilyKind::kDeg3:
      switch (boundary) {
        case 1:
          return {{Color::kWhite, "white_deg", "<=", 2}, {Color::kBlue, "white_deg", "<=", 3}};
        case 2:
          return {{Color::kWhite, "white_deg", "<=", 1}, {Color::kBlue, "white_deg", "<=", 2}};
        case 3:
          return {{Color::kWhite, "white_deg", "==", 0},
                  {Color::kWhite, "residual_deg", ">=", 3},
                  {Color::kBlue, "residual_deg", "==", 1}};
      }
      break;
    case FamilyKind::kMinDeg:
      switch (boundary) {
        case 1:
          return {{Color::kWhite, "white_deg", "<=", 3}, {Color::kBlue, "residual_deg", "<=", 4}};
        case 2:
          return {{Color::kWhite, "white_deg", "<=", 2}, {Color::kBlue, "residual_deg", "<=", 3}};
        case 3:
          return {{Color::kWhite, "white_deg", "<=", 1}, {Color::kBlue, "residual_deg", "<=", 2}};
        case 4:
          return {{Color::kWhite, "white_deg", "==", 0}, {Color::kBlue, "white_deg", "==", 1}};
      }
      break;
  }
  throw InvalidInput(family.name() + " has no structural checkpoint after phase " +
                     std::to_string(boundary));
}

std::string RuleName(const Family& family, int boundary) {
  std::string fam = family.kind == FamilyKind::kMinDeg ? "mindeg" : family.name();
  return fam + "/after-phase-" + std::to_string(boundary);
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  os << rule << ": vertex " << vertex << " (" << ToString(color) << ") has " << quantity << "="
     << observed << ", required " << relation << ' ' << bound;
  return os.str();
}

int checkpoint_count(const Family& family) { return family.phase_count() - 1; }

std::vector<Violation> structural_check(const ResidualView& view, const Family& family,
                                        int boundary) {
  const auto caps = CapsFor(family, boundary);
  const std::string rule = RuleName(family, boundary);
  std::vector<Violation> out;
  for (Vertex v = 0; v < view.order(); ++v) {
    for (const Cap& c : caps) {
      if (view.color[v] != c.color) continue;
      const int observed = Quantity(view, v, c.quantity);
      if (!Satisfied(observed, c.relation, c.bound)) {
        out.push_back({rule, v, c.color, c.quantity, observed, c.relation, c.bound});
      }
    }
  }
  return out;
}

std::vector<Violation> structural_check(const GameState& s, const Family& family, int boundary) {
  return structural_check(colors(s.graph(), s.dominated()), family, boundary);
}

std::vector<Violation> residual_invariants_check(const Graph& g, const ResidualView& view) {
  std::vector<Violation> out;
  const std::string rule = "residual-basics";
  for (Vertex v = 0; v < view.order(); ++v) {
    const Color c = view.color[v];
    auto expect = [&](const char* q, int observed, const char* rel, int bound) {
      if (!Satisfied(observed, rel, bound)) out.push_back({rule, v, c, q, observed, rel, bound});
    };
    if (c == Color::kWhite) {
      expect("residual_deg", view.residual_deg[v], "==", g.degree(v));
      expect("white_deg+blue_deg", view.white_deg[v] + view.blue_deg[v], "==", g.degree(v));
    } else if (c == Color::kBlue) {
      expect("blue_deg", view.blue_deg[v], "==", 0);
      expect("white_deg", view.white_deg[v], "==", view.residual_deg[v]);
      expect("white_deg", view.white_deg[v], ">=", 1);
    } else {
      expect("residual_deg", view.residual_deg[v], "==", 0);
    }
  }
  return out;
}

bool color_transition_allowed(Color before, Color after) {
  return static_cast<int>(after) >= static_cast<int>(before);
}

}  // namespace domgame
