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

#include "domgame/params.hpp"

#include <string>

#include "domgame/errors.hpp"

namespace domgame {
namespace {

// Horner evaluation; coefficients from the highest power down.
Points Poly(Points d, std::initializer_list<Points> coeffs) {
  Points acc = 0;
  for (Points c : coeffs) acc = acc * d + c;
  return acc;
}

}  // namespace

Params scheme_params(int d) {
  if (d < 4) throw InvalidInput("minimum-degree parameters need d >= 4, got " + std::to_string(d));
  if (d > kMaxParamD) {
    throw InvalidInput("minimum-degree parameters support d <= " + std::to_string(kMaxParamD));
  }
  Params p;
  p.d = d;
  p.a = Poly(d, {30, -56, -258, 708, -432});
  p.b = Poly(d, {111, -561, 888, -432});
  p.x1 = Poly(d, {6, -19, 15, 0});
  p.x2 = Poly(d, {15, -64, 65, 0});
  p.x3 = Poly(d, {30, -144, 202, -72});
  p.s = Poly(d, {90, -390, 348, 348, -432});
  if (!ordering_chain_holds(p)) {
    throw Error("parameter ordering fails at d=" + std::to_string(d));
  }
  return p;
}

bool ordering_chain_holds(const Params& p) {
  const Points b1 = p.b - p.x1 - p.x2 - p.x3;
  return 0 < p.x1 && p.x1 < p.x2 && p.x2 < p.x3 && p.x3 < b1 && b1 < p.b && p.b < p.a &&
         p.x3 < p.a - p.b;
}

Points staller_opening_excess(int d) { return Poly(d, {30, -227, 637, -786, 360, 0}); }

std::vector<IdentityCheck> parameter_identities(int d) {
  const Params p = scheme_params(d);
  const Points dd = d;
  const auto [_, a, b, x1, x2, x3, s] = p;
  std::vector<IdentityCheck> out;
  out.push_back({"6a-4b = 2s", 6 * a - 4 * b, 2 * s, "="});
  out.push_back({"5a-3b+(5d-12)x1 = 2s", 5 * a - 3 * b + (5 * dd - 12) * x1, 2 * s, "="});
  out.push_back(
      {"4a-2b+2x1+(4d-6)x2 = 2s", 4 * a - 2 * b + 2 * x1 + (4 * dd - 6) * x2, 2 * s, "="});
  out.push_back({"a+d(b-x1-x2-x3) = s", a + dd * (b - x1 - x2 - x3), s, "="});
  out.push_back({"3a+(3d-4)x3 >= 2s", 3 * a + (3 * dd - 4) * x3, 2 * s, ">="});
  out.push_back({"a-b = 30d^4-167d^3+303d^2-180d", a - b, Poly(d, {30, -167, 303, -180, 0}), "="});
  out.push_back({"a+d(a-b)-s = 30d^5-227d^4+637d^3-786d^2+360d", a + dd * (a - b) - s,
                 staller_opening_excess(d), "="});
  out.push_back({"b-x1-x2-2x3 = 30d^3-190d^2+404d-288", b - x1 - x2 - 2 * x3,
                 Poly(d, {30, -190, 404, -288}), "="});
  out.push_back({"a-b-x3 = 30d^4-197d^3+447d^2-382d+72", a - b - x3,
                 Poly(d, {30, -197, 447, -382, 72}), "="});
  out.push_back({"ordering 0<x1<x2<x3<b-x1-x2-x3<b<a, x3<a-b", ordering_chain_holds(p) ? 1 : 0, 1,
                 "="});
  // Each Dominator threshold is itself at least the per-turn average, so a
  // phase that ends on an unpaired Dominator turn keeps its average.
  out.push_back({"5a-4b >= s", 5 * a - 4 * b, s, ">="});
  out.push_back({"4a-3b+(4d-6)x1 >= s", 4 * a - 3 * b + (4 * dd - 6) * x1, s, ">="});
  out.push_back({"3a-2b+2x1+(3d-2)x2 >= s", 3 * a - 2 * b + 2 * x1 + (3 * dd - 2) * x2, s, ">="});
  out.push_back({"2a+(2d-2)x3 >= s", 2 * a + (2 * dd - 2) * x3, s, ">="});
  return out;
}

}  // namespace domgame
