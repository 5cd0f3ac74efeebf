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

#ifndef DOMGAME_PARAMS_HPP_
#define DOMGAME_PARAMS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace domgame {

using Points = std::int64_t;

// Largest d for which the polynomial parameters are supported. All values
// and identities stay well inside int64 up to here.
inline constexpr int kMaxParamD = 64;

// Integer parameters of the minimum-degree-d value assignments.
struct Params {
  int d = 0;
  Points a = 0;   // value of a white vertex
  Points b = 0;   // base value of a blue vertex
  Points x1 = 0;  // per-degree discounts applied in later stages
  Points x2 = 0;
  Points x3 = 0;
  Points s = 0;   // guaranteed average decrease per turn
};

// Evaluates the six polynomials at d and checks the ordering
// 0 < x1 < x2 < x3 < b-x1-x2-x3 < b < a and x3 < a-b.
// Throws InvalidInput for d < 4 or d > kMaxParamD, Error if the ordering
// fails.
Params scheme_params(int d);

bool ordering_chain_holds(const Params& p);

// a + d(a-b) - s, the extra decrease an opening Staller move guarantees
// beyond s: 30d^5 - 227d^4 + 637d^3 - 786d^2 + 360d.
Points staller_opening_excess(int d);

// One exact relation between parameters, e.g. "6a-4b = 2s".
struct IdentityCheck {
  std::string name;
  Points lhs = 0;
  Points rhs = 0;
  // "=" or ">="
  std::string relation;
  bool holds() const { return relation == "=" ? lhs == rhs : lhs >= rhs; }
};

// Every exact identity and inequality the potential argument relies on,
// evaluated at d.
std::vector<IdentityCheck> parameter_identities(int d);

}  // namespace domgame

#endif  // DOMGAME_PARAMS_HPP_
