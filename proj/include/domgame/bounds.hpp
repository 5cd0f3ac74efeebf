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

#ifndef DOMGAME_BOUNDS_HPP_
#define DOMGAME_BOUNDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace domgame {

using Rational = boost::rational<std::int64_t>;

enum class BoundFamily {
  kGeneral23,           // 2n/3, isolate-free graphs
  kDeg3,                // 34n/61, min degree >= 3
  kDeg3StallerStart,    // (34n-27)/61
  kMinDeg,              // a n / s, min degree >= d >= 4
  kMinDegStallerStart,  // (a n - E(d)) / s
  kLogBound,            // strict: 2 (1 + ln(delta+1)) / (delta+1) n
  kSandwich,            // 2 gamma - 1
};

std::string ToString(BoundFamily f);

// A bound on game length. Polynomial bounds are exact rationals and
// non-strict; the log bound is irrational, strict, and carried as an
// outward-rounded enclosure.
struct BoundValue {
  BoundFamily family = BoundFamily::kGeneral23;
  std::int64_t n = 0;
  int param = 0;                  // d, delta or gamma depending on family
  std::optional<Rational> exact;  // absent for the log bound
  double lo = 0;                  // enclosure, rounded outward
  double hi = 0;
  bool strict = false;
  // Largest game length the bound admits; absent when rounding could not
  // decide it.
  std::optional<std::int64_t> floor;

  std::string label() const;  // e.g. "mindeg(5)"
};

// Throws InvalidInput on n < 1, d outside [4, 64] for the MinDeg families,
// delta < 2 for the log bound, gamma < 1 for the sandwich bound.
BoundValue bound_value(BoundFamily family, std::int64_t n, int param = 0);

// floor of a rational, rounding toward negative infinity.
std::int64_t floor_of(const Rational& q);

// Coefficient of n: 2/3, 34/61, or a/s at d.
Rational polynomial_coefficient(BoundFamily family, int d);

// Sign of q - 2(1+ln(delta+1))/(delta+1), decided with directed rounding at
// increasing precision: -1 or +1, or 0 if still undecided at the cap.
int compare_with_log_coefficient(const Rational& q, int delta, int max_precision_bits = 4096);

// Outward-rounded enclosure of the log coefficient.
std::pair<double, double> log_coefficient_enclosure(int delta);

enum class Winner { kPolynomial, kLog, kUndecided };
std::string ToString(Winner w);

struct BoundComparison {
  int d = 0;
  Rational polynomial;  // 34/61 at d = 3, a/s for d >= 4
  double log_lo = 0;
  double log_hi = 0;
  Winner winner = Winner::kUndecided;
};

// One row per d in [lo, hi], a subrange of [3, 64]. Throws InvalidInput.
std::vector<BoundComparison> compare_bounds(int lo, int hi);

// Exact rational of a plain decimal literal such as "0.5139".
Rational parse_decimal(const std::string& text);

}  // namespace domgame

#endif  // DOMGAME_BOUNDS_HPP_
