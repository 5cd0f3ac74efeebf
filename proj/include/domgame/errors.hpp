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

#ifndef DOMGAME_ERRORS_HPP_
#define DOMGAME_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace domgame {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad graph text, out-of-range ids, bad arguments.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A move that does not dominate any new vertex. Always a caller bug.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

// The game is already over and an operation needed a legal move.
class GameOver : public Error {
 public:
  using Error::Error;
};

// A value assignment was asked to value a blue degree class it omits.
class StageInapplicable : public Error {
 public:
  using Error::Error;
};

// Graph does not meet a strategy family's minimum-degree requirement.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Exact solver refused a graph above its vertex cap or ran out of memo room.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Adversarial search or random generation hit its node/retry budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace domgame

#endif  // DOMGAME_ERRORS_HPP_
