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

#ifndef DOMGAME_SERIALIZE_HPP_
#define DOMGAME_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "domgame/params.hpp"
#include "domgame/scheme.hpp"
#include "domgame/strategy.hpp"

namespace domgame {

// Version of the trace JSON layout written by trace_to_json.
inline constexpr int kTraceSchemaVersion = 1;

// Trace layout:
//   {"schema": 1, "graph": id, "family": "deg3", "first": "Dominator",
//    "dominator": policy, "staller": policy, "initial_potential": p0,
//    "turns": [{"i", "player", "v", "phase", "stage", "gain", "p_after"}],
//    "switches": [{"before_turn", "from_phase", "to_phase", "from_stage",
//                  "to_stage", "drop"}],
//    "phases": [{"phase", "begin", "end", "skipped"}],
//    "length": t}
nlohmann::json trace_to_json(const Trace& trace);
// Throws InvalidInput on a malformed document or unknown schema version.
Trace trace_from_json(const nlohmann::json& j);

// "two-thirds", "deg3", "mindeg(5)" or "mindeg" (which takes d from
// `delta`), or "auto". Throws InvalidInput.
Family parse_family(const std::string& name, int delta);

nlohmann::json params_to_json(const Params& p);
// Value tables and phase table of a family.
nlohmann::json family_to_json(const Family& family);

}  // namespace domgame

#endif  // DOMGAME_SERIALIZE_HPP_
