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

#include "domgame/serialize.hpp"

#include <regex>

#include "domgame/errors.hpp"
#include "domgame/phases.hpp"

namespace domgame {

using nlohmann::json;

namespace {

Player ParsePlayer(const std::string& s) {
  if (s == "Dominator") return Player::kDominator;
  if (s == "Staller") return Player::kStaller;
  throw InvalidInput("unknown player '" + s + "'");
}

}  // namespace

Family parse_family(const std::string& name, int delta) {
  if (name == "auto") return auto_family(delta);
  if (name == "two-thirds") return Family::TwoThirds();
  if (name == "deg3") return Family::Deg3();
  if (name == "mindeg") {
    if (delta < 4) throw PreconditionViolated("minimum degree >= 4 required, got " + std::to_string(delta));
    return Family::MinDeg(std::min(delta, kMaxParamD));
  }
  static const std::regex kMinDeg(R"(mindeg\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, kMinDeg)) return Family::MinDeg(std::stoi(m[1]));
  throw InvalidInput("unknown family '" + name + "'");
}

json trace_to_json(const Trace& t) {
  json turns = json::array();
  for (const TurnRecord& r : t.turns) {
    turns.push_back({{"i", r.index},
                     {"player", ToString(r.player)},
                     {"v", r.vertex},
                     {"phase", r.phase},
                     {"stage", r.stage},
                     {"gain", r.gain},
                     {"p_after", r.potential_after}});
  }
  json switches = json::array();
  for (const SwitchRecord& s : t.switches) {
    switches.push_back({{"before_turn", s.before_turn},
                        {"from_phase", s.from_phase},
                        {"to_phase", s.to_phase},
                        {"from_stage", s.from_stage},
                        {"to_stage", s.to_stage},
                        {"drop", s.drop}});
  }
  json phases = json::array();
  for (const PhaseSpan& p : t.phases) {
    phases.push_back(
        {{"phase", p.phase}, {"begin", p.begin}, {"end", p.end}, {"skipped", p.skipped}});
  }
  json j;
  j["schema"] = kTraceSchemaVersion;
  j["graph"] = t.graph_id;
  j["family"] = t.family.name();
  j["first"] = ToString(t.first);
  j["dominator"] = t.dominator_policy;
  j["staller"] = t.staller_policy;
  j["initial_potential"] = t.initial_potential;
  j["turns"] = std::move(turns);
  j["switches"] = std::move(switches);
  j["phases"] = std::move(phases);
  j["length"] = t.length();
  return j;
}

Trace trace_from_json(const json& j) {
  try {
    if (j.at("schema").get<int>() != kTraceSchemaVersion) {
      throw InvalidInput("unsupported trace schema " + j.at("schema").dump());
    }
    Trace t;
    t.graph_id = j.at("graph").get<std::string>();
    t.family = parse_family(j.at("family").get<std::string>(), 0);
    t.first = ParsePlayer(j.at("first").get<std::string>());
    t.dominator_policy = j.at("dominator").get<std::string>();
    t.staller_policy = j.at("staller").get<std::string>();
    t.initial_potential = j.at("initial_potential").get<Points>();
    for (const json& r : j.at("turns")) {
      TurnRecord rec;
      rec.index = r.at("i").get<int>();
      rec.player = ParsePlayer(r.at("player").get<std::string>());
      rec.vertex = r.at("v").get<Vertex>();
      rec.phase = r.at("phase").get<int>();
      rec.stage = r.at("stage").get<int>();
      rec.gain = r.at("gain").get<Points>();
      rec.potential_after = r.at("p_after").get<Points>();
      t.turns.push_back(rec);
    }
    for (const json& s : j.at("switches")) {
      SwitchRecord rec;
      rec.before_turn = s.at("before_turn").get<int>();
      rec.from_phase = s.at("from_phase").get<int>();
      rec.to_phase = s.at("to_phase").get<int>();
      rec.from_stage = s.at("from_stage").get<int>();
      rec.to_stage = s.at("to_stage").get<int>();
      rec.drop = s.at("drop").get<Points>();
      t.switches.push_back(rec);
    }
    for (const json& p : j.at("phases")) {
      t.phases.push_back({p.at("phase").get<int>(), p.at("begin").get<int>(),
                          p.at("end").get<int>(), p.at("skipped").get<bool>()});
    }
    if (j.at("length").get<int>() != t.length()) {
      throw InvalidInput("trace length does not match its turn records");
    }
    return t;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed trace: ") + e.what());
  }
}

json params_to_json(const Params& p) {
  return {{"d", p.d}, {"a", p.a}, {"b", p.b}, {"x1", p.x1},
          {"x2", p.x2}, {"x3", p.x3}, {"s", p.s}};
}

json family_to_json(const Family& family) {
  json stages = json::array();
  for (int st = 1; st <= family.stage_count(); ++st) {
    const Scheme sc = make_scheme(family, st);
    json blue = json::object();
    for (int k = 1; k <= sc.top_class; ++k) {
      const std::string key = k == sc.top_class && k > 1 ? "B>=" + std::to_string(k)
                                                         : "B" + std::to_string(k);
      blue[key] = sc.blue[k] ? json(*sc.blue[k]) : json(nullptr);
    }
    stages.push_back({{"label", sc.label()}, {"W", sc.white}, {"blue", blue}, {"R", 0}});
  }
  json phases = json::array();
  int i = 1;
  for (const PhaseSpec& ps : phase_table(family)) {
    phases.push_back({{"phase", i++},
                      {"stage", ps.stage},
                      {"threshold", ps.threshold},
                      {"turn_floor", ps.turn_floor}});
  }
  json j = {{"family", family.name()},
            {"assignments", stages},
            {"phases", phases},
            {"opening_floor", opening_floor(family)},
            {"average_floor", average_floor(family)}};
  if (family.kind == FamilyKind::kMinDeg) j["params"] = params_to_json(scheme_params(family.d));
  return j;
}

}  // namespace domgame
