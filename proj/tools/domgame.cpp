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

// Command-line front end: exact solving, greedy play, worst-case search,
// parameter and bound tables, graph generation and corpus verification.
//
// Exit codes: 0 all checks pass, 1 a bound or audit check failed, 2 bad
// input (including exhausted search budgets).

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domgame/bounds.hpp"
#include "domgame/errors.hpp"
#include "domgame/generators.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/params.hpp"
#include "domgame/serialize.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategy.hpp"
#include "domgame/verify.hpp"

namespace {

using namespace domgame;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("DOMGAME_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("DOMGAME_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

std::vector<NamedGraph> LoadGraphs(const std::string& path) {
  auto graphs = load_graph_file(path);
  if (graphs.empty()) throw InvalidInput(path + " holds no graph");
  return graphs;
}

// Proven bound of the family for this start.
BoundValue FamilyBound(const Family& family, int n, Player first) {
  const bool d_start = first == Player::kDominator;
  switch (family.kind) {
    case FamilyKind::kTwoThirds:
      return bound_value(BoundFamily::kGeneral23, n);
    case FamilyKind::kDeg3:
      return bound_value(d_start ? BoundFamily::kDeg3 : BoundFamily::kDeg3StallerStart, n);
    case FamilyKind::kMinDeg:
      return bound_value(d_start ? BoundFamily::kMinDeg : BoundFamily::kMinDegStallerStart, n,
                         family.d);
  }
  throw InvalidInput("unknown family");
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

int CmdGamma(const std::string& file, int cap) {
  for (const auto& g : LoadGraphs(file)) {
    std::cout << g.id << " gamma=" << domination_number(g.graph, SolverConfig{cap}) << "\n";
  }
  return kExitPass;
}

int CmdSolve(const std::string& file, bool staller_start, int cap) {
  int status = kExitPass;
  for (const auto& g : LoadGraphs(file)) {
    const SandwichReport r = check_sandwich(g.graph, SolverConfig{cap});
    std::cout << g.id << (staller_start ? " gamma_g'=" : " gamma_g=")
              << (staller_start ? r.gamma_g_prime : r.gamma_g) << " gamma=" << r.gamma
              << " sandwich=" << (r.holds ? "ok" : "VIOLATED") << "\n";
    if (!r.holds) status = kExitFail;
  }
  return status;
}

Policy ParseStaller(const std::string& name, std::uint64_t seed) {
  if (name == "random") return Policy::RandomStaller(seed);
  if (name == "min-gain") return Policy::MinGainStaller();
  if (name == "worst") return Policy::WorstCaseStaller();
  if (name == "exact") return Policy::ExactOptimal();
  throw InvalidInput("unknown Staller policy '" + name + "'");
}

int CmdPlay(const std::string& file, const std::string& family_name, const std::string& staller,
            std::uint64_t seed, bool staller_start, const std::string& json_out,
            std::size_t budget) {
  int status = kExitPass;
  nlohmann::json traces = nlohmann::json::array();
  const Player first = staller_start ? Player::kStaller : Player::kDominator;
  for (const auto& g : LoadGraphs(file)) {
    const auto graph = std::make_shared<const Graph>(g.graph);
    const Family family = parse_family(family_name, min_degree(*graph));
    PlayOptions opts;
    opts.graph_id = g.id;
    opts.node_budget = budget;
    const Trace t =
        play_game(graph, family, Policy::GreedyDominator(), ParseStaller(staller, seed), first, opts);
    const AuditReport audit = audit_trace(*graph, t);
    const BoundValue bound = FamilyBound(family, graph->order(), first);
    const bool within = t.length() <= *bound.floor;
    std::cout << g.id << " family=" << family.name() << " first=" << ToString(first)
              << " staller=" << t.staller_policy << " length=" << t.length()
              << " bound=" << *bound.floor << (within ? "" : " EXCEEDED")
              << " switches=" << t.switches.size()
              << " audit=" << (audit.ok() ? "ok" : std::to_string(audit.findings.size()) + " findings")
              << "\n";
    for (const auto& f : audit.findings) std::cout << "  " << f << "\n";
    if (!within || !audit.ok()) status = kExitFail;
    traces.push_back(trace_to_json(t));
  }
  if (!json_out.empty()) {
    WriteFile(json_out, (traces.size() == 1 ? traces[0] : traces).dump(2) + "\n");
  }
  return status;
}

int CmdWorst(const std::string& file, const std::string& family_name, bool staller_start,
             std::size_t budget, bool audit) {
  int status = kExitPass;
  const Player first = staller_start ? Player::kStaller : Player::kDominator;
  for (const auto& g : LoadGraphs(file)) {
    const auto graph = std::make_shared<const Graph>(g.graph);
    const Family family = parse_family(family_name, min_degree(*graph));
    GreedyAdversary search(graph, family, {budget, audit});
    const int length = search.Length(first);
    const BoundValue bound = FamilyBound(family, graph->order(), first);
    const bool within = length <= *bound.floor;
    std::cout << g.id << " family=" << family.name() << " first=" << ToString(first)
              << " worst_case_length=" << length << " bound=" << *bound.floor
              << (within ? "" : " EXCEEDED") << " positions=" << search.nodes();
    if (audit) std::cout << " findings=" << search.findings().size();
    std::cout << "\n";
    for (const auto& f : search.findings()) std::cout << "  " << f << "\n";
    if (!within || !search.findings().empty()) status = kExitFail;
  }
  return status;
}

int CmdParams(int d, bool as_json) {
  const Params p = scheme_params(d);
  const auto checks = parameter_identities(d);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.holds();
  if (as_json) {
    nlohmann::json j = family_to_json(Family::MinDeg(d));
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& c : checks) {
      ids.push_back({{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs},
                     {"holds", c.holds()}});
    }
    j["identities"] = ids;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d=" << p.d << " a=" << p.a << " b=" << p.b << " x1=" << p.x1 << " x2=" << p.x2
              << " x3=" << p.x3 << " s=" << p.s << "\n";
    const Rational coef(p.a, p.s);
    std::cout << "a/s = " << coef.numerator() << "/" << coef.denominator() << "\n";
    for (const auto& c : checks) {
      std::cout << (c.holds() ? "  ok   " : "  FAIL ") << c.name << ": " << c.lhs << " "
                << c.relation << " " << c.rhs << "\n";
    }
  }
  return ok ? kExitPass : kExitFail;
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidInput("range must look like A..B, got '" + text + "'");
  }
}

int CmdBounds(const std::string& range) {
  const auto [lo, hi] = ParseRange(range);
  std::cout << std::left << std::setw(4) << "d" << std::setw(30) << "polynomial"
            << std::setw(12) << "~value" << std::setw(26) << "log coefficient in"
            << "smaller\n";
  for (const auto& row : compare_bounds(lo, hi)) {
    std::ostringstream frac, interval;
    frac << row.polynomial.numerator() << "/" << row.polynomial.denominator();
    interval << std::fixed << std::setprecision(6) << "[" << row.log_lo << ", " << row.log_hi
             << "]";
    std::cout << std::left << std::setw(4) << row.d << std::setw(30) << frac.str()
              << std::setw(12) << std::fixed << std::setprecision(6)
              << boost::rational_cast<double>(row.polynomial) << std::setw(26) << interval.str()
              << ToString(row.winner) << "\n";
  }
  return kExitPass;
}

int CmdGen(int n, int delta, const std::string& model, std::uint64_t seed, int count,
           bool edge_list) {
  const GraphModel m = parse_model(model);
  for (int i = 0; i < count; ++i) {
    const Graph g = gen_min_degree_graph(n, delta, m, seed + static_cast<std::uint64_t>(i));
    if (edge_list) {
      std::cout << format_edge_list(g);
    } else {
      std::cout << encode_graph6(g) << "\n";
    }
  }
  return kExitPass;
}

int CmdVerify(const std::string& dir, const VerifyConfig& config, const std::string& csv_out,
              const std::string& json_out) {
  const VerifyReport report = verify_corpus(dir, config);
  const std::string csv = report_csv(report);
  if (csv_out.empty()) {
    std::cout << csv;
  } else {
    WriteFile(csv_out, csv);
  }
  if (!json_out.empty()) WriteFile(json_out, report_json(report).dump(2) + "\n");
  const VerifySummary& s = report.summary;
  std::cerr << "graphs=" << s.graphs << " rows=" << s.rows << " pass=" << s.pass
            << " fail=" << s.fail << " skip=" << s.skip << " undecided=" << s.undecided
            << " error=" << s.error << " lemma_violations=" << s.lemma_violations << "\n";
  return report.ok() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination game solver and greedy-strategy verifier"};
  app.require_subcommand(1);

  std::string file;
  int cap = 22;
  bool staller_start = false;
  std::string family = "auto";
  std::string staller = "worst";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string json_out;
  std::size_t budget = 20'000'000;
  bool audit = false;

  auto* gamma = app.add_subcommand("gamma", "domination number of each graph in FILE");
  gamma->add_option("file", file, "graph6 or edge-list file")->required();
  gamma->add_option("--cap", cap, "largest order solved exactly");

  auto* solve = app.add_subcommand("solve", "exact game value of each graph in FILE");
  solve->add_option("file", file, "graph6 or edge-list file")->required();
  solve->add_flag("--staller-start", staller_start, "report the Staller-start value");
  solve->add_option("--cap", cap, "largest order solved exactly");

  auto* play = app.add_subcommand("play", "play greedy Dominator against a Staller policy");
  play->add_option("file", file, "graph6 or edge-list file")->required();
  play->add_option("--family", family, "auto, two-thirds, deg3, mindeg or mindeg(d)");
  play->add_option("--staller", staller, "random, min-gain, worst or exact");
  play->add_option("--seed", seed, "seed for the random Staller (default $DOMGAME_SEED or 0)")
      ->each([&](const std::string&) { seed_given = true; });
  play->add_flag("--staller-start", staller_start, "Staller moves first");
  play->add_option("--json", json_out, "write the trace as JSON");
  play->add_option("--budget", budget, "position budget for the worst-case Staller");

  auto* worst = app.add_subcommand("worst", "longest game against the greedy Dominator");
  worst->add_option("file", file, "graph6 or edge-list file")->required();
  worst->add_option("--family", family, "auto, two-thirds, deg3, mindeg or mindeg(d)");
  worst->add_flag("--staller-start", staller_start, "Staller moves first");
  worst->add_option("--budget", budget, "position budget");
  worst->add_flag("--audit", audit, "check every searched position");

  int d = 4;
  bool params_json = false;
  auto* params = app.add_subcommand("params", "parameter values and identities at d");
  params->add_option("--d", d, "degree parameter, 4..64")->required();
  params->add_flag("--json", params_json, "print value tables and identities as JSON");

  std::string range = "3..22";
  auto* bounds = app.add_subcommand("bounds", "compare polynomial and log coefficients");
  bounds->add_option("--d-range", range, "A..B within 3..64");

  int n = 10;
  int delta = 3;
  std::string model = "regular-pairing";
  int count = 1;
  bool edges = false;
  auto* gen = app.add_subcommand("gen", "random graphs with a minimum degree");
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--delta", delta, "minimum degree")->required();
  gen->add_option("--model", model, "regular-pairing or degree-floor-repair");
  gen->add_option("--seed", seed, "seed (default $DOMGAME_SEED or 0)")
      ->each([&](const std::string&) { seed_given = true; });
  gen->add_option("--count", count, "number of graphs, seeds seed..seed+count-1");
  gen->add_flag("--edge-list", edges, "print edge lists instead of graph6");

  std::string corpus;
  std::string csv_out;
  VerifyConfig vconfig;
  auto* verify = app.add_subcommand("verify", "check every bound on a corpus directory");
  verify->add_option("--corpus", corpus, "directory of graph files")->required();
  verify->add_option("--cap", vconfig.solver_cap, "largest order solved exactly");
  verify->add_option("--csv", csv_out, "write the CSV report here instead of stdout");
  verify->add_option("--json", json_out, "write the JSON report");
  verify->add_option("--budget", vconfig.node_budget, "position budget per search");
  verify->add_option("--threads", vconfig.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (!seed_given) seed = DefaultSeed();
    if (*gamma) return CmdGamma(file, cap);
    if (*solve) return CmdSolve(file, staller_start, cap);
    if (*play) return CmdPlay(file, family, staller, seed, staller_start, json_out, budget);
    if (*worst) return CmdWorst(file, family, staller_start, budget, audit);
    if (*params) return CmdParams(d, params_json);
    if (*bounds) return CmdBounds(range);
    if (*gen) return CmdGen(n, delta, model, seed, count, edges);
    if (*verify) return CmdVerify(corpus, vconfig, csv_out, json_out);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
