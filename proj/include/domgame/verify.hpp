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

#ifndef DOMGAME_VERIFY_HPP_
#define DOMGAME_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "domgame/graph_io.hpp"

namespace domgame {

struct VerifyConfig {
  int solver_cap = 16;                    // exact solving up to this order
  std::size_t node_budget = 2'000'000;    // per greedy-vs-adversary search
  bool audit = true;                      // check every searched position
  unsigned threads = 0;                   // 0: hardware concurrency
};

// One (graph, bound) pair. Lengths are absent when not computed.
struct ReportRow {
  std::string graph_id;
  int n = 0;
  int delta = 0;
  std::optional<int> gamma;
  std::optional<int> gamma_g;
  std::optional<int> gamma_g_prime;
  std::optional<int> greedy_wc_d;  // greedy Dominator vs worst Staller, Dominator starts
  std::optional<int> greedy_wc_s;  // same, Staller starts
  std::string bound_family;
  std::optional<std::int64_t> bound_floor;
  std::string pass;  // "pass", "fail", "skip", "undecided" or "error"
  int lemma_violations = 0;
  std::vector<std::string> notes;
};

struct VerifySummary {
  int graphs = 0;
  int rows = 0;
  int pass = 0;
  int fail = 0;
  int skip = 0;
  int undecided = 0;
  int error = 0;
  int lemma_violations = 0;
};

struct VerifyReport {
  std::vector<ReportRow> rows;  // sorted by graph id
  VerifySummary summary;

  bool ok() const { return summary.fail == 0 && summary.error == 0; }
};

// Rows for one graph: the sandwich check when solved exactly, then every
// bound whose precondition the graph meets (a skip row for the 2n/3 bound on
// graphs with an isolated vertex).
std::vector<ReportRow> verify_graph(const NamedGraph& g, const VerifyConfig& config);

// Verifies graphs on a worker pool. Per-graph failures become "error" rows.
VerifyReport verify_graphs(const std::vector<NamedGraph>& graphs, const VerifyConfig& config);

// Same over every graph file in a directory; unreadable files become
// "error" rows keyed by file name.
VerifyReport verify_corpus(const std::filesystem::path& dir, const VerifyConfig& config);

inline constexpr const char* kReportCsvHeader =
    "graph_id,n,delta,gamma,gamma_g,gamma_g_prime,greedy_wc_D,greedy_wc_S,bound_family,"
    "bound_floor,pass,lemma_violations";

std::string report_csv(const VerifyReport& report);
nlohmann::json report_json(const VerifyReport& report);

}  // namespace domgame

#endif  // DOMGAME_VERIFY_HPP_
