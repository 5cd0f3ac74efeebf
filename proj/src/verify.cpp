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

#include "domgame/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "domgame/bounds.hpp"
#include "domgame/errors.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategy.hpp"

namespace domgame {

namespace {

struct GreedyResult {
  std::optional<int> wc_d;
  std::optional<int> wc_s;
  int violations = 0;
  std::vector<std::string> notes;
};

GreedyResult RunGreedy(const std::shared_ptr<const Graph>& g, const Family& family,
                       const VerifyConfig& config) {
  GreedyResult out;
  for (Player first : {Player::kDominator, Player::kStaller}) {
    try {
      GreedyAdversary search(g, family, {config.node_budget, config.audit});
      const int length = search.Length(first);
      (first == Player::kDominator ? out.wc_d : out.wc_s) = length;
      out.violations += static_cast<int>(search.findings().size());
      for (const auto& f : search.findings()) out.notes.push_back(family.name() + ": " + f);
      if (config.audit) {
        const Trace t = play_game(g, family, Policy::GreedyDominator(), Policy::WorstCaseStaller(),
                                  first, {"", config.solver_cap, config.node_budget});
        if (t.length() != length) {
          ++out.violations;
          out.notes.push_back(family.name() + ": replayed worst-case game has length " +
                              std::to_string(t.length()) + ", search said " +
                              std::to_string(length));
        }
        for (const auto& f : audit_trace(*g, t).findings) {
          ++out.violations;
          out.notes.push_back(family.name() + " trace: " + f);
        }
      }
    } catch (const BudgetExceeded& e) {
      out.notes.push_back(family.name() + " " + std::string(ToString(first)) +
                          "-start search: " + e.what());
    } catch (const StageInapplicable& e) {
      ++out.violations;
      out.notes.push_back(family.name() + ": " + e.what());
    }
  }
  return out;
}

// Accumulates comparisons for one row.
class RowJudge {
 public:
  explicit RowJudge(ReportRow& row) : row_(row) {}

  void AtMost(const char* what, const std::optional<int>& length, std::int64_t limit) {
    if (!length) return;
    ++checked_;
    if (*length > limit) {
      failed_ = true;
      row_.notes.push_back(std::string(what) + " = " + std::to_string(*length) + " exceeds " +
                           std::to_string(limit));
    }
  }
  void Undecided(const std::string& note) {
    undecided_ = true;
    row_.notes.push_back(note);
  }
  void Fail(const std::string& note) {
    ++checked_;
    failed_ = true;
    row_.notes.push_back(note);
  }
  void Finish() {
    if (failed_ || row_.lemma_violations > 0) {
      row_.pass = "fail";
    } else if (undecided_) {
      row_.pass = "undecided";
    } else {
      row_.pass = checked_ > 0 ? "pass" : "skip";
    }
  }

 private:
  ReportRow& row_;
  int checked_ = 0;
  bool failed_ = false;
  bool undecided_ = false;
};

ReportRow ErrorRow(const std::string& id, const std::string& what) {
  ReportRow row;
  row.graph_id = id;
  row.bound_family = "error";
  row.pass = "error";
  row.notes.push_back(what);
  return row;
}

}  // namespace

std::vector<ReportRow> verify_graph(const NamedGraph& named, const VerifyConfig& config) {
  const auto g = std::make_shared<const Graph>(named.graph);
  const int n = g->order();
  const int delta = min_degree(*g);

  ReportRow base;
  base.graph_id = named.id;
  base.n = n;
  base.delta = delta;
  std::vector<std::string> exact_notes;
  std::optional<SandwichReport> exact;
  if (n <= config.solver_cap) {
    try {
      exact = check_sandwich(*g, SolverConfig{config.solver_cap});
      base.gamma = exact->gamma;
      base.gamma_g = exact->gamma_g;
      base.gamma_g_prime = exact->gamma_g_prime;
    } catch (const Error& e) {
      exact_notes.push_back(std::string("exact solver: ") + e.what());
    }
  } else {
    exact_notes.push_back("exact solver skipped: n > cap " + std::to_string(config.solver_cap));
  }

  std::vector<ReportRow> rows;
  auto make_row = [&](const std::string& family, std::optional<std::int64_t> floor) {
    ReportRow row = base;
    row.bound_family = family;
    row.bound_floor = floor;
    row.notes = exact_notes;
    return row;
  };

  if (exact) {
    ReportRow row = make_row(ToString(BoundFamily::kSandwich), 2 * exact->gamma - 1);
    RowJudge judge(row);
    if (!exact->holds) {
      judge.Fail("gamma <= gamma_g <= 2 gamma - 1 violated");
    } else {
      judge.AtMost("gamma_g", exact->gamma_g, 2 * exact->gamma - 1);
    }
    judge.Finish();
    rows.push_back(std::move(row));
  }

  // 2n/3 for isolate-free graphs, with the two-thirds greedy strategy.
  {
    const BoundValue b = bound_value(BoundFamily::kGeneral23, n);
    ReportRow row = make_row(b.label(), b.floor);
    RowJudge judge(row);
    if (delta < 1) {
      row.notes.push_back("isolate-free graph required");
    } else {
      const GreedyResult gr = RunGreedy(g, Family::TwoThirds(), config);
      row.greedy_wc_d = gr.wc_d;
      row.greedy_wc_s = gr.wc_s;
      row.lemma_violations = gr.violations;
      row.notes.insert(row.notes.end(), gr.notes.begin(), gr.notes.end());
      judge.AtMost("gamma_g", row.gamma_g, *b.floor);
      judge.AtMost("gamma_g'", row.gamma_g_prime, *b.floor);
      judge.AtMost("greedy_wc_D", row.greedy_wc_d, *b.floor);
      judge.AtMost("greedy_wc_S", row.greedy_wc_s, *b.floor);
    }
    judge.Finish();
    rows.push_back(std::move(row));
  }

  auto family_rows = [&](const Family& family, BoundFamily d_start, BoundFamily s_start, int param) {
    const GreedyResult gr = RunGreedy(g, family, config);
    const BoundValue bd = bound_value(d_start, n, param);
    const BoundValue bs = bound_value(s_start, n, param);
    ReportRow rd = make_row(bd.label(), bd.floor);
    ReportRow rs = make_row(bs.label(), bs.floor);
    for (ReportRow* r : {&rd, &rs}) {
      r->greedy_wc_d = gr.wc_d;
      r->greedy_wc_s = gr.wc_s;
    }
    rd.lemma_violations = gr.violations;
    rd.notes.insert(rd.notes.end(), gr.notes.begin(), gr.notes.end());
    {
      RowJudge judge(rd);
      judge.AtMost("gamma_g", rd.gamma_g, *bd.floor);
      judge.AtMost("greedy_wc_D", rd.greedy_wc_d, *bd.floor);
      judge.Finish();
    }
    {
      RowJudge judge(rs);
      judge.AtMost("gamma_g'", rs.gamma_g_prime, *bs.floor);
      judge.AtMost("greedy_wc_S", rs.greedy_wc_s, *bs.floor);
      judge.Finish();
    }
    rows.push_back(std::move(rd));
    rows.push_back(std::move(rs));
  };

  if (delta >= 3) {
    family_rows(Family::Deg3(), BoundFamily::kDeg3, BoundFamily::kDeg3StallerStart, 3);
  }
  if (delta >= 4) {
    const int d = std::min(delta, kMaxParamD);
    family_rows(Family::MinDeg(d), BoundFamily::kMinDeg, BoundFamily::kMinDegStallerStart, d);
    ReportRow& rd = rows[rows.size() - 2];
    // The exact value must also respect every smaller admissible d.
    if (rd.gamma_g) {
      for (int k = 4; k < d; ++k) {
        const BoundValue bk = bound_value(BoundFamily::kMinDeg, n, k);
        if (*rd.gamma_g > *bk.floor) {
          rd.pass = "fail";
          rd.notes.push_back("gamma_g exceeds the d=" + std::to_string(k) + " bound " +
                             std::to_string(*bk.floor));
        }
      }
    }
  }
  if (delta >= 2) {
    const BoundValue b = bound_value(BoundFamily::kLogBound, n, delta);
    ReportRow row = make_row(b.label(), b.floor);
    RowJudge judge(row);
    if (row.gamma_g) {
      if (b.floor) {
        judge.AtMost("gamma_g", row.gamma_g, *b.floor);
      } else {
        judge.Undecided("log bound floor not certified");
      }
    }
    judge.Finish();
    rows.push_back(std::move(row));
  }
  return rows;
}

VerifyReport verify_graphs(const std::vector<NamedGraph>& graphs, const VerifyConfig& config) {
  std::vector<std::vector<ReportRow>> per_graph(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        per_graph[i] = verify_graph(graphs[i], config);
      } catch (const std::exception& e) {
        per_graph[i] = {ErrorRow(graphs[i].id, e.what())};
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(graphs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  std::vector<std::size_t> order(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return graphs[x].id < graphs[y].id; });
  for (std::size_t i : order) {
    for (auto& row : per_graph[i]) report.rows.push_back(std::move(row));
  }
  report.summary.graphs = static_cast<int>(graphs.size());
  for (const ReportRow& r : report.rows) {
    ++report.summary.rows;
    report.summary.lemma_violations += r.lemma_violations;
    if (r.pass == "pass") ++report.summary.pass;
    if (r.pass == "fail") ++report.summary.fail;
    if (r.pass == "skip") ++report.summary.skip;
    if (r.pass == "undecided") ++report.summary.undecided;
    if (r.pass == "error") ++report.summary.error;
  }
  return report;
}

VerifyReport verify_corpus(const std::filesystem::path& dir, const VerifyConfig& config) {
  if (!std::filesystem::is_directory(dir)) throw InvalidInput(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() &&
        (ext == ".g6" || ext == ".txt" || ext == ".edges" || ext == ".el")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> graphs;
  std::vector<ReportRow> load_errors;
  for (const auto& f : files) {
    try {
      for (auto& g : load_graph_file(f)) graphs.push_back(std::move(g));
    } catch (const std::exception& e) {
      load_errors.push_back(ErrorRow(f.filename().string(), e.what()));
    }
  }
  VerifyReport report = verify_graphs(graphs, config);
  for (auto& row : load_errors) {
    ++report.summary.rows;
    ++report.summary.error;
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.graph_id < b.graph_id; });
  return report;
}

namespace {

std::string Cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string Cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json JsonOpt(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string report_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << kReportCsvHeader << "\n";
  for (const ReportRow& r : report.rows) {
    os << CsvField(r.graph_id) << ',' << r.n << ',' << r.delta << ',' << Cell(r.gamma) << ','
       << Cell(r.gamma_g) << ',' << Cell(r.gamma_g_prime) << ',' << Cell(r.greedy_wc_d) << ','
       << Cell(r.greedy_wc_s) << ',' << CsvField(r.bound_family) << ',' << Cell(r.bound_floor)
       << ',' << r.pass << ',' << r.lemma_violations << "\n";
  }
  return os.str();
}

nlohmann::json report_json(const VerifyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& r : report.rows) {
    rows.push_back({{"graph_id", r.graph_id},
                    {"n", r.n},
                    {"delta", r.delta},
                    {"gamma", JsonOpt(r.gamma)},
                    {"gamma_g", JsonOpt(r.gamma_g)},
                    {"gamma_g_prime", JsonOpt(r.gamma_g_prime)},
                    {"greedy_wc_D", JsonOpt(r.greedy_wc_d)},
                    {"greedy_wc_S", JsonOpt(r.greedy_wc_s)},
                    {"bound_family", r.bound_family},
                    {"bound_floor", r.bound_floor ? nlohmann::json(*r.bound_floor)
                                                  : nlohmann::json(nullptr)},
                    {"pass", r.pass},
                    {"lemma_violations", r.lemma_violations},
                    {"notes", r.notes}});
  }
  const VerifySummary& s = report.summary;
  return {{"summary",
           {{"graphs", s.graphs},
            {"rows", s.rows},
            {"pass", s.pass},
            {"fail", s.fail},
            {"skip", s.skip},
            {"undecided", s.undecided},
            {"error", s.error},
            {"lemma_violations", s.lemma_violations}}},
          {"rows", rows}};
}

}  // namespace domgame
