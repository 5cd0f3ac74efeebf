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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "domgame/bounds.hpp"
#include "domgame/errors.hpp"
#include "domgame/generators.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/params.hpp"
#include "domgame/serialize.hpp"
#include "domgame/verify.hpp"

using namespace domgame;

namespace {

std::filesystem::path FreshDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

long double LogCoefficient(int delta) {
  return 2.0L * (1.0L + std::log(static_cast<long double>(delta + 1))) / (delta + 1);
}

}  // namespace

TEST_CASE("bound values") {
  CHECK(*bound_value(BoundFamily::kDeg3, 61).floor == 34);
  CHECK(*bound_value(BoundFamily::kDeg3, 61).exact == Rational(34));
  CHECK(*bound_value(BoundFamily::kMinDeg, 72, 4).floor == 37);
  CHECK(*bound_value(BoundFamily::kGeneral23, 9).floor == 6);
  CHECK(*bound_value(BoundFamily::kMinDeg, 4377, 5).floor == 2102);
  CHECK(*bound_value(BoundFamily::kMinDeg, 4377, 5).exact == Rational(2102));
  CHECK(*bound_value(BoundFamily::kDeg3StallerStart, 10).exact == Rational(313, 61));
  CHECK(*bound_value(BoundFamily::kDeg3StallerStart, 10).floor == 5);
  CHECK(*bound_value(BoundFamily::kSandwich, 5, 3).floor == 5);
  // Staller-start MinDeg bound: (a n - E) / s.
  const Params p = scheme_params(4);
  CHECK(*bound_value(BoundFamily::kMinDegStallerStart, 20, 4).exact ==
        Rational(p.a * 20 - staller_opening_excess(4), p.s));
  CHECK(*bound_value(BoundFamily::kMinDegStallerStart, 1, 4).floor == 0);
}

TEST_CASE("bound domain errors") {
  CHECK_THROWS_AS(bound_value(BoundFamily::kGeneral23, 0), InvalidInput);
  CHECK_THROWS_AS(bound_value(BoundFamily::kMinDeg, 10, 3), InvalidInput);
  CHECK_THROWS_AS(bound_value(BoundFamily::kMinDegStallerStart, 10, 65), InvalidInput);
  CHECK_THROWS_AS(bound_value(BoundFamily::kLogBound, 10, 1), InvalidInput);
  CHECK_THROWS_AS(bound_value(BoundFamily::kSandwich, 10, 0), InvalidInput);
  CHECK_THROWS_AS(compare_bounds(2, 5), InvalidInput);
  CHECK_THROWS_AS(compare_bounds(3, 65), InvalidInput);
}

TEST_CASE("floors are nondecreasing in n") {
  for (BoundFamily f : {BoundFamily::kGeneral23, BoundFamily::kDeg3,
                        BoundFamily::kDeg3StallerStart}) {
    std::int64_t prev = *bound_value(f, 1).floor;
    for (int n = 2; n <= 600; ++n) {
      const std::int64_t cur = *bound_value(f, n).floor;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
  for (int d : {4, 5, 11, 64}) {
    for (BoundFamily f : {BoundFamily::kMinDeg, BoundFamily::kMinDegStallerStart}) {
      std::int64_t prev = *bound_value(f, 1, d).floor;
      for (int n = 2; n <= 600; ++n) {
        const std::int64_t cur = *bound_value(f, n, d).floor;
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
  for (int delta : {2, 3, 9}) {
    std::int64_t prev = *bound_value(BoundFamily::kLogBound, 1, delta).floor;
    for (int n = 2; n <= 200; ++n) {
      const std::int64_t cur = *bound_value(BoundFamily::kLogBound, n, delta).floor;
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("log bound floors agree with extended precision away from integers") {
  int compared = 0;
  for (int delta = 2; delta <= 64; ++delta) {
    for (int n = 1; n <= 300; n += 7) {
      const long double v = LogCoefficient(delta) * n;
      if (std::fabs(v - std::round(v)) < 1e-9L) continue;
      const auto b = bound_value(BoundFamily::kLogBound, n, delta);
      REQUIRE(b.floor.has_value());
      CHECK(*b.floor == static_cast<std::int64_t>(std::ceil(v)) - 1);
      CHECK(b.strict);
      CHECK(b.lo <= static_cast<double>(v));
      CHECK(b.hi >= static_cast<double>(v));
      ++compared;
    }
  }
  CHECK(compared > 2000);
}

TEST_CASE("certified comparison against the log coefficient") {
  for (int delta = 2; delta <= 64; ++delta) {
    const long double c = LogCoefficient(delta);
    const Rational below(static_cast<std::int64_t>(std::floor(c * 1e9L)) - 1, 1000000000);
    const Rational above(static_cast<std::int64_t>(std::ceil(c * 1e9L)) + 1, 1000000000);
    CHECK(compare_with_log_coefficient(below, delta) == -1);
    CHECK(compare_with_log_coefficient(above, delta) == 1);
  }
  // Low precision cannot separate values this close.
  const long double c4 = LogCoefficient(4);
  const Rational close(static_cast<std::int64_t>(std::floor(c4 * 1e15L)), 1000000000000000LL);
  CHECK(compare_with_log_coefficient(close, 4, 32) == 0);
  CHECK(compare_with_log_coefficient(close, 4) == -1);
}

TEST_CASE("polynomial against log coefficients") {
  const auto rows = compare_bounds(3, 64);
  REQUIRE(rows.size() == 62);
  for (const auto& row : rows) {
    CAPTURE(row.d);
    const long double poly = static_cast<long double>(row.polynomial.numerator()) /
                             row.polynomial.denominator();
    const long double log_c = LogCoefficient(row.d);
    CHECK(row.log_lo <= static_cast<double>(log_c));
    CHECK(row.log_hi >= static_cast<double>(log_c));
    CHECK(row.winner == (poly < log_c ? Winner::kPolynomial : Winner::kLog));
    CHECK(row.winner == (row.d <= 21 ? Winner::kPolynomial : Winner::kLog));
  }
  CHECK(rows[0].polynomial == Rational(34, 61));
  CHECK(rows[1].polynomial == Rational(37, 72));
  CHECK(rows[2].polynomial == Rational(2102, 4377));
}

TEST_CASE("decimal claims by cross-multiplication") {
  CHECK(parse_decimal("0.5139") == Rational(5139, 10000));
  CHECK(parse_decimal("2") == Rational(2));
  CHECK(Rational(37, 72) < parse_decimal("0.5139"));
  CHECK(Rational(37, 72) > parse_decimal("0.5138"));
  CHECK(Rational(2102, 4377) < parse_decimal("0.4803"));
  CHECK(Rational(34, 61) < parse_decimal("0.5574"));
  CHECK(37 * 10000 < 5139 * 72);
  CHECK(2102LL * 10000 < 4803LL * 4377);
  CHECK(34 * 10000 < 5574 * 61);
  CHECK_THROWS_AS(parse_decimal("0.5x"), InvalidInput);
  CHECK_THROWS_AS(parse_decimal("-1"), InvalidInput);
  CHECK_THROWS_AS(parse_decimal(""), InvalidInput);
}

TEST_CASE("floor_of rounds toward negative infinity") {
  CHECK(floor_of(Rational(7, 2)) == 3);
  CHECK(floor_of(Rational(-7, 2)) == -4);
  CHECK(floor_of(Rational(-4, 2)) == -2);
  CHECK(floor_of(Rational(0)) == 0);
}

TEST_CASE("generators") {
  const Graph r = gen_min_degree_graph(10, 3, GraphModel::kRegularPairing, 1);
  CHECK(r.order() == 10);
  for (Vertex v = 0; v < 10; ++v) CHECK(r.degree(v) == 3);
  CHECK(r == gen_min_degree_graph(10, 3, GraphModel::kRegularPairing, 1));
  CHECK_THROWS_AS(gen_min_degree_graph(9, 3, GraphModel::kRegularPairing, 1), InvalidInput);
  CHECK_THROWS_AS(gen_min_degree_graph(5, 5, GraphModel::kDegreeFloorRepair, 1), InvalidInput);
  CHECK_THROWS_AS(gen_min_degree_graph(5, -1, GraphModel::kDegreeFloorRepair, 1), InvalidInput);
  const Graph f = gen_min_degree_graph(12, 4, GraphModel::kDegreeFloorRepair, 7);
  CHECK(min_degree(f) >= 4);
  CHECK(f == gen_min_degree_graph(12, 4, GraphModel::kDegreeFloorRepair, 7));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 6 + static_cast<int>(seed % 10);
    const int delta = 1 + static_cast<int>(seed % 5);
    CHECK(min_degree(gen_min_degree_graph(n, delta, GraphModel::kDegreeFloorRepair, seed)) >= delta);
    if (n * delta % 2 == 0) {
      const Graph g = gen_min_degree_graph(n, delta, GraphModel::kRegularPairing, seed);
      CHECK(min_degree(g) == delta);
      CHECK(max_degree(g) == delta);
    }
  }
  CHECK(parse_model("regular-pairing") == GraphModel::kRegularPairing);
  CHECK(parse_model("degree-floor-repair") == GraphModel::kDegreeFloorRepair);
  CHECK_THROWS_AS(parse_model("er"), InvalidInput);
}

TEST_CASE("family names") {
  CHECK(parse_family("auto", 7) == Family::MinDeg(7));
  CHECK(parse_family("auto", 3) == Family::Deg3());
  CHECK(parse_family("auto", 2) == Family::TwoThirds());
  CHECK(parse_family("auto", 90) == Family::MinDeg(64));
  CHECK(parse_family("mindeg", 5) == Family::MinDeg(5));
  CHECK(parse_family("mindeg(4)", 9) == Family::MinDeg(4));
  CHECK(parse_family("two-thirds", 0) == Family::TwoThirds());
  CHECK_THROWS_AS(parse_family("mindeg", 3), PreconditionViolated);
  CHECK_THROWS_AS(parse_family("greedy", 3), InvalidInput);
  const auto j = family_to_json(Family::MinDeg(4));
  CHECK(j["params"]["a"] == 2368);
  CHECK(j["phases"].size() == 5);
  CHECK(j["assignments"][3]["blue"]["B1"] == 560);
}

TEST_CASE("verify a small named corpus") {
  const std::vector<NamedGraph> corpus = {
      {"k5", complete_graph(5)}, {"petersen", petersen_graph()}, {"c6", cycle_graph(6)}};
  const VerifyReport report = verify_graphs(corpus, {});
  CHECK(report.ok());
  CHECK(report.summary.graphs == 3);
  CHECK(report.summary.fail == 0);
  CHECK(report.summary.lemma_violations == 0);
  CHECK(report.summary.pass == report.summary.rows);
  // Sorted by graph id.
  CHECK(report.rows.front().graph_id == "c6");
  CHECK(report.rows.back().graph_id == "petersen");
  bool saw_mindeg = false;
  for (const auto& r : report.rows) {
    CAPTURE(r.graph_id);
    CAPTURE(r.bound_family);
    CHECK(r.pass == "pass");
    if (r.graph_id == "k5" && r.bound_family == "mindeg(4)") {
      saw_mindeg = true;
      CHECK(r.greedy_wc_d == 1);
      CHECK(r.gamma_g == 1);
    }
    if (r.graph_id == "petersen") {
      CHECK(r.gamma == 3);
      CHECK(r.gamma_g == 5);
    }
  }
  CHECK(saw_mindeg);
}

TEST_CASE("verify records precondition rows and errors") {
  const VerifyReport report =
      verify_graphs({{"iso", Graph::FromEdgeList(3, {{0, 1}})}}, {});
  bool skip_row = false;
  for (const auto& r : report.rows) {
    if (r.bound_family == "general23") {
      CHECK(r.pass == "skip");
      CHECK(std::find(r.notes.begin(), r.notes.end(), "isolate-free graph required") !=
            r.notes.end());
      skip_row = true;
    }
  }
  CHECK(skip_row);

  const VerifyReport empty = verify_graphs({}, {});
  CHECK(empty.rows.empty());
  CHECK(empty.summary.graphs == 0);
  CHECK(empty.summary.rows == 0);
  CHECK(empty.ok());
  CHECK(report_csv(empty) == std::string(kReportCsvHeader) + "\n");
}

TEST_CASE("verify a corpus directory and write reports") {
  const auto dir = FreshDir("domgame_verify_test");
  std::ofstream(dir / "named.g6") << encode_graph6(petersen_graph()) << "\n"
                                  << encode_graph6(complete_graph(5)) << "\n";
  std::ofstream(dir / "c6.txt") << format_edge_list(cycle_graph(6));
  std::ofstream(dir / "broken.g6") << "C\n";
  VerifyConfig cfg;
  cfg.threads = 3;
  const VerifyReport report = verify_corpus(dir, cfg);
  CHECK(report.summary.error == 1);
  CHECK_FALSE(report.ok());
  CHECK(report.summary.fail == 0);
  const std::string csv = report_csv(report);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == kReportCsvHeader);
  std::string first;
  std::getline(lines, first);
  CHECK(first.rfind("broken.g6,", 0) == 0);
  const auto j = report_json(report);
  CHECK(j["summary"]["graphs"] == 3);
  CHECK(j["rows"].size() == report.rows.size());
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(verify_corpus(dir, cfg), InvalidInput);
}

TEST_CASE("reports do not depend on the worker count") {
  std::vector<NamedGraph> corpus;
  for (int i = 0; i < 12; ++i) {
    corpus.push_back({"g" + std::to_string(i),
                      gen_min_degree_graph(8 + i % 4, 3, GraphModel::kDegreeFloorRepair, i)});
  }
  VerifyConfig one;
  one.threads = 1;
  VerifyConfig four;
  four.threads = 4;
  CHECK(report_csv(verify_graphs(corpus, one)) == report_csv(verify_graphs(corpus, four)));
}
