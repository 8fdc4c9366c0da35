// Copyright 2026 The AuctionLab Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "auctionlab/error.hpp"
#include "auctionlab/harness.hpp"

using namespace auctionlab;

namespace {

std::vector<TrialRecord> stream(const std::vector<Money>& values, Money reference) {
  std::vector<TrialRecord> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    TrialRecord r;
    r.suite = "greedy-chain";
    r.trial = i;
    r.seed = i;
    r.descriptor = "m=1";
    r.value = values[i];
    r.reference = reference;
    r.ratio = Rational(reference) / Rational(std::max<Money>(values[i], 1));
    out.push_back(r);
  }
  return out;
}

// Exact E[greedy] on a random chain of j keywords: X_j when one bidder of the
// first keyword is already spent, Y_j when both are available.
Rational chain_expectation_by_recurrence(std::size_t m) {
  Rational x = 0;  // one keyword left whose reused bidder is spent: value 0
  Rational y = 1;
  for (std::size_t i = 1; i < m; ++i) {
    const Rational nx = Rational(1, 2) * x + Rational(1, 2) * y;
    const Rational ny = 1 + Rational(1, 2) * x + Rational(1, 2) * y;
    x = nx;
    y = ny;
  }
  return y;
}

}  // namespace

TEST_CASE("parse_params") {
  const Params p = parse_params("k=2,n=6");
  CHECK(p.at("k") == "2");
  CHECK(p.at("n") == "6");
  CHECK(parse_params("").empty());
  CHECK_THROWS_AS(parse_params("k"), Error);
}

TEST_CASE("summary of a constant stream") {
  const ExperimentReport r = summarize(stream({1, 1, 1, 1}, 1));
  CHECK(r.mean == 1);
  CHECK(r.se == 0.0);
  CHECK(r.sd == 0.0);
  CHECK(r.pass);
}

TEST_CASE("summary of a two-point stream") {
  const ExperimentReport r = summarize(stream({0, 2}, 1));
  CHECK(r.mean == 1);
  CHECK(r.sd == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.se == doctest::Approx(1.0));
}

TEST_CASE("two-sided verdict") {
  CHECK(summarize(stream({5, 5, 5}, 5)).pass);
  CHECK_FALSE(summarize(stream({4, 4, 4}, 5)).pass);
  CHECK(summarize(stream({4, 6, 4, 6}, 5)).pass);
}

TEST_CASE("skipped trials are excluded and an empty stream is an error") {
  auto records = stream({3, 3}, 3);
  records[1].status = TrialStatus::kSkipped;
  const auto r = summarize(records);
  CHECK(r.skipped == 1);
  CHECK(r.completed == 1);
  try {
    summarize({});
    FAIL("expected kEmptyStream");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyStream);
  }
}

TEST_CASE("unknown suites and parameters are rejected") {
  try {
    run_experiment("nope", {}, 1, 0);
    FAIL("expected kUnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownSuite);
  }
  try {
    run_experiment("greedy-chain", {{"q", "1"}}, 1, 0);
    FAIL("expected kInvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidParams);
  }
}

TEST_CASE("CSV round trip reproduces the report") {
  const auto run = run_experiment("reverse-match", {}, 30, 5, 1);
  std::istringstream in(records_to_csv(run.records));
  const auto back = records_from_csv(in);
  CHECK(records_to_csv(back) == records_to_csv(run.records));
  const auto a = report_to_json(summarize(run.records));
  const auto b = report_to_json(summarize(back));
  CHECK(a.dump() == b.dump());

  std::istringstream bad("suite,trial\nx,1\n");
  CHECK_THROWS_AS(records_from_csv(bad), Error);
}

TEST_CASE("records do not depend on the worker count") {
  for (const auto& suite : suite_names()) {
    const auto one = run_experiment(suite, {}, 12, 42, 1);
    const auto three = run_experiment(suite, {}, 12, 42, 3);
    CHECK(records_to_csv(one.records) == records_to_csv(three.records));
  }
}

TEST_CASE("every suite passes a short run") {
  for (const auto& suite : suite_names()) {
    const auto run = run_experiment(suite, {}, 60, 7, 1);
    INFO(suite);
    CHECK(run.report.violations == 0);
    CHECK(run.report.completed + run.report.skipped == 60);
  }
}

TEST_CASE("ranking bound closed form matches the exact sum") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 12; ++n) {
      CHECK(ranking_kcopy_bound(k, n).convert_to<double>() == doctest::Approx(ranking_kcopy_closed_form(k, n)));
    }
  }
  CHECK(ranking_kcopy_bound(1, 1) == Rational(1, 2));
  CHECK(ranking_simulate_bound(1) == Rational(2, 3) / 4);
  CHECK(ranking_simulate_ratio() == doctest::Approx(5.083).epsilon(0.001));
}

TEST_CASE("greedy chain expectation matches the recurrence") {
  for (std::size_t m = 1; m <= 30; ++m) {
    CHECK(chain_expectation_by_recurrence(m) == greedy_chain_expectation(m));
  }
}
