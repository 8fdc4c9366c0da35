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

// Seeded Monte-Carlo experiments. Trial i of a run with seed s uses seed
// s ^ i, so results do not depend on how trials are scheduled across
// workers. Records are always emitted sorted by trial index.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "auctionlab/io.hpp"
#include "auctionlab/money.hpp"

namespace auctionlab {

using Params = std::map<std::string, std::string>;

/// "k=v,k2=v2" -> map. Empty text gives an empty map. Throws kInvalidParams
/// on a malformed pair.
Params parse_params(const std::string& text);

enum class TrialStatus { kOk, kViolation, kSkipped };

struct TrialRecord {
  std::string suite;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string descriptor;  // no commas
  Money value = 0;
  Rational reference;
  /// reference / max(value, 1)
  Rational ratio;
  TrialStatus status = TrialStatus::kOk;
};

enum class VerdictRule {
  kAtLeast,   // mean >= bound - tolerance * SE
  kTwoSided,  // |mean - bound| <= tolerance * SE
  kPerTrial,  // no trial may violate its hard check
};

struct ExperimentReport {
  std::string suite;
  Params params;
  std::size_t trials = 0;
  std::size_t completed = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  Rational mean;
  double sd = 0.0;
  double se = 0.0;
  /// Mean of the per-trial references.
  Rational bound;
  Rational max_ratio;
  VerdictRule rule = VerdictRule::kAtLeast;
  double tolerance = 3.0;
  bool pass = false;
  double wall_seconds = 0.0;
};

struct ExperimentResult {
  ExperimentReport report;
  std::vector<TrialRecord> records;
};

const std::vector<std::string>& suite_names();
VerdictRule suite_rule(const std::string& suite);  // throws kUnknownSuite

/// Throws kUnknownSuite, kInvalidParams for unknown or malformed params.
/// `workers` == 0 reads AUCTIONLAB_WORKERS, falling back to the processor
/// count.
ExperimentResult run_experiment(const std::string& suite, const Params& params, std::size_t trials,
                                std::uint64_t seed, std::size_t workers = 0);

/// Statistics and verdict from records alone (skipped trials are counted
/// but excluded from the statistics). Throws kEmptyStream when nothing is
/// left to summarize.
ExperimentReport summarize(const std::vector<TrialRecord>& records, double tolerance = 3.0);

std::string records_to_csv(const std::vector<TrialRecord>& records);
/// Throws kParse on malformed rows.
std::vector<TrialRecord> records_from_csv(std::istream& in);
Json report_to_json(const ExperimentReport& report);

std::string to_string(TrialStatus status);
std::string to_string(VerdictRule rule);

// --- Analytic references -----------------------------------------------------

/// sum_{s=1}^{n} (kn / (kn + 1))^s, exactly.
Rational ranking_kcopy_bound(std::size_t k, std::size_t n);
/// The same sum as a geometric series: kn (1 - (kn/(kn+1))^n).
double ranking_kcopy_closed_form(std::size_t k, std::size_t n);
/// (1/4) sum_{s=1}^{n} (2n / (2n + 1))^s.
Rational ranking_simulate_bound(std::size_t n);
/// 2 sqrt(e) / (sqrt(e) - 1).
double ranking_simulate_ratio();
/// (m + 1) / 2.
Rational greedy_chain_expectation(std::size_t m);

}  // namespace auctionlab
