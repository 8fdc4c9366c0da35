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

#include "auctionlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <thread>

#include "auctionlab/error.hpp"
#include "auctionlab/generators.hpp"
#include "auctionlab/offline.hpp"
#include "auctionlab/online.hpp"
#include "auctionlab/oracles.hpp"
#include "auctionlab/reductions.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {
namespace {

constexpr const char* kCsvHeader = "suite,trial,seed,descriptor,value,reference,ratio,status";

Rational ratio_of(const Rational& reference, Money value) {
  return reference / Rational(std::max<Money>(value, 1));
}

/// Typed access to a Params map that rejects keys the suite does not know.
class ParamReader {
 public:
  ParamReader(const std::string& suite, const Params& params, std::set<std::string> known)
      : params_(params) {
    for (const auto& [key, value] : params) {
      if (!known.contains(key)) {
        throw Error(ErrorCode::kInvalidParams, "suite " + suite + " has no parameter '" + key + "'");
      }
    }
  }

  std::size_t size(const std::string& key, std::size_t fallback) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(it->second, &used);
      if (used != it->second.size() || v < 0) throw std::invalid_argument(key);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParams, "parameter " + key + " must be a non-negative integer");
    }
  }

  double real(const std::string& key, double fallback) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParams, "parameter " + key + " must be a number");
    }
  }

 private:
  const Params& params_;
};

TrialRecord start_record(std::string suite, std::size_t trial, std::uint64_t seed, std::string descriptor) {
  TrialRecord r;
  r.suite = std::move(suite);
  r.trial = trial;
  r.seed = seed;
  r.descriptor = std::move(descriptor);
  return r;
}

using TrialFn = std::function<TrialRecord(std::size_t trial, std::uint64_t seed)>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, what);
}

TrialFn ranking_kcopy_suite(const Params& params) {
  const ParamReader in("ranking-kcopy", params, {"k", "n", "p"});
  const std::size_t k = in.size("k", 2);
  const std::size_t n = in.size("n", 6);
  const double p = in.real("p", 0.3);
  require(k >= 1 && n >= 1, "ranking-kcopy needs k >= 1 and n >= 1");
  const std::string desc = "k=" + std::to_string(k) + ";n=" + std::to_string(n);
  return [=](std::size_t trial, std::uint64_t seed) {
    const Instance g = random_perfect_matchable(n, p, seed);
    const LeftKCopy h = left_k_copy(g, k);
    RankingPolicy policy;
    const OnlineRun run = run_online(h.copy, policy, seed);
    TrialRecord r = start_record("ranking-kcopy", trial, seed, desc);
    r.value = static_cast<Money>(run.matching.size());
    r.reference = ranking_kcopy_bound(k, max_matching(g).size());
    r.status = is_valid_matching(h.copy, run.matching) ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn ranking_simulate_suite(const Params& params) {
  const ParamReader in("ranking-simulate", params, {"n", "p"});
  const std::size_t n = in.size("n", 8);
  const double p = in.real("p", 0.3);
  require(n >= 1, "ranking-simulate needs n >= 1");
  const std::string desc = "n=" + std::to_string(n);
  return [=](std::size_t trial, std::uint64_t seed) {
    const Instance g = random_perfect_matchable(n, p, seed);
    RankingSimulatePolicy policy;
    const OnlineRun run = run_online(g, policy, seed);
    TrialRecord r = start_record("ranking-simulate", trial, seed, desc);
    r.value = run.trace.total;
    r.reference = ranking_simulate_bound(max_matching(g).size());
    bool ok = static_cast<std::size_t>(r.value) <= policy.matched_count();
    for (std::size_t v = 0; v < g.num_bidders(); ++v) ok = ok && !(policy.matched()[v] && policy.reserved()[v]);
    r.status = ok ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn greedy_chain_suite(const Params& params) {
  const ParamReader in("greedy-chain", params, {"m"});
  const std::size_t m = in.size("m", 9);
  require(m >= 1, "greedy-chain needs m >= 1");
  const std::string desc = "m=" + std::to_string(m);
  return [=](std::size_t trial, std::uint64_t seed) {
    const ChainSample chain = sample_chain(m, ChainVariant::kNormal, seed);
    GreedyPolicy policy;
    TrialRecord r = start_record("greedy-chain", trial, seed, desc);
    r.value = run_online(chain.instance, policy, seed).trace.total;
    r.reference = greedy_chain_expectation(m);
    const Money witness = execute(chain.instance, *chain.witness).total;
    r.status = witness == static_cast<Money>(m) ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn reverse_match_suite(const Params& params) {
  const ParamReader in("reverse-match", params, {"max_keywords", "max_bidders", "p"});
  const std::size_t max_k = in.size("max_keywords", 10);
  const std::size_t max_b = in.size("max_bidders", 10);
  const double p = in.real("p", 0.3);
  require(max_k >= 1 && max_b >= 2, "reverse-match needs max_keywords >= 1 and max_bidders >= 2");
  return [=](std::size_t trial, std::uint64_t seed) {
    Rng rng = make_rng(seed, Stream::kInstance);
    const std::size_t nk = 1 + rng() % max_k;
    const std::size_t nb = 2 + rng() % (max_b - 1);
    const Instance instance = random_2pm(nk, nb, p, splitmix64(seed));
    TrialRecord r = start_record("reverse-match", trial, seed, "keywords=" + std::to_string(nk) + ";bidders=" + std::to_string(nb));
    const ReverseMatchResult rm = reverse_match(instance);
    r.value = rm.trace.total;
    try {
      r.reference = opt_2pm(instance).value;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      r.status = TrialStatus::kSkipped;
      return r;
    }
    r.ratio = ratio_of(r.reference, r.value);
    const auto half = static_cast<Money>((max_matching(instance).size() + 1) / 2);
    const bool ok = r.reference <= Rational(2 * r.value) && r.value >= half;
    r.status = ok ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn random_construction_suite(const Params& params) {
  const ParamReader in("random-construction", params, {"n", "max_bid", "target_r_min", "instance_seed"});
  const std::size_t n = in.size("n", 5);
  const auto max_bid = static_cast<Money>(in.size("max_bid", 6));
  const auto target = static_cast<Money>(in.size("target_r_min", 2));
  const std::uint64_t instance_seed = in.size("instance_seed", 1);
  require(n >= 2 && target >= 1, "random-construction needs n >= 2 and target_r_min >= 1");

  // One fixed instance and one fixed optimal first-price allocation shared
  // read-only by every trial.
  const Instance instance = random_2paa(n, n, max_bid, target, instance_seed);
  const Instance transformed = to_first_price_bids(instance);
  const FirstPriceAllocation alloc = normalize_first_price(transformed, opt_1paa(transformed).witness);
  const Rational reference = Rational(first_price_value(transformed, alloc)) / 8;
  const std::string desc = "n=" + std::to_string(n) + ";instance_seed=" + std::to_string(instance_seed);

  return [=](std::size_t trial, std::uint64_t seed) {
    const RandomConstructionResult rc = random_construction(instance, alloc, seed);
    TrialRecord r = start_record("random-construction", trial, seed, desc);
    r.value = rc.trace.total;
    r.reference = reference;
    bool ok = true;
    for (const TraceStep& step : rc.trace.steps) {
      if (const auto* a = std::get_if<Assign>(&step.action)) {
        ok = ok && step.price == transformed.bid(step.keyword, a->first);
      }
    }
    for (const BidderOutcome& o : rc.outcomes) {
      ok = ok && (o.over_budget ? 2 * o.kept_sum >= o.candidate_sum : o.kept_sum == o.candidate_sum);
    }
    r.status = ok ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn adversary_suite(const Params& params) {
  const ParamReader in("adversary", params, {"max_m"});
  const std::size_t max_m = in.size("max_m", 6);
  require(max_m >= 1, "adversary needs max_m >= 1");
  static const std::vector<std::string> kBattery = {"greedy", "skip-all", "first-available"};
  return [=](std::size_t trial, std::uint64_t seed) {
    const std::string& name = kBattery[trial % kBattery.size()];
    const std::size_t m = 1 + (trial / kBattery.size()) % max_m;
    auto policy = make_policy(name);
    const AdversaryTranscript t = adversary_vs_policy(*policy, m);
    TrialRecord r = start_record("adversary", trial, seed, "policy=" + name + ";m=" + std::to_string(m));
    r.value = t.policy_value;
    r.reference = opt_2pm(t.instance).value;
    r.ratio = ratio_of(r.reference, r.value);
    const bool ok = r.value <= 1 && r.reference == Rational(static_cast<Money>(m));
    r.status = ok ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn top_c_suite(const Params& params) {
  const ParamReader in("top-c", params, {"max_c", "max_keywords", "bidders", "max_bid"});
  const std::size_t max_c = in.size("max_c", 4);
  const std::size_t max_k = in.size("max_keywords", 10);
  const std::size_t nb = in.size("bidders", 5);
  const auto max_bid = static_cast<Money>(in.size("max_bid", 5));
  require(max_c >= 1 && max_k >= max_c && nb >= 2, "top-c needs 1 <= max_c <= max_keywords and bidders >= 2");
  return [=](std::size_t trial, std::uint64_t seed) {
    const std::size_t c = 1 + trial % max_c;
    Rng rng = make_rng(seed, Stream::kInstance);
    const std::size_t m = c + rng() % (max_k - c + 1);
    const Instance instance = random_2paa(m, nb, max_bid, static_cast<Money>(c), splitmix64(seed));
    const TopCResult res = top_c(instance, c);
    TrialRecord r = start_record("top-c", trial, seed, "c=" + std::to_string(c) + ";m=" + std::to_string(m));
    r.value = res.trace.total;
    r.reference = Rational(checked_mul(static_cast<Money>(c), second_bid_upper_bound(instance))) /
                  Rational(static_cast<Money>(m));
    bool ok = res.precondition_met && Rational(r.value) >= r.reference;
    for (KeywordIndex u : res.chosen) ok = ok && res.trace.steps[u].price == second_highest_bid(instance, u);
    r.status = ok ? TrialStatus::kOk : TrialStatus::kViolation;
    return r;
  };
}

TrialFn make_suite(const std::string& suite, const Params& params) {
  if (suite == "ranking-kcopy") return ranking_kcopy_suite(params);
  if (suite == "ranking-simulate") return ranking_simulate_suite(params);
  if (suite == "greedy-chain") return greedy_chain_suite(params);
  if (suite == "reverse-match") return reverse_match_suite(params);
  if (suite == "random-construction") return random_construction_suite(params);
  if (suite == "adversary") return adversary_suite(params);
  if (suite == "top-c") return top_c_suite(params);
  throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + suite + "'");
}

std::size_t worker_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("AUCTIONLAB_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream s(line);
  while (std::getline(s, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  for (const std::string& pair : split(text, ',')) {
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::kInvalidParams, "expected key=value, got '" + pair + "'");
    }
    out[pair.substr(0, eq)] = pair.substr(eq + 1);
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ranking-kcopy", "ranking-simulate", "greedy-chain",
                                                 "reverse-match", "random-construction", "adversary",
                                                 "top-c"};
  return names;
}

VerdictRule suite_rule(const std::string& suite) {
  if (suite == "ranking-kcopy" || suite == "ranking-simulate" || suite == "random-construction") {
    return VerdictRule::kAtLeast;
  }
  if (suite == "greedy-chain") return VerdictRule::kTwoSided;
  if (suite == "reverse-match" || suite == "adversary" || suite == "top-c") return VerdictRule::kPerTrial;
  throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + suite + "'");
}

ExperimentResult run_experiment(const std::string& suite, const Params& params, std::size_t trials,
                                std::uint64_t seed, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  suite_rule(suite);
  const TrialFn run_trial = make_suite(suite, params);
  if (trials == 0) throw Error(ErrorCode::kEmptyStream, "no trials requested");

  std::vector<TrialRecord> records(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next++; i < trials && !failed; i = next++) {
      try {
        records[i] = run_trial(i, seed ^ static_cast<std::uint64_t>(i));
        if (records[i].status != TrialStatus::kSkipped && records[i].ratio == 0) {
          records[i].ratio = ratio_of(records[i].reference, records[i].value);
        }
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const std::size_t n = std::min(worker_count(workers), trials);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  ExperimentResult out;
  out.records = std::move(records);
  out.report = summarize(out.records);
  out.report.params = params;
  out.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ExperimentReport summarize(const std::vector<TrialRecord>& records, double tolerance) {
  if (records.empty()) throw Error(ErrorCode::kEmptyStream, "no records to summarize");
  ExperimentReport rep;
  rep.suite = records.front().suite;
  rep.rule = suite_rule(rep.suite);
  rep.tolerance = tolerance;
  rep.trials = records.size();

  boost::multiprecision::cpp_int sum = 0;
  boost::multiprecision::cpp_int sum_sq = 0;
  Rational ref_sum = 0;
  for (const TrialRecord& r : records) {
    if (r.suite != rep.suite) throw Error(ErrorCode::kInvalidParams, "records mix several suites");
    if (r.status == TrialStatus::kSkipped) {
      ++rep.skipped;
      continue;
    }
    if (r.status == TrialStatus::kViolation) ++rep.violations;
    ++rep.completed;
    sum += r.value;
    sum_sq += boost::multiprecision::cpp_int(r.value) * r.value;
    ref_sum += r.reference;
    rep.max_ratio = std::max(rep.max_ratio, r.ratio);
  }
  if (rep.completed == 0) throw Error(ErrorCode::kEmptyStream, "every trial was skipped");

  const boost::multiprecision::cpp_int n = rep.completed;
  rep.mean = Rational(sum) / Rational(n);
  rep.bound = ref_sum / Rational(n);
  if (rep.completed > 1) {
    const Rational var = Rational(n * sum_sq - sum * sum) / Rational(n * (n - 1));
    rep.sd = std::sqrt(to_double(var));
    rep.se = rep.sd / std::sqrt(static_cast<double>(rep.completed));
  }

  const Rational diff = rep.mean - rep.bound;
  const double slack = rep.tolerance * rep.se;
  bool stat_ok = true;
  switch (rep.rule) {
    case VerdictRule::kAtLeast:
      stat_ok = diff >= 0 || to_double(diff) >= -slack;
      break;
    case VerdictRule::kTwoSided:
      stat_ok = diff == 0 || std::abs(to_double(diff)) <= slack;
      break;
    case VerdictRule::kPerTrial:
      break;
  }
  rep.pass = stat_ok && rep.violations == 0;
  return rep;
}

std::string to_string(TrialStatus status) {
  switch (status) {
    case TrialStatus::kOk: return "ok";
    case TrialStatus::kViolation: return "violation";
    case TrialStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::string to_string(VerdictRule rule) {
  switch (rule) {
    case VerdictRule::kAtLeast: return "mean >= bound - tolerance*SE";
    case VerdictRule::kTwoSided: return "|mean - bound| <= tolerance*SE";
    case VerdictRule::kPerTrial: return "no per-trial violations";
  }
  return "?";
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const TrialRecord& r : records) {
    out << r.suite << ',' << r.trial << ',' << r.seed << ',' << r.descriptor << ',' << r.value << ','
        << to_string(r.reference) << ',' << to_string(r.ratio) << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

std::vector<TrialRecord> records_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorCode::kParse, "missing or unexpected CSV header");
  }
  std::vector<TrialRecord> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw Error(ErrorCode::kParse, "row " + std::to_string(row) + ": expected 8 fields");
    try {
      TrialRecord r;
      r.suite = f[0];
      r.trial = std::stoull(f[1]);
      r.seed = std::stoull(f[2]);
      r.descriptor = f[3];
      r.value = std::stoll(f[4]);
      r.reference = parse_rational(f[5]);
      r.ratio = parse_rational(f[6]);
      if (f[7] == "ok") {
        r.status = TrialStatus::kOk;
      } else if (f[7] == "violation") {
        r.status = TrialStatus::kViolation;
      } else if (f[7] == "skipped") {
        r.status = TrialStatus::kSkipped;
      } else {
        throw Error(ErrorCode::kParse, "unknown status '" + f[7] + "'");
      }
      out.push_back(std::move(r));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kParse, "row " + std::to_string(row) + ": " + e.what());
    }
  }
  return out;
}

Json report_to_json(const ExperimentReport& rep) {
  Json doc;
  doc["suite"] = rep.suite;
  Json params = Json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  doc["params"] = params;
  doc["trials"] = rep.trials;
  doc["completed"] = rep.completed;
  doc["skipped"] = rep.skipped;
  doc["violations"] = rep.violations;
  doc["mean"] = to_string(rep.mean);
  doc["mean_approx"] = to_double(rep.mean);
  doc["sd"] = rep.sd;
  doc["se"] = rep.se;
  doc["bound"] = to_string(rep.bound);
  doc["bound_approx"] = to_double(rep.bound);
  doc["max_ratio"] = to_string(rep.max_ratio);
  doc["rule"] = to_string(rep.rule);
  doc["tolerance"] = rep.tolerance;
  if (rep.suite == "ranking-simulate") doc["competitive_ratio"] = ranking_simulate_ratio();
  doc["verdict"] = rep.pass ? "pass" : "fail";
  doc["wall_seconds"] = rep.wall_seconds;
  return doc;
}

Rational ranking_kcopy_bound(std::size_t k, std::size_t n) {
  const auto kn = static_cast<Money>(k * n);
  const Rational r = Rational(kn) / Rational(kn + 1);
  Rational sum = 0;
  Rational term = 1;
  for (std::size_t s = 1; s <= n; ++s) {
    term *= r;
    sum += term;
  }
  return sum;
}

double ranking_kcopy_closed_form(std::size_t k, std::size_t n) {
  const double kn = static_cast<double>(k * n);
  return kn * (1.0 - std::pow(kn / (kn + 1.0), static_cast<double>(n)));
}

Rational ranking_simulate_bound(std::size_t n) { return ranking_kcopy_bound(2, n) / 4; }

double ranking_simulate_ratio() {
  const double root_e = std::sqrt(std::exp(1.0));
  return 2.0 * root_e / (root_e - 1.0);
}

Rational greedy_chain_expectation(std::size_t m) { return Rational(static_cast<Money>(m) + 1) / 2; }

}  // namespace auctionlab
