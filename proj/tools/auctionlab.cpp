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

// auctionlab: command-line front end.
//
//   solve       run an offline or online algorithm on an instance file
//   oracle      exact optimum / matching / upper bound of an instance file
//   generate    write an instance from one of the generator families
//   reduce      build a reduction gadget (PARTITION or vertex cover)
//   experiment  run a Monte-Carlo suite and report a verdict
//   validate    check an instance file
//
// Exit status: 0 success (or verdict pass), 1 verdict fail or invalid
// instance, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/generators.hpp"
#include "auctionlab/harness.hpp"
#include "auctionlab/io.hpp"
#include "auctionlab/offline.hpp"
#include "auctionlab/online.hpp"
#include "auctionlab/oracles.hpp"
#include "auctionlab/reductions.hpp"

namespace al = auctionlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string out;
  std::string format = "structured";
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, Common& c, bool with_input) {
  if (with_input) cmd->add_option("--input", c.input, "Instance file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "structured"}));
  cmd->add_option("--seed", c.seed, "Seed for randomized paths");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    al::write_text_file(c.out, text);
  }
}

void merge(al::Json& into, const al::Json& from) {
  for (const auto& item : from.items()) into[item.key()] = item.value();
}

std::string dump(const al::Json& doc) { return doc.dump(2) + "\n"; }

std::uint64_t need_seed(const Common& c, const std::string& what) {
  if (!c.seed) throw UsageError(what + " is randomized and needs --seed");
  return *c.seed;
}

std::string trace_csv(const al::Instance& in, const al::AuctionTrace& trace) {
  std::ostringstream out;
  out << "keyword,first,second,price\n";
  for (const auto& s : trace.steps) {
    out << in.keyword_id(s.keyword) << ',';
    if (const auto* a = std::get_if<al::Assign>(&s.action)) {
      out << in.bidder(a->first).id << ',' << in.bidder(a->second).id;
    } else {
      out << ',';
    }
    out << ',' << s.price << '\n';
  }
  return out.str();
}

std::string matching_csv(const al::Instance& in, const al::Matching& m) {
  std::ostringstream out;
  out << "keyword,bidder\n";
  for (al::KeywordIndex u = 0; u < m.bidder_of.size(); ++u) {
    if (m.bidder_of[u]) out << in.keyword_id(u) << ',' << in.bidder(*m.bidder_of[u]).id << '\n';
  }
  return out.str();
}

void emit_trace(const Common& c, const al::Instance& in, const al::AuctionTrace& trace, al::Json extra) {
  if (c.format == "csv") {
    emit(c, trace_csv(in, trace));
    return;
  }
  merge(extra, al::trace_to_json(in, trace));
  emit(c, dump(extra));
}

void emit_matching(const Common& c, const al::Instance& in, const al::Matching& m, al::Json extra) {
  if (c.format == "csv") {
    emit(c, matching_csv(in, m));
    return;
  }
  merge(extra, al::matching_to_json(in, m));
  emit(c, dump(extra));
}

al::Instance load_instance(const std::string& path) { return al::instance_from_json(al::read_json_file(path)); }

// --- solve ---------------------------------------------------------------------

struct SolveArgs {
  Common common;
  std::string algorithm;
  std::size_t c = 1;
  std::size_t k = 1;
};

int run_solve(const SolveArgs& a) {
  const al::Instance original = load_instance(a.common.input);
  if (a.algorithm == "top-c") {
    const auto res = al::top_c(original, a.c);
    if (!res.precondition_met) std::cerr << "warning: r_min < c; bids may be truncated\n";
    emit_trace(a.common, original, res.trace,
               {{"algorithm", "top-c"}, {"c", a.c}, {"precondition_met", res.precondition_met}});
    return 0;
  }
  if (a.algorithm == "reverse-match") {
    const auto res = al::reverse_match(original);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    emit_trace(a.common, original, res.trace, {{"algorithm", "reverse-match"}});
    return 0;
  }

  const al::LeftKCopy copy = al::left_k_copy(original, a.k);
  const al::Instance& in = copy.copy;
  auto policy = al::make_policy(a.algorithm);
  const std::uint64_t seed = policy->deterministic() ? a.common.seed.value_or(0) : need_seed(a.common, a.algorithm);
  const al::OnlineRun run = al::run_online(in, *policy, seed);
  al::Json extra = {{"algorithm", a.algorithm}, {"k", a.k}, {"seed", seed}};
  if (a.algorithm == "ranking") {
    emit_matching(a.common, in, run.matching, extra);
  } else {
    emit_trace(a.common, in, run.trace, extra);
  }
  return 0;
}

// --- oracle --------------------------------------------------------------------

struct OracleArgs {
  Common common;
  std::string kind;
  std::uint64_t max_nodes = al::SearchLimits{}.max_nodes;
};

int run_oracle(const OracleArgs& a) {
  const al::Instance in = load_instance(a.common.input);
  const al::SearchLimits limits{a.max_nodes};
  if (a.kind == "2pm" || a.kind == "2paa") {
    const auto res = a.kind == "2pm" ? al::opt_2pm(in, limits) : al::opt_2paa(in, limits);
    emit_trace(a.common, in, res.witness, {{"kind", a.kind}, {"value", res.value}, {"nodes", res.nodes}});
  } else if (a.kind == "1paa") {
    const auto res = al::opt_1paa(in, limits);
    al::Json doc = {{"kind", a.kind}, {"value", res.value}, {"nodes", res.nodes}};
    merge(doc, al::allocation_to_json(in, res.witness));
    emit(a.common, dump(doc));
  } else if (a.kind == "matching") {
    const auto m = al::max_matching(in);
    emit_matching(a.common, in, m, {{"kind", a.kind}, {"value", m.size()}});
  } else {
    emit(a.common, dump({{"kind", a.kind}, {"value", al::second_bid_upper_bound(in)}}));
  }
  return 0;
}

// --- generate ------------------------------------------------------------------

struct GenerateArgs {
  Common common;
  std::string family;
  std::string params;
  std::string witness;
};

class Knobs {
 public:
  Knobs(const std::string& family, const std::string& text, std::set<std::string> known)
      : params_(al::parse_params(text)) {
    for (const auto& [k, v] : params_) {
      if (!known.contains(k)) throw UsageError("family " + family + " has no parameter '" + k + "'");
    }
  }
  long long integer(const std::string& key, long long fallback) const {
    const auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw UsageError("parameter " + key + " must be an integer");
    return v;
  }
  double real(const std::string& key, double fallback) const {
    const auto it = params_.find(key);
    return it == params_.end() ? fallback : std::stod(it->second);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

 private:
  al::Params params_;
};

std::size_t non_negative(long long v, const std::string& what) {
  if (v < 0) throw UsageError(what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

int run_generate(const GenerateArgs& a) {
  al::Instance instance;
  std::optional<al::AuctionTrace> witness;
  al::Json meta = {{"family", a.family}};
  if (a.family == "gap") {
    const Knobs p(a.family, a.params, {"c", "k"});
    instance = al::gap_instance(p.integer("c", 2), p.integer("k", 4));
    witness = al::execute(instance, al::gap_replay_actions(instance));
  } else if (a.family == "adversary") {
    const Knobs p(a.family, a.params, {"policy", "m"});
    auto policy = al::make_policy(p.text("policy", "greedy"));
    const auto t = al::adversary_vs_policy(*policy, non_negative(p.integer("m", 5), "m"));
    instance = t.instance;
    witness = t.policy_trace;
    meta["policy_value"] = t.policy_value;
    if (t.switch_step) meta["switch_keyword"] = instance.keyword_id(*t.switch_step);
  } else if (a.family == "chain") {
    const Knobs p(a.family, a.params, {"m", "variant"});
    const std::string variant = p.text("variant", "normal");
    if (variant != "normal" && variant != "restricted") throw UsageError("variant must be normal or restricted");
    const auto sample = al::sample_chain(non_negative(p.integer("m", 9), "m"),
                                         variant == "normal" ? al::ChainVariant::kNormal : al::ChainVariant::kRestricted,
                                         need_seed(a.common, "chain"));
    instance = sample.instance;
    if (sample.witness) witness = al::execute(instance, *sample.witness);
  } else if (a.family == "random-2pm") {
    const Knobs p(a.family, a.params, {"keywords", "bidders", "p"});
    instance = al::random_2pm(non_negative(p.integer("keywords", 8), "keywords"),
                              non_negative(p.integer("bidders", 8), "bidders"), p.real("p", 0.3),
                              need_seed(a.common, "random-2pm"));
  } else if (a.family == "random-2paa") {
    const Knobs p(a.family, a.params, {"keywords", "bidders", "max_bid", "target_r_min"});
    instance = al::random_2paa(non_negative(p.integer("keywords", 6), "keywords"),
                               non_negative(p.integer("bidders", 4), "bidders"), p.integer("max_bid", 10),
                               p.integer("target_r_min", 1), need_seed(a.common, "random-2paa"));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  emit(a.common, dump(al::instance_to_json(instance)));
  if (!a.witness.empty()) {
    if (!witness) throw UsageError("family " + a.family + " has no witness trace");
    al::Json doc = meta;
    merge(doc, al::trace_to_json(instance, *witness));
    al::write_text_file(a.witness, dump(doc));
  }
  return 0;
}

// --- reduce --------------------------------------------------------------------

struct ReduceArgs {
  Common common;
  std::string from;
  std::string weights;
  long long c = 1;
  std::string graph;
  std::string roles;
};

int run_reduce(const ReduceArgs& a) {
  al::Json roles;
  al::Instance instance;
  if (a.from == "partition") {
    std::vector<al::Money> w;
    std::stringstream s(a.weights);
    std::string item;
    while (std::getline(s, item, ',')) {
      std::size_t used = 0;
      w.push_back(std::stoll(item, &used));
      if (used != item.size()) throw UsageError("weights must be integers");
    }
    const auto gadget = al::partition_to_2paa(w, a.c);
    instance = gadget.instance;
    roles = al::partition_bookkeeping(gadget);
  } else if (a.from == "vertex-cover") {
    if (a.graph.empty()) throw UsageError("--graph is required for vertex-cover");
    std::ifstream in(a.graph);
    if (!in) throw UsageError("cannot open " + a.graph);
    const auto gadget = al::vc_to_2pm(al::read_edge_list(in));
    instance = gadget.instance;
    roles = al::vc_bookkeeping(gadget);
  } else {
    throw UsageError("--from must be partition or vertex-cover");
  }
  emit(a.common, dump(al::instance_to_json(instance)));
  const std::string roles_path = !a.roles.empty() ? a.roles : (a.common.out.empty() ? "" : a.common.out + ".roles.json");
  if (roles_path.empty()) {
    std::cerr << dump(roles);
  } else {
    al::write_text_file(roles_path, dump(roles));
  }
  return 0;
}

// --- experiment ----------------------------------------------------------------

struct ExperimentArgs {
  Common common;
  std::string suite;
  std::size_t trials = 1000;
  std::string params;
  std::string report;
  std::size_t workers = 0;
  double tolerance = 3.0;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const auto seed = need_seed(a.common, "experiment");
  auto result = al::run_experiment(a.suite, al::parse_params(a.params), a.trials, seed, a.workers);
  if (a.tolerance != 3.0) {
    const double wall = result.report.wall_seconds;
    const auto params = result.report.params;
    result.report = al::summarize(result.records, a.tolerance);
    result.report.wall_seconds = wall;
    result.report.params = params;
  }
  const al::Json report = al::report_to_json(result.report);
  if (a.common.format == "csv") {
    emit(a.common, al::records_to_csv(result.records));
    if (!a.report.empty()) al::write_text_file(a.report, dump(report));
  } else {
    emit(a.common, dump(report));
  }
  std::cerr << a.suite << ": " << (result.report.pass ? "PASS" : "FAIL") << " mean=" << al::to_double(result.report.mean)
            << " bound=" << al::to_double(result.report.bound) << " se=" << result.report.se
            << " violations=" << result.report.violations << " skipped=" << result.report.skipped << "\n";
  return result.report.pass ? 0 : kExitFail;
}

// --- validate ------------------------------------------------------------------

int run_validate(const Common& c) {
  const al::Instance in = load_instance(c.input);
  const auto report = al::validate(in);
  auto list = [](const std::vector<al::Finding>& findings) {
    al::Json out = al::Json::array();
    for (const auto& f : findings) out.push_back(f.message);
    return out;
  };
  al::Json doc = {{"ok", report.ok()},
                  {"keywords", in.num_keywords()},
                  {"bidders", in.num_bidders()},
                  {"violations", list(report.violations)},
                  {"warnings", list(report.warnings)}};
  try {
    doc["r_min"] = al::to_string(al::r_min(in));
  } catch (const al::Error&) {
    doc["r_min"] = nullptr;
  }
  emit(c, dump(doc));
  return report.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second-price ad auctions: solvers, oracles, gadgets and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "auctionlab 0.1.0");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run an algorithm on an instance");
  add_common(solve_cmd, solve.common, true);
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->required()
      ->check(CLI::IsMember({"top-c", "reverse-match", "greedy", "first-available", "skip-all", "ranking",
                             "ranking-simulate"}));
  solve_cmd->add_option("--c", solve.c, "TopC parameter")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k", solve.k, "Left k-copy before an online run")->check(CLI::PositiveNumber);

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact reference values");
  add_common(oracle_cmd, oracle.common, true);
  oracle_cmd->add_option("--kind", oracle.kind)
      ->required()
      ->check(CLI::IsMember({"2pm", "2paa", "1paa", "matching", "upper-bound"}));
  oracle_cmd->add_option("--max-nodes", oracle.max_nodes, "Search state limit");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate an instance");
  add_common(gen_cmd, gen.common, false);
  gen_cmd->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"gap", "adversary", "chain", "random-2pm", "random-2paa"}));
  gen_cmd->add_option("--params", gen.params, "k=v,... family parameters");
  gen_cmd->add_option("--witness", gen.witness, "Write the family's reference trace here");

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Build a reduction gadget");
  add_common(red_cmd, red.common, false);
  red_cmd->add_option("--from", red.from)->required()->check(CLI::IsMember({"partition", "vertex-cover"}));
  red_cmd->add_option("--weights", red.weights, "Comma-separated PARTITION weights");
  red_cmd->add_option("--c", red.c, "Bid-to-budget parameter");
  red_cmd->add_option("--graph", red.graph, "Edge-list file")->check(CLI::ExistingFile);
  red_cmd->add_option("--roles", red.roles, "Where to write the role bookkeeping document");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte-Carlo suite");
  add_common(exp_cmd, exp.common, false);
  exp_cmd->add_option("--suite", exp.suite)->required()->check(CLI::IsMember(al::suite_names()));
  exp_cmd->add_option("--trials", exp.trials)->check(CLI::PositiveNumber);
  exp_cmd->add_option("--params", exp.params, "k=v,... suite parameters");
  exp_cmd->add_option("--report", exp.report, "Summary document when --format csv");
  exp_cmd->add_option("--workers", exp.workers, "Worker threads (default: AUCTIONLAB_WORKERS or all cores)");
  exp_cmd->add_option("--tolerance", exp.tolerance, "SE multiple for statistical verdicts");

  Common val;
  auto* val_cmd = app.add_subcommand("validate", "Check an instance file");
  add_common(val_cmd, val, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*oracle_cmd) return run_oracle(oracle);
    if (*gen_cmd) return run_generate(gen);
    if (*red_cmd) return run_reduce(red);
    if (*exp_cmd) return run_experiment_cmd(exp);
    if (*val_cmd) return run_validate(val);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const al::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
