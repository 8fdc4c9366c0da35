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

#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "auctionlab/auction.hpp"
#include "auctionlab/error.hpp"
#include "auctionlab/generators.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/io.hpp"
#include "brute_force.hpp"

using namespace auctionlab;

namespace {

// A(8; bid 4), B(8; bid 3) on a single keyword.
Instance single_keyword() {
  InstanceBuilder b;
  b.add_keyword("u");
  b.add_bidder("A", 8);
  b.add_bidder("B", 8);
  b.set_bid("u", "A", 4);
  b.set_bid("u", "B", 3);
  return b.build();
}

// u1, u2; A (budget 4, bids 4, 4), B (budget 3, bids 3, 3).
Instance two_keywords() {
  InstanceBuilder b;
  b.add_keyword("u1");
  b.add_keyword("u2");
  b.add_bidder("A", 4);
  b.add_bidder("B", 3);
  for (const char* u : {"u1", "u2"}) {
    b.set_bid(u, "A", 4);
    b.set_bid(u, "B", 3);
  }
  return b.build();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an auctionlab::Error");
  return ErrorCode::kParse;
}

}  // namespace

TEST_CASE("effective bid truncates at the remaining budget") {
  CHECK(effective_bid(6, 3) == 3);
  CHECK(effective_bid(4, 10) == 4);
  CHECK(effective_bid(5, 0) == 0);
}

TEST_CASE("assign prices at the second bid and charges only the winner") {
  const Instance in = single_keyword();
  const std::vector<Action> actions = {Assign{0, 1}};
  const AuctionTrace t = execute(in, actions);
  CHECK(t.steps[0].price == 3);
  CHECK(t.total == 3);
  CHECK(t.final_budgets == std::vector<Money>{5, 8});
}

TEST_CASE("all-skip leaves budgets untouched") {
  const Instance in = two_keywords();
  const AuctionTrace t = execute(in, all_skip(in));
  CHECK(t.total == 0);
  CHECK(t.final_budgets == in.initial_budgets());
}

TEST_CASE("second keyword sees the truncated bid of the first winner") {
  const Instance in = two_keywords();
  const std::vector<Action> actions = {Assign{0, 1}, Assign{1, 0}};
  const AuctionTrace t = execute(in, actions);
  CHECK(t.steps[0].price == 3);
  CHECK(t.steps[1].price == 1);
  CHECK(t.total == 4);
  CHECK(bf::replay(in, {{0, 1}, {1, 0}}) == 4);
}

TEST_CASE("execute rejects bad actions") {
  const Instance in = single_keyword();
  CHECK(code_of([&] {
          const std::vector<Action> a = {Assign{1, 0}};
          execute(in, a);
        }) == ErrorCode::kOrderingViolation);
  CHECK(code_of([&] {
          const std::vector<Action> a = {Assign{0, 0}};
          execute(in, a);
        }) == ErrorCode::kSameBidder);
  CHECK(code_of([&] {
          const std::vector<Action> a = {Assign{0, 7}};
          execute(in, a);
        }) == ErrorCode::kUnknownId);
  CHECK(code_of([&] {
          const std::vector<Action> a = {};
          execute(in, a);
        }) == ErrorCode::kInvalidParams);
}

TEST_CASE("ties may be ordered either way") {
  InstanceBuilder b;
  b.add_keyword("u");
  b.add_bidder("A", 5);
  b.add_bidder("B", 5);
  b.set_bid(0, 0, 5);
  b.set_bid(0, 1, 5);
  const Instance in = b.build();
  const std::vector<Action> ab = {Assign{0, 1}};
  const std::vector<Action> ba = {Assign{1, 0}};
  CHECK(execute(in, ab).total == 5);
  CHECK(execute(in, ba).total == 5);
}

TEST_CASE("zero second bid is legal and free") {
  InstanceBuilder b;
  b.add_keyword("u");
  b.add_bidder("A", 5);
  b.add_bidder("B", 5);
  b.set_bid(0, 0, 2);
  const Instance in = b.build();
  const std::vector<Action> a = {Assign{0, 1}};
  const auto t = execute(in, a);
  CHECK(t.total == 0);
  CHECK(t.final_budgets[0] == 5);
}

TEST_CASE("validate reports violations and degree warnings") {
  CHECK(validate(single_keyword()).ok());
  CHECK(validate(single_keyword()).warnings.empty());

  InstanceBuilder b;
  b.add_keyword("u");
  b.add_bidder("A", 5);
  b.add_bidder("B", 9);
  b.set_bid(0, 0, 9);
  const auto over = validate(b.build());
  REQUIRE(over.violations.size() == 1);
  CHECK(over.violations[0].kind == FindingKind::kBidExceedsBudget);

  const Instance dup({"u", "u"}, {{"A", 1}, {"A", -1}}, {0, 0, 0, -2});
  const auto bad = validate(dup);
  auto has = [&](FindingKind k) {
    return std::any_of(bad.violations.begin(), bad.violations.end(), [&](const Finding& f) { return f.kind == k; });
  };
  CHECK(has(FindingKind::kDuplicateKeywordId));
  CHECK(has(FindingKind::kDuplicateBidderId));
  CHECK(has(FindingKind::kNegativeBudget));
  CHECK(has(FindingKind::kNegativeBid));

  const auto lone = validate(make_all_ones(2, {{0, 1}, {1}}));
  CHECK(lone.ok());
  REQUIRE(lone.warnings.size() == 1);
  CHECK(lone.warnings[0].kind == FindingKind::kLowDegreeKeyword);
}

TEST_CASE("r_min") {
  InstanceBuilder b;
  b.add_keyword("u1");
  b.add_keyword("u2");
  b.add_bidder("A", 10);
  b.set_bid(0, 0, 5);
  b.set_bid(1, 0, 2);
  CHECK(r_min(b.build()) == 2);
  CHECK(r_min(make_all_ones(2, {{0, 1}})) == 1);
  CHECK(r_min(gap_instance(2, 5)) >= 2);
  CHECK(code_of([] { r_min(make_all_ones(2, {{}})); }) == ErrorCode::kNoPositiveBids);
  const Instance half({"u"}, {{"A", 3}}, {2});
  CHECK(r_min(half) == Rational(3) / 2);
}

TEST_CASE("second highest bid counts ties") {
  const Instance in({"u1", "u2"}, {{"A", 9}, {"B", 9}, {"C", 9}}, {4, 3, 0, 5, 5, 1});
  CHECK(second_highest_bid(in, 0) == 3);
  CHECK(second_highest_bid(in, 1) == 5);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  const Money big = std::numeric_limits<Money>::max();
  CHECK(code_of([&] { checked_add(big, 1); }) == ErrorCode::kOverflow);
  CHECK(code_of([&] { checked_mul(big / 2 + 1, 2); }) == ErrorCode::kOverflow);
  CHECK(code_of([&] { checked_sub(std::numeric_limits<Money>::min(), 1); }) == ErrorCode::kOverflow);
  CHECK(checked_mul(1 << 20, 1 << 20) == Money{1} << 40);
}

TEST_CASE("rationals serialize as p/q") {
  CHECK(to_string(Rational(3) / 6) == "1/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(parse_rational("6/4") == Rational(3) / 2);
  CHECK(parse_rational("7") == 7);
  CHECK(code_of([] { parse_rational("x/2"); }) == ErrorCode::kParse);
}

TEST_CASE("instance and trace documents round-trip") {
  const Instance in = two_keywords();
  const Json doc = instance_to_json(in);
  const Instance back = instance_from_json(doc);
  CHECK(instance_to_json(back) == doc);

  const std::vector<Action> actions = {Assign{0, 1}, Assign{1, 0}};
  const AuctionTrace t = execute(in, actions);
  const Json tdoc = trace_to_json(in, t);
  CHECK(tdoc["total"] == 4);
  CHECK(actions_from_json(in, tdoc) == actions);
}

TEST_CASE("instance documents reject floats, overflow and unknown ids") {
  auto parse = [](const char* text) { return instance_from_json(Json::parse(text)); };
  CHECK(code_of([&] {
          parse(R"({"keywords":["u"],"bidders":[{"id":"A","budget":1.5}],"bids":[]})");
        }) == ErrorCode::kParse);
  CHECK(code_of([&] {
          parse(R"({"keywords":["u"],"bidders":[{"id":"A","budget":99999999999999999999}],"bids":[]})");
        }) == ErrorCode::kOverflow);
  CHECK(code_of([&] {
          parse(R"({"keywords":["u"],"bidders":[{"id":"A","budget":1}],"bids":[{"keyword":"u","bidder":"Z","amount":1}]})");
        }) == ErrorCode::kUnknownId);
  CHECK(code_of([&] { parse(R"({"bidders":[]})"); }) == ErrorCode::kParse);
}

TEST_CASE("edge lists round-trip and reject non-simple graphs") {
  std::istringstream in("# triangle\n0 1\n1 2\n\n2 0\n");
  const Graph g = read_edge_list(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream again(out.str());
  CHECK(read_edge_list(again).edges == g.edges);

  std::istringstream loop("a a\n");
  CHECK(code_of([&] { read_edge_list(loop); }) == ErrorCode::kInvalidParams);
  std::istringstream twice("a b\nb a\n");
  CHECK(code_of([&] { read_edge_list(twice); }) == ErrorCode::kInvalidParams);
}

// Property: for random instances and random legal action lists, budgets are
// conserved, prices never exceed either effective bid, and the total is the
// sum of the per-step prices.
TEST_CASE("execute invariants on random action lists") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance in = random_2paa(1 + rng() % 6, 2 + rng() % 4, 6, 1, rng());
    const std::size_t n = in.num_bidders();
    BudgetState state(in);
    std::vector<Action> actions;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (KeywordIndex u = 0; u < in.num_keywords(); ++u) {
      const std::size_t a = rng() % n;
      const std::size_t b = (a + 1 + rng() % (n - 1)) % n;
      Action act = Skip{};
      if (rng() % 4 != 0) {
        act = state.effective_bid(u, a) >= state.effective_bid(u, b) ? Assign{a, b} : Assign{b, a};
      }
      const Money ea = state.effective_bid(u, a);
      const Money eb = state.effective_bid(u, b);
      const Money price = state.apply(u, act);
      CHECK(price <= std::max(ea, eb));
      CHECK(price <= std::min(ea, eb));
      actions.push_back(act);
      if (const auto* x = std::get_if<Assign>(&act)) {
        pairs.emplace_back(x->first, x->second);
      } else {
        pairs.emplace_back(0, 0);
      }
    }
    const AuctionTrace t = execute(in, actions);
    Money sum = 0;
    std::vector<Money> charged(n, 0);
    for (const auto& s : t.steps) {
      sum += s.price;
      if (const auto* x = std::get_if<Assign>(&s.action)) charged[x->first] += s.price;
    }
    CHECK(sum == t.total);
    CHECK(bf::replay(in, pairs) == t.total);
    for (BidderIndex v = 0; v < n; ++v) {
      CHECK(t.final_budgets[v] == in.budget(v) - charged[v]);
      CHECK(t.final_budgets[v] <= in.budget(v));
    }
    CHECK(execute(in, actions).total == t.total);
  }
}
