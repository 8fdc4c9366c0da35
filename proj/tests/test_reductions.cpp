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

#include <random>

#include "auctionlab/error.hpp"
#include "auctionlab/generators.hpp"
#include "auctionlab/offline.hpp"
#include "auctionlab/online.hpp"
#include "auctionlab/oracles.hpp"
#include "auctionlab/reductions.hpp"
#include "brute_force.hpp"

using namespace auctionlab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an auctionlab::Error");
  return ErrorCode::kParse;
}

void check_extraction(const VcGadget& g, std::span<const Action> actions) {
  const CoverExtraction x = extract_vertex_cover(g, actions);
  const std::size_t nv = g.graph.num_vertices();
  const std::size_t ne = g.graph.num_edges();
  CHECK(is_vertex_cover(g.graph, x.cover));
  CHECK(x.normalized.total >= x.input_value);
  CHECK(static_cast<std::size_t>(x.normalized.total) == 2 * nv + ne - x.cover.size());
  for (KeywordIndex e : g.edge_keywords) CHECK(x.normalized.steps[e].price == 1);
}

}  // namespace

TEST_CASE("partition gadget shape") {
  const std::vector<Money> w = {1, 1};
  const PartitionGadget g = partition_to_2paa(w, 1);
  CHECK(g.instance.num_keywords() == 8);
  CHECK(g.instance.num_bidders() == 8);
  CHECK(g.yes_value() == 72);
  CHECK(g.no_threshold() == 32);
  CHECK(validate(g.instance).ok());

  const std::vector<Money> w3 = {1, 3};
  const PartitionGadget g3 = partition_to_2paa(w3, 2);
  CHECK(g3.instance.num_keywords() == 2 * 4 + 2 + 2);
  CHECK(g3.instance.num_bidders() == 4 + 4);
  CHECK(partition_to_2paa(w3, 1).no_threshold() == 64);
}

TEST_CASE("partition gadget bids and budgets") {
  const std::vector<Money> w = {1, 1, 2, 4};  // n = 4, W = 8
  const Money c = 2;
  const PartitionGadget g = partition_to_2paa(w, c);
  const Instance& in = g.instance;
  const Money W = 8;
  CHECK(in.budget(g.a) == c * W * 3);
  CHECK(in.budget(g.d[0]) == c * W * 3);
  CHECK(in.budget(g.f) == c * W * 65);
  CHECK(in.budget(g.h[15]) == c * W * 64);
  CHECK(in.bid(g.item_keywords[3], g.d[1]) == c * (4 + W));
  CHECK(in.bid(g.drain_keywords[1], g.d[1]) == c * W);
  CHECK(in.bid(g.drain_keywords[1], g.d[0]) == 0);
  CHECK(in.bid(g.drain_keywords[0], g.f) == c * W / 2);
  CHECK(in.bid(g.harvest[5][1], g.f) == W * 65);
  CHECK(in.bid(g.harvest[5][1], g.h[5]) == W * 64);
  CHECK(in.bid(g.harvest[5][1], g.h[4]) == 0);
  CHECK(in.keyword_id(g.item_keywords[0]) == "c1");
  CHECK(in.keyword_id(g.harvest.back().back()) == "g16_2");
}

TEST_CASE("odd total weight doubles every quantity") {
  const std::vector<Money> w = {1, 2};
  const PartitionGadget g = partition_to_2paa(w, 1);
  CHECK(g.scale == 2);
  CHECK(g.yes_value() == 2 * 3 * 36);
  CHECK(g.instance.bid(g.drain_keywords[0], g.f) == 3);
  CHECK(validate(g.instance).ok());
}

TEST_CASE("partition gadget rejects bad input") {
  const std::vector<Money> odd = {1, 2, 3};
  CHECK(code_of([&] { partition_to_2paa(odd, 1); }) == ErrorCode::kInvalidParams);
  const std::vector<Money> zero = {0, 2};
  CHECK(code_of([&] { partition_to_2paa(zero, 1); }) == ErrorCode::kInvalidParams);
  const std::vector<Money> ok = {1, 1};
  CHECK(code_of([&] { partition_to_2paa(ok, 0); }) == ErrorCode::kInvalidParams);
}

TEST_CASE("yes strategy replays to the closed form with both checkpoints") {
  const std::vector<Money> w = {1, 1};
  const PartitionGadget g = partition_to_2paa(w, 1);
  const auto actions = yes_strategy_actions(g, {0});
  BudgetState state(g.instance);
  for (KeywordIndex u : g.item_keywords) state.apply(u, actions[u]);
  CHECK(state.remaining(g.d[0]) == 1);  // cW/2
  CHECK(state.remaining(g.d[1]) == 1);
  for (KeywordIndex u : g.drain_keywords) state.apply(u, actions[u]);
  CHECK(state.remaining(g.f) == 16);  // cWn^3
  CHECK(yes_strategy(g, {0}).total == 72);
}

TEST_CASE("yes strategy hits the closed form on larger gadgets") {
  struct Case {
    std::vector<Money> w;
    Money c;
    std::set<std::size_t> half;
  };
  const std::vector<Case> cases = {
      {{1, 1}, 3, {1}}, {{1, 2, 3, 2}, 1, {0, 2}}, {{5, 1, 2, 4}, 2, {0, 1}}, {{3, 3, 1, 1, 2, 2}, 2, {0, 2, 4}}};
  for (const auto& k : cases) {
    const PartitionGadget g = partition_to_2paa(k.w, k.c);
    CHECK(yes_strategy(g, k.half).total == g.yes_value());
  }
}

TEST_CASE("yes strategy needs a certified partition") {
  const std::vector<Money> w = {1, 3};
  const PartitionGadget g = partition_to_2paa(w, 1);
  CHECK(code_of([&] { yes_strategy(g, {0}); }) == ErrorCode::kNotAPartition);
  const std::vector<Money> w4 = {1, 1, 1, 1};
  const PartitionGadget g4 = partition_to_2paa(w4, 1);
  CHECK(code_of([&] { yes_strategy(g4, {0}); }) == ErrorCode::kNotAPartition);
  CHECK(code_of([&] { yes_strategy(g4, {0, 9}); }) == ErrorCode::kNotAPartition);
}

TEST_CASE("partition bookkeeping names every role") {
  const std::vector<Money> w = {1, 1};
  const Json doc = partition_bookkeeping(partition_to_2paa(w, 1));
  CHECK(doc["bidders"]["h"].size() == 4);
  CHECK(doc["keywords"]["drains"][1] == "e2");
  CHECK(doc["yes_value"] == 72);
}

TEST_CASE("vertex cover gadget values") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const VcGadget g = vc_to_2pm(tri);
  CHECK(g.instance.num_keywords() == 9);
  CHECK(g.instance.num_bidders() == 12);
  CHECK(opt_2pm(g.instance).value == 7);

  CHECK(opt_2pm(vc_to_2pm(make_graph(2, {{0, 1}})).instance).value == 4);
  CHECK(opt_2pm(vc_to_2pm(make_graph(3, {{0, 1}, {1, 2}})).instance).value == 7);

  // h_v and l_v of every vertex precede all edge keywords.
  for (KeywordIndex e : g.edge_keywords) {
    for (std::size_t v = 0; v < 3; ++v) CHECK(g.h[v] < g.l[v]);
    for (std::size_t v = 0; v < 3; ++v) CHECK(g.l[v] < e);
  }
}

TEST_CASE("vertex cover identity on every connected graph up to four vertices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& graph : connected_graphs(n)) {
      const VcGadget g = vc_to_2pm(graph);
      const std::size_t cover = min_vertex_cover_size(graph);
      const OptResult opt = opt_2pm(g.instance);
      CHECK(static_cast<std::size_t>(opt.value) == vc_gadget_expected_value(graph, cover));
      const auto actions = opt.witness.actions();
      const CoverExtraction x = extract_vertex_cover(g, actions);
      CHECK(is_vertex_cover(graph, x.cover));
      CHECK(x.cover.size() == cover);
    }
  }
}

TEST_CASE("cover extraction from other feasible traces") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const VcGadget g = vc_to_2pm(tri);
  const auto opt = opt_2pm(g.instance);
  CHECK(extract_vertex_cover(g, opt.witness).cover.size() == 2);

  const VcGadget k2 = vc_to_2pm(make_graph(2, {{0, 1}}));
  const auto best = opt_2pm(k2.instance);
  REQUIRE(best.value == 4);
  CHECK(extract_vertex_cover(k2, best.witness).cover.size() == 1);

  std::mt19937_64 rng(12);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Graph& graph : connected_graphs(n)) {
      const VcGadget gg = vc_to_2pm(graph);
      const auto rm = reverse_match(gg.instance);
      check_extraction(gg, rm.trace.actions());
      check_extraction(gg, all_skip(gg.instance));
      for (const char* name : {"greedy", "first-available", "ranking-simulate"}) {
        auto p = make_policy(name);
        check_extraction(gg, run_online(gg.instance, *p, rng()).trace.actions());
      }
    }
  }
}

TEST_CASE("cover extraction rejects infeasible traces") {
  const VcGadget g = vc_to_2pm(make_graph(2, {{0, 1}}));
  auto actions = all_skip(g.instance);
  actions[g.h[0]] = Assign{g.vertex_bidders[0], g.y[0]};
  actions[g.edge_keywords[0]] = Assign{g.vertex_bidders[0], g.vertex_bidders[1]};
  CHECK(code_of([&] { extract_vertex_cover(g, actions); }) == ErrorCode::kInfeasibleTrace);
}

TEST_CASE("first-price bid transform") {
  const Instance in({"u"}, {{"A", 9}, {"B", 9}, {"C", 9}}, {5, 3, 3});
  const Instance t = to_first_price_bids(in);
  CHECK(t.bid(0, 0) == 3);
  CHECK(t.bid(0, 1) == 3);
  CHECK(t.bid(0, 2) == 3);
  CHECK(to_first_price_bids(Instance({"u"}, {{"A", 9}, {"B", 9}}, {5, 0})).bid(0, 0) == 0);
  const Instance ones = to_first_price_bids(make_all_ones(3, {{0, 1}, {0, 1, 2}}));
  for (BidderIndex v : {0u, 1u}) CHECK(ones.bid(0, v) == 1);
  CHECK(ones.bid(0, 2) == 0);
  CHECK(ones.bid(1, 2) == 1);
}

TEST_CASE("first-price normalization") {
  const Instance in({"u1", "u2", "u3"}, {{"v", 5}}, {3, 3, 2});
  FirstPriceAllocation all(3);
  all.winner = {0, 0, 0};
  const auto kept = normalize_first_price(in, all);
  CHECK(kept.winner[0] == 0u);
  CHECK(kept.winner[1] == 0u);
  CHECK_FALSE(kept.winner[2].has_value());
  CHECK(first_price_value(in, all) == 5);
  CHECK(first_price_value(in, kept) == 5);

  const Instance light({"u1", "u2"}, {{"v", 5}}, {3, 1});
  FirstPriceAllocation both(2);
  both.winner = {0, 0};
  CHECK(normalize_first_price(light, both).winner == both.winner);

  const FirstPriceAllocation none(2);
  CHECK(normalize_first_price(light, none).size() == 0);
}

TEST_CASE("price partner tie-break and failure") {
  const Instance in({"u"}, {{"A", 9}, {"B", 9}, {"C", 9}}, {5, 3, 3});
  CHECK(price_partner(in, 0, 0) == 1);
  CHECK(price_partner(in, 0, 2) == 1);
  CHECK(price_partner(in, 0, 1) == 2);
  const Instance alone({"u"}, {{"A", 9}}, {5});
  CHECK(code_of([&] { price_partner(alone, 0, 0); }) == ErrorCode::kUnresolvableSecondBidder);
}

TEST_CASE("random construction with forced marks") {
  // A wins both keywords; P sets the price.
  const Instance in({"u1", "u2"}, {{"A", 100}, {"P", 100}}, {6, 4, 7, 5});
  const Instance t = to_first_price_bids(in);
  FirstPriceAllocation alloc(2);
  alloc.winner = {0, 0};

  const auto none = random_construction(in, alloc, std::vector<bool>{false, false});
  CHECK(none.trace.total == 0);
  const auto partners = random_construction(in, alloc, std::vector<bool>{false, true});
  CHECK(partners.trace.total == first_price_value(t, alloc));
  CHECK(partners.trace.total == 9);
}

TEST_CASE("random construction over-budget branch keeps at least half") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const Instance in = random_2paa(2 + rng() % 4, 2 + rng() % 3, 6, 1, rng());
    const Instance t = to_first_price_bids(in);
    FirstPriceAllocation alloc(in.num_keywords());
    for (auto& w : alloc.winner) {
      if (rng() % 4 != 0) w = rng() % in.num_bidders();
    }
    alloc = normalize_first_price(t, alloc);
    const auto rc = random_construction(in, alloc, rng());
    for (const auto& o : rc.outcomes) {
      CHECK_FALSE(rc.marked[o.bidder]);
      if (o.over_budget) {
        CHECK(2 * o.kept_sum >= o.candidate_sum);
      } else {
        CHECK(o.kept_sum == o.candidate_sum);
      }
    }
    for (const auto& s : rc.trace.steps) {
      if (const auto* a = std::get_if<Assign>(&s.action)) {
        CHECK(s.price == t.bid(s.keyword, a->first));
        CHECK(rc.marked[a->second]);
      }
    }
  }
}
