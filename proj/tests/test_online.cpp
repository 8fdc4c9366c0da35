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

#include <algorithm>
#include <numeric>
#include <random>

#include "auctionlab/error.hpp"
#include "auctionlab/generators.hpp"
#include "auctionlab/online.hpp"
#include "auctionlab/oracles.hpp"
#include "rankings.hpp"

using namespace auctionlab;

TEST_CASE("driver basics") {
  const Instance one = make_all_ones(2, {{0, 1}});
  SkipAllPolicy skip;
  CHECK(run_online(one, skip, 0).trace.total == 0);
  GreedyPolicy greedy;
  CHECK(run_online(one, greedy, 0).trace.total == 1);
}

TEST_CASE("ranking-simulate is reproducible for a fixed seed") {
  const Instance in = random_2pm(8, 6, 0.4, 17);
  RankingSimulatePolicy a;
  RankingSimulatePolicy b;
  const auto ra = run_online(in, a, 123);
  const auto rb = run_online(in, b, 123);
  CHECK(ra.trace.actions() == rb.trace.actions());
}

TEST_CASE("greedy sells to the lowest available pair") {
  const Instance in = make_all_ones(3, {{0, 1, 2}, {0, 1}});
  GreedyPolicy greedy;
  const auto r = run_online(in, greedy, 0);
  CHECK(r.trace.steps[0].action == Action{Assign{0, 1}});
  CHECK(is_skip(r.trace.steps[1].action));
  CHECK(r.trace.total == 1);
}

TEST_CASE("first-available sells even without a paying price setter") {
  const Instance in = make_all_ones(2, {{0, 1}, {0, 1}});
  FirstAvailablePolicy fa;
  const auto r = run_online(in, fa, 0);
  CHECK(r.trace.steps[1].action == Action{Assign{1, 0}});
  CHECK(r.trace.steps[1].price == 0);
}

TEST_CASE("ranking on the complete 2x2 graph always matches both") {
  const Instance in = make_all_ones(2, {{0, 1}, {0, 1}});
  for (const auto& order : all_orders(2)) CHECK(ranking_matching(in, order).size() == 2);
}

TEST_CASE("ranking expected size on a small graph") {
  // u1{v1, v2}, u2{v2}
  const Instance in = make_all_ones(2, {{0, 1}, {1}});
  std::size_t total = 0;
  const auto orders = all_orders(2);
  for (const auto& order : orders) total += ranking_matching(in, order).size();
  CHECK(Rational(static_cast<Money>(total)) / Rational(static_cast<Money>(orders.size())) == Rational(3) / 2);
}

TEST_CASE("ranking rejects orders that are not permutations") {
  const Instance in = make_all_ones(2, {{0, 1}});
  RankingPolicy bad(std::vector<BidderIndex>{0, 0});
  CHECK_THROWS_AS(run_online(in, bad, 0), Error);
}

TEST_CASE("ranking-simulate: one keyword always earns 1") {
  const Instance in = make_all_ones(2, {{0, 1}});
  for (bool coin : {false, true}) {
    RankingSimulatePolicy p(std::vector<BidderIndex>{0, 1}, std::vector<bool>{coin});
    CHECK(run_online(in, p, 0).trace.total == 1);
  }
}

TEST_CASE("ranking-simulate: repeated pair earns 1 in expectation") {
  const Instance in = make_all_ones(2, {{0, 1}, {0, 1}});
  Money total = 0;
  std::size_t runs = 0;
  for (const auto& order : all_orders(2)) {
    for (const auto& coins : all_coins(2)) {
      RankingSimulatePolicy p(order, coins);
      total += run_online(in, p, 0).trace.total;
      ++runs;
    }
  }
  CHECK(Rational(total) / Rational(static_cast<Money>(runs)) == 1);
}

TEST_CASE("ranking-simulate keeps M and R disjoint and never reuses them") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance in = random_2pm(1 + rng() % 8, 2 + rng() % 6, 0.4, rng());
    RankingSimulatePolicy p;
    const auto run = run_online(in, p, rng());
    for (BidderIndex v = 0; v < in.num_bidders(); ++v) CHECK_FALSE((p.matched()[v] && p.reserved()[v]));
    std::vector<int> firsts(in.num_bidders(), 0);
    for (const auto& s : run.trace.steps) {
      if (const auto* a = std::get_if<Assign>(&s.action)) {
        ++firsts[a->first];
        CHECK(p.matched()[a->first]);
        CHECK(s.price == 1);
      }
    }
    for (int c : firsts) CHECK(c <= 1);
    CHECK(static_cast<std::size_t>(run.trace.total) <= p.matched_count());
  }
}

// For every ranking and every bidder, the fraction of coin sequences under
// which RankingSimulate matches v is half of whether Ranking matches v on
// the left 2-copy.
TEST_CASE("ranking-simulate matches each bidder with half the 2-copy probability") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 2 + rng() % 3;
    const Instance in = random_2pm(m, n, 0.5, rng());
    CHECK(halving_holds(in));
  }
}

TEST_CASE("left k-copy") {
  const Instance g = make_all_ones(3, {{0, 1, 2}});
  const LeftKCopy one = left_k_copy(g, 1);
  CHECK(one.copy.keyword_ids() == g.keyword_ids());
  CHECK(one.origin == std::vector<KeywordIndex>{0});

  const LeftKCopy two = left_k_copy(g, 2);
  REQUIRE(two.copy.num_keywords() == 2);
  for (KeywordIndex h = 0; h < 2; ++h) {
    const auto nb = two.copy.neighbors(h);
    CHECK(std::vector<BidderIndex>(nb.begin(), nb.end()) == std::vector<BidderIndex>{0, 1, 2});
  }

  std::mt19937_64 rng(4);
  for (std::size_t k : {2u, 3u}) {
    const Instance r = random_2pm(5, 4, 0.4, rng());
    const LeftKCopy h = left_k_copy(r, k);
    CHECK(h.copy.num_keywords() == k * r.num_keywords());
    for (KeywordIndex x = 0; x < h.copy.num_keywords(); ++x) {
      CHECK(h.origin[x] == x / k);
      const auto a = h.copy.neighbors(x);
      const auto b = r.neighbors(h.origin[x]);
      CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
  CHECK_THROWS_AS(left_k_copy(g, 0), Error);
}

// Policies only see the arriving keyword, so rewriting the bids of later
// keywords cannot change earlier decisions.
TEST_CASE("online decisions do not depend on future keywords") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + rng() % 6;
    const std::size_t n = 2 + rng() % 5;
    const Instance base = random_2pm(m, n, 0.4, rng());
    const std::size_t cut = 1 + rng() % (m - 1);
    std::vector<std::vector<BidderIndex>> nbrs;
    for (KeywordIndex u = 0; u < m; ++u) {
      const auto nb = base.neighbors(u);
      nbrs.emplace_back(nb.begin(), nb.end());
      if (u >= cut) std::shuffle(nbrs.back().begin(), nbrs.back().end(), rng), nbrs.back().resize(1 + rng() % nbrs.back().size());
    }
    const Instance changed = make_all_ones(n, nbrs);
    const std::uint64_t seed = rng();
    for (const char* name : {"greedy", "first-available", "ranking-simulate"}) {
      auto p1 = make_policy(name);
      auto p2 = make_policy(name);
      const auto a = run_online(base, *p1, seed).trace.actions();
      const auto b = run_online(changed, *p2, seed).trace.actions();
      CHECK(std::equal(a.begin(), a.begin() + static_cast<long>(cut), b.begin()));
    }
  }
}
