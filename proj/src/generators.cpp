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

#include "auctionlab/generators.hpp"

#include <algorithm>
#include <string>

#include "auctionlab/error.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

Instance gap_instance(Money c, Money k) {
  if (c < 1 || k < 2) throw Error(ErrorCode::kInvalidParams, "gap instance needs c >= 1 and k >= 2");
  const Money ck = checked_mul(c, k);
  InstanceBuilder b;
  const KeywordIndex trigger = b.add_keyword("w0");
  std::vector<KeywordIndex> drains;
  for (Money i = 1; i < c; ++i) drains.push_back(b.add_keyword("w" + std::to_string(i)));
  std::vector<KeywordIndex> harvest;
  for (Money i = 1; i <= ck; ++i) harvest.push_back(b.add_keyword("q" + std::to_string(i)));

  const BidderIndex t = b.add_bidder("T", c);
  const BidderIndex l = b.add_bidder("L", ck);
  const BidderIndex d = b.add_bidder("D", ck);
  const BidderIndex h = b.add_bidder("H", checked_mul(ck, k));

  b.set_bid(trigger, t, 1);
  b.set_bid(trigger, l, k);
  for (KeywordIndex u : drains) {
    b.set_bid(u, l, k);
    b.set_bid(u, d, k);
  }
  for (KeywordIndex u : harvest) {
    b.set_bid(u, l, k);
    b.set_bid(u, h, k);
  }
  return b.build();
}

std::vector<Action> gap_replay_actions(const Instance& gap) {
  const BidderIndex t = gap.bidder_index("T");
  const BidderIndex l = gap.bidder_index("L");
  const BidderIndex d = gap.bidder_index("D");
  const BidderIndex h = gap.bidder_index("H");
  std::vector<Action> actions;
  for (KeywordIndex u = 0; u < gap.num_keywords(); ++u) {
    const std::string& id = gap.keyword_id(u);
    if (id == "w0") {
      actions.push_back(Assign{l, t});
    } else if (id.front() == 'w') {
      actions.push_back(Assign{l, d});
    } else {
      actions.push_back(Assign{h, l});
    }
  }
  return actions;
}

AdversaryTranscript adversary_vs_policy(OnlinePolicy& policy, std::size_t m) {
  if (!policy.deterministic()) {
    throw Error(ErrorCode::kNonDeterministicPolicy, policy.name() + " is randomized");
  }
  if (m == 0) throw Error(ErrorCode::kInvalidParams, "m must be positive");
  policy.begin(2 * m, 0);

  InstanceBuilder b;
  std::vector<Action> actions;
  AdversaryTranscript out;
  std::optional<BidderIndex> anchor;
  std::vector<std::uint8_t> no_matches;

  for (std::size_t t = 0; t < m; ++t) {
    const KeywordIndex u = b.add_keyword("k" + std::to_string(t + 1));
    const std::string tag = std::to_string(t + 1);
    if (!anchor) {
      b.set_bid(u, b.add_bidder("a" + tag, 1), 1);
      b.set_bid(u, b.add_bidder("b" + tag, 1), 1);
    } else {
      b.set_bid(u, *anchor, 1);
      b.set_bid(u, b.add_bidder("c" + tag, 1), 1);
    }

    // Replay the decisions so far on the instance revealed so far.
    const Instance revealed = b.build();
    BudgetState state(revealed);
    for (KeywordIndex s = 0; s < t; ++s) state.apply(s, actions[s]);
    no_matches.assign(revealed.num_bidders(), 0);
    const ArrivalView view(u, revealed.neighbors(u), revealed.bids_for(u), state.remaining(), no_matches);
    const Decision decision = policy.decide(view);
    if (std::holds_alternative<Match>(decision)) {
      throw Error(ErrorCode::kPolicyViolation, policy.name() + " answered with a first-price match");
    }
    const Action action =
        std::holds_alternative<Assign>(decision) ? Action{std::get<Assign>(decision)} : Action{Skip{}};
    const Money price = state.price_of(u, action);
    if (!anchor && price > 0) {
      anchor = std::get<Assign>(action).first;
      out.switch_step = u;
    }
    actions.push_back(action);
  }

  out.instance = b.build();
  out.policy_trace = execute(out.instance, actions);
  out.policy_value = out.policy_trace.total;
  return out;
}

ChainSample sample_chain(std::size_t m, ChainVariant variant, std::uint64_t seed) {
  if (m == 0) throw Error(ErrorCode::kInvalidParams, "chain needs at least one keyword");
  Rng rng = make_rng(seed, Stream::kChain);
  ChainSample out;
  out.variant = variant;
  out.shared_first.assign(m, false);

  // pairs[i] = (lower, higher) bidder index of keyword i.
  std::vector<std::pair<BidderIndex, BidderIndex>> pairs;
  pairs.emplace_back(0, 1);
  BidderIndex next = 2;
  for (std::size_t i = 1; i < m; ++i) {
    out.shared_first[i] = fair_coin(rng);
    const BidderIndex shared = out.shared_first[i] ? pairs.back().first : pairs.back().second;
    pairs.emplace_back(shared, next++);
  }
  if (variant == ChainVariant::kRestricted) out.unavailable = fair_coin(rng) ? 0 : 1;

  std::vector<std::vector<BidderIndex>> nbrs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (BidderIndex v : {pairs[i].first, pairs[i].second}) {
      if (out.unavailable != v) nbrs[i].push_back(v);
    }
  }
  out.instance = make_all_ones(next, nbrs);

  if (variant == ChainVariant::kNormal) {
    std::vector<Action> witness;
    for (std::size_t i = 0; i < m; ++i) {
      const auto [p, q] = pairs[i];
      if (i + 1 == m) {
        witness.push_back(Assign{p, q});
      } else {
        const BidderIndex shared = pairs[i + 1].first;
        witness.push_back(shared == p ? Assign{q, p} : Assign{p, q});
      }
    }
    out.witness = std::move(witness);
  }
  return out;
}

Instance random_2pm(std::size_t num_keywords, std::size_t num_bidders, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidParams, "edge probability must lie in [0, 1]");
  if (num_bidders < 2) throw Error(ErrorCode::kInvalidParams, "need at least two bidders");
  Rng rng = make_rng(seed, Stream::kInstance);
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<BidderIndex> pick(0, num_bidders - 1);
  std::vector<std::vector<BidderIndex>> nbrs(num_keywords);
  for (auto& row : nbrs) {
    for (BidderIndex v = 0; v < num_bidders; ++v) {
      if (edge(rng)) row.push_back(v);
    }
    while (row.size() < 2) {
      const BidderIndex v = pick(rng);
      if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
    }
    std::sort(row.begin(), row.end());
  }
  return make_all_ones(num_bidders, nbrs);
}

Instance random_2paa(std::size_t num_keywords, std::size_t num_bidders, Money max_bid,
                     Money target_r_min, std::uint64_t seed) {
  if (target_r_min < 1) throw Error(ErrorCode::kInvalidParams, "target r_min must be at least 1");
  if (max_bid < 0) throw Error(ErrorCode::kInvalidParams, "max bid must be non-negative");
  Rng rng = make_rng(seed, Stream::kInstance);
  std::uniform_int_distribution<Money> draw(0, max_bid);
  std::vector<Money> bids(num_keywords * num_bidders);
  for (Money& x : bids) x = draw(rng);

  std::vector<std::string> keywords;
  for (std::size_t u = 0; u < num_keywords; ++u) keywords.push_back("k" + std::to_string(u));
  std::vector<Bidder> bidders;
  for (BidderIndex v = 0; v < num_bidders; ++v) {
    Money top = 1;
    for (std::size_t u = 0; u < num_keywords; ++u) top = std::max(top, bids[u * num_bidders + v]);
    bidders.push_back({"b" + std::to_string(v), checked_mul(target_r_min, top)});
  }
  return Instance(std::move(keywords), std::move(bidders), std::move(bids));
}

Instance random_perfect_matchable(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidParams, "edge probability must lie in [0, 1]");
  Rng rng = make_rng(seed, Stream::kInstance);
  const auto hidden = random_permutation(n, rng);
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<BidderIndex>> nbrs(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (BidderIndex v = 0; v < n; ++v) {
      if (v == hidden[u] || edge(rng)) nbrs[u].push_back(v);
    }
  }
  return make_all_ones(n, nbrs);
}

}  // namespace auctionlab
