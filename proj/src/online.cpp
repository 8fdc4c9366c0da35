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

#include "auctionlab/online.hpp"

#include <algorithm>

#include "auctionlab/error.hpp"

namespace auctionlab {
namespace {

std::vector<std::size_t> rank_from_order(const std::vector<BidderIndex>& order, std::size_t n) {
  if (order.size() != n) {
    throw Error(ErrorCode::kInvalidParams, "ranking has " + std::to_string(order.size()) +
                                               " entries for " + std::to_string(n) + " bidders");
  }
  std::vector<std::size_t> rank(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (order[r] >= n || rank[order[r]] != n) {
      throw Error(ErrorCode::kInvalidParams, "ranking is not a permutation");
    }
    rank[order[r]] = r;
  }
  return rank;
}

}  // namespace

OnlineRun run_online(const Instance& instance, OnlinePolicy& policy, std::uint64_t seed) {
  const std::size_t n = instance.num_bidders();
  policy.begin(n, seed);
  BudgetState state(instance);
  std::vector<std::uint8_t> matched(n, 0);
  OnlineRun run;
  run.matching = Matching(instance.num_keywords());
  std::vector<Action> actions;
  actions.reserve(instance.num_keywords());

  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    const ArrivalView view(u, instance.neighbors(u), instance.bids_for(u), state.remaining(), matched);
    const Decision decision = policy.decide(view);
    Action action = Skip{};
    if (const auto* assign = std::get_if<Assign>(&decision)) {
      action = *assign;
    } else if (const auto* match = std::get_if<Match>(&decision)) {
      if (match->bidder >= n || instance.bid(u, match->bidder) <= 0) {
        throw Error(ErrorCode::kPolicyViolation,
                    policy.name() + " matched '" + instance.keyword_id(u) + "' to a non-neighbor");
      }
      if (matched[match->bidder] != 0) {
        throw Error(ErrorCode::kPolicyViolation,
                    policy.name() + " matched bidder '" + instance.bidder(match->bidder).id + "' twice");
      }
      matched[match->bidder] = 1;
      run.matching.bidder_of[u] = match->bidder;
    }
    state.apply(u, action);
    actions.push_back(action);
  }
  run.trace = execute(instance, actions);
  return run;
}

Decision GreedyPolicy::decide(const ArrivalView& view) {
  std::optional<BidderIndex> first;
  for (BidderIndex v : view.neighbors()) {
    if (view.effective_bid(v) <= 0) continue;
    if (!first) {
      first = v;
    } else {
      return Assign{*first, v};
    }
  }
  return Skip{};
}

Decision FirstAvailablePolicy::decide(const ArrivalView& view) {
  const auto nbrs = view.neighbors();
  const auto first = std::find_if(nbrs.begin(), nbrs.end(),
                                  [&](BidderIndex v) { return view.effective_bid(v) > 0; });
  if (first == nbrs.end()) return Skip{};
  // Any other neighbor may set the price; one with budget left is preferred.
  std::optional<BidderIndex> second;
  for (BidderIndex v : nbrs) {
    if (v == *first) continue;
    if (view.effective_bid(v) > 0) return Assign{*first, v};
    if (!second) second = v;
  }
  if (!second) return Skip{};
  return Assign{*first, *second};
}

void RankingPolicy::begin(std::size_t num_bidders, std::uint64_t seed) {
  if (fixed_order_) {
    rank_ = rank_from_order(*fixed_order_, num_bidders);
    return;
  }
  Rng rng = make_rng(seed, Stream::kRanking);
  rank_ = rank_from_order(random_permutation(num_bidders, rng), num_bidders);
}

Decision RankingPolicy::decide(const ArrivalView& view) {
  std::optional<BidderIndex> best;
  for (BidderIndex v : view.neighbors()) {
    if (view.first_price_matched(v)) continue;
    if (!best || rank_[v] < rank_[*best]) best = v;
  }
  if (!best) return Skip{};
  return Match{*best};
}

void RankingSimulatePolicy::begin(std::size_t num_bidders, std::uint64_t seed) {
  if (fixed_order_) {
    rank_ = rank_from_order(*fixed_order_, num_bidders);
  } else {
    Rng rng = make_rng(seed, Stream::kRanking);
    rank_ = rank_from_order(random_permutation(num_bidders, rng), num_bidders);
  }
  coin_rng_ = make_rng(seed, Stream::kCoins);
  in_m_.assign(num_bidders, 0);
  in_r_.assign(num_bidders, 0);
}

bool RankingSimulatePolicy::coin(std::size_t step) {
  if (fixed_coins_) {
    if (step >= fixed_coins_->size()) {
      throw Error(ErrorCode::kInvalidParams, "fixed coin sequence shorter than the instance");
    }
    return (*fixed_coins_)[step];
  }
  return fair_coin(coin_rng_);
}

Decision RankingSimulatePolicy::decide(const ArrivalView& view) {
  std::vector<BidderIndex> open;
  for (BidderIndex v : view.neighbors()) {
    if (in_m_[v] == 0 && in_r_[v] == 0) open.push_back(v);
  }
  if (open.empty()) return Skip{};
  std::sort(open.begin(), open.end(), [&](BidderIndex a, BidderIndex b) { return rank_[a] < rank_[b]; });

  const bool heads = coin(view.step());
  BidderIndex winner = open[0];
  if (open.size() == 1) {
    if (!heads) {
      in_r_[winner] = 1;
      return Skip{};
    }
  } else {
    winner = heads ? open[0] : open[1];
    in_r_[heads ? open[1] : open[0]] = 1;
  }
  in_m_[winner] = 1;

  // Price setter: the reserved partner when there is one, else any other
  // neighbor that has not been matched.
  std::optional<BidderIndex> setter;
  if (open.size() >= 2) {
    setter = heads ? open[1] : open[0];
  } else {
    for (BidderIndex v : view.neighbors()) {
      if (v != winner && in_m_[v] == 0) {
        setter = v;
        break;
      }
    }
  }
  if (!setter) return Skip{};
  return Assign{winner, *setter};
}

std::size_t RankingSimulatePolicy::matched_count() const {
  return static_cast<std::size_t>(std::count(in_m_.begin(), in_m_.end(), 1));
}

Matching ranking_matching(const Instance& instance, const std::vector<BidderIndex>& order) {
  RankingPolicy policy(order);
  return run_online(instance, policy, 0).matching;
}

LeftKCopy left_k_copy(const Instance& instance, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "k must be positive");
  std::vector<std::string> ids;
  std::vector<Money> bids;
  LeftKCopy out;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    const auto row = instance.bids_for(u);
    for (std::size_t j = 1; j <= k; ++j) {
      ids.push_back(k == 1 ? instance.keyword_id(u) : instance.keyword_id(u) + "#" + std::to_string(j));
      bids.insert(bids.end(), row.begin(), row.end());
      out.origin.push_back(u);
    }
  }
  out.copy = Instance(std::move(ids), instance.bidders(), std::move(bids));
  return out;
}

std::unique_ptr<OnlinePolicy> make_policy(const std::string& name) {
  if (name == "skip-all") return std::make_unique<SkipAllPolicy>();
  if (name == "greedy") return std::make_unique<GreedyPolicy>();
  if (name == "first-available") return std::make_unique<FirstAvailablePolicy>();
  if (name == "ranking") return std::make_unique<RankingPolicy>();
  if (name == "ranking-simulate") return std::make_unique<RankingSimulatePolicy>();
  throw Error(ErrorCode::kInvalidParams, "unknown policy '" + name + "'");
}

}  // namespace auctionlab
