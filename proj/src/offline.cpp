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

#include "auctionlab/offline.hpp"

#include <algorithm>
#include <numeric>

#include "auctionlab/error.hpp"
#include "auctionlab/oracles.hpp"

namespace auctionlab {

TopCResult top_c(const Instance& instance, std::size_t c) {
  TopCResult result;
  result.precondition_met = true;
  try {
    result.precondition_met = r_min(instance) >= Rational(static_cast<long long>(c));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoPositiveBids) throw;
  }

  std::vector<KeywordIndex> order;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    if (instance.neighbors(u).size() >= 2) order.push_back(u);
  }
  std::stable_sort(order.begin(), order.end(), [&](KeywordIndex a, KeywordIndex b) {
    return second_highest_bid(instance, a) > second_highest_bid(instance, b);
  });
  order.resize(std::min(order.size(), c));
  std::sort(order.begin(), order.end());
  result.chosen = order;

  std::vector<Action> actions = all_skip(instance);
  BudgetState state(instance);
  std::size_t next = 0;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    if (next < order.size() && order[next] == u) {
      ++next;
      std::vector<BidderIndex> ranked(instance.neighbors(u).begin(), instance.neighbors(u).end());
      std::stable_sort(ranked.begin(), ranked.end(), [&](BidderIndex a, BidderIndex b) {
        return instance.bid(u, a) > instance.bid(u, b);
      });
      Assign pair{ranked[0], ranked[1]};
      if (state.effective_bid(u, pair.first) < state.effective_bid(u, pair.second)) {
        std::swap(pair.first, pair.second);
      }
      actions[u] = pair;
    }
    state.apply(u, actions[u]);
  }
  result.trace = execute(instance, actions);
  return result;
}

EdgeClass classify_edge(const Instance& instance, const Matching& f, KeywordIndex keyword,
                        BidderIndex bidder) {
  if (keyword >= instance.num_keywords() || bidder >= instance.num_bidders() ||
      instance.bid(keyword, bidder) <= 0) {
    throw Error(ErrorCode::kNotANonMatchingEdge, "not an edge of the instance");
  }
  if (f.bidder_of.at(keyword) == bidder) {
    throw Error(ErrorCode::kNotANonMatchingEdge, "edge belongs to the matching");
  }
  const auto owner = f.inverse(instance.num_bidders());
  return owner[bidder] && *owner[bidder] < keyword ? EdgeClass::kUp : EdgeClass::kDown;
}

ReverseMatchResult reverse_match(const Instance& instance) {
  if (!instance.is_all_ones()) {
    throw Error(ErrorCode::kInvalidParams, "reverse_match needs 0/1 bids and unit budgets");
  }
  ReverseMatchResult result;

  // Keywords of degree < 2 can never be sold at a profit; match only the rest.
  std::vector<KeywordIndex> kept;
  std::vector<std::vector<BidderIndex>> kept_neighbors;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    if (instance.neighbors(u).size() >= 2) {
      kept.push_back(u);
      kept_neighbors.emplace_back(instance.neighbors(u).begin(), instance.neighbors(u).end());
    } else {
      result.dropped.push_back(u);
      result.warnings.push_back("dropping keyword '" + instance.keyword_id(u) + "' of degree " +
                                std::to_string(instance.neighbors(u).size()));
    }
  }
  const Matching reduced = max_matching(make_all_ones(instance.num_bidders(), kept_neighbors));

  Matching f(instance.num_keywords());
  for (std::size_t i = 0; i < kept.size(); ++i) f.bidder_of[kept[i]] = reduced.bidder_of[i];
  result.initial_matching = f;

  auto owner = f.inverse(instance.num_bidders());
  std::vector<Action> actions = all_skip(instance);
  for (KeywordIndex u = instance.num_keywords(); u-- > 0;) {
    if (!f.bidder_of[u]) continue;
    const BidderIndex first = *f.bidder_of[u];
    std::optional<BidderIndex> second;
    for (BidderIndex v : instance.neighbors(u)) {
      if (v != first && (!owner[v] || *owner[v] > u)) {
        second = v;
        break;
      }
    }
    if (!second) {
      // Every other neighbor is matched to an earlier keyword; free the one
      // whose partner arrives first.
      for (BidderIndex v : instance.neighbors(u)) {
        if (v != first && (!second || *owner[v] < *owner[*second])) second = v;
      }
      f.bidder_of[*owner[*second]].reset();
      owner[*second].reset();
    }
    actions[u] = Assign{first, *second};
  }
  result.trace = execute(instance, actions);
  return result;
}

}  // namespace auctionlab
