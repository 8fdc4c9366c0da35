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

#include "auctionlab/allocation.hpp"

#include <algorithm>

#include "auctionlab/auction.hpp"
#include "auctionlab/error.hpp"

namespace auctionlab {

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
      std::count_if(bidder_of.begin(), bidder_of.end(), [](const auto& v) { return v.has_value(); }));
}

std::vector<std::optional<KeywordIndex>> Matching::inverse(std::size_t num_bidders) const {
  std::vector<std::optional<KeywordIndex>> out(num_bidders);
  for (KeywordIndex u = 0; u < bidder_of.size(); ++u) {
    if (bidder_of[u]) out.at(*bidder_of[u]) = u;
  }
  return out;
}

bool is_valid_matching(const Instance& instance, const Matching& m) {
  if (m.bidder_of.size() != instance.num_keywords()) return false;
  std::vector<bool> used(instance.num_bidders(), false);
  for (KeywordIndex u = 0; u < m.bidder_of.size(); ++u) {
    if (!m.bidder_of[u]) continue;
    const BidderIndex v = *m.bidder_of[u];
    if (v >= instance.num_bidders() || used[v] || instance.bid(u, v) <= 0) return false;
    used[v] = true;
  }
  return true;
}

std::size_t FirstPriceAllocation::size() const {
  return static_cast<std::size_t>(
      std::count_if(winner.begin(), winner.end(), [](const auto& v) { return v.has_value(); }));
}

std::vector<Money> first_price_payments(const Instance& instance,
                                        const FirstPriceAllocation& alloc) {
  if (alloc.winner.size() != instance.num_keywords()) {
    throw Error(ErrorCode::kInvalidParams, "allocation size does not match keyword count");
  }
  std::vector<Money> remaining = instance.initial_budgets();
  std::vector<Money> payments(instance.num_keywords(), 0);
  for (KeywordIndex u = 0; u < alloc.winner.size(); ++u) {
    if (!alloc.winner[u]) continue;
    const BidderIndex v = *alloc.winner[u];
    if (v >= instance.num_bidders()) throw Error(ErrorCode::kUnknownId, "bidder index " + std::to_string(v));
    payments[u] = effective_bid(instance.bid(u, v), remaining[v]);
    remaining[v] -= payments[u];
  }
  return payments;
}

Money first_price_value(const Instance& instance, const FirstPriceAllocation& alloc) {
  Money total = 0;
  for (Money p : first_price_payments(instance, alloc)) total = checked_add(total, p);
  return total;
}

}  // namespace auctionlab
