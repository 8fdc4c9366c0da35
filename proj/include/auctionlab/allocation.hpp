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

#pragma once

#include <optional>
#include <vector>

#include "auctionlab/instance.hpp"

namespace auctionlab {

/// Partial keyword -> bidder map, injective on bidders, edges only.
struct Matching {
  std::vector<std::optional<BidderIndex>> bidder_of;

  Matching() = default;
  explicit Matching(std::size_t num_keywords) : bidder_of(num_keywords) {}

  std::size_t size() const;
  /// keyword_of[v] for every bidder, nullopt when v is free.
  std::vector<std::optional<KeywordIndex>> inverse(std::size_t num_bidders) const;
};

/// True iff `m` is injective on bidders and uses positive-bid edges only.
bool is_valid_matching(const Instance& instance, const Matching& m);

/// First-price allocation: each allocated keyword's winner pays
/// min(bid, remaining budget). Not required to be injective.
struct FirstPriceAllocation {
  std::vector<std::optional<BidderIndex>> winner;

  FirstPriceAllocation() = default;
  explicit FirstPriceAllocation(std::size_t num_keywords) : winner(num_keywords) {}

  std::size_t size() const;
};

/// Replays a first-price allocation in arrival order and returns its value.
/// Throws kInvalidParams on a size mismatch and kUnknownId on bad indices.
Money first_price_value(const Instance& instance, const FirstPriceAllocation& alloc);

/// Per-keyword payments of the replay above.
std::vector<Money> first_price_payments(const Instance& instance,
                                        const FirstPriceAllocation& alloc);

}  // namespace auctionlab
