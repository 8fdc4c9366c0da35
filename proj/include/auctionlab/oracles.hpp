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

// Exact reference solvers. All of them are exponential except
// max_matching; the node limit makes the failure mode explicit
// (ErrorCode::kTooLarge) rather than returning a truncated answer.

#pragma once

#include <cstdint>

#include "auctionlab/allocation.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/instance.hpp"

namespace auctionlab {

struct SearchLimits {
  /// Distinct search states a solver may expand before giving up.
  std::uint64_t max_nodes = 20'000'000;
};

struct OptResult {
  Money value = 0;
  AuctionTrace witness;
  std::uint64_t nodes = 0;
};

struct FirstPriceOpt {
  Money value = 0;
  FirstPriceAllocation witness;
  std::uint64_t nodes = 0;
};

/// Maximum-cardinality matching over positive-bid edges (Kuhn's augmenting
/// paths). Keywords are tried in arrival order and bidders in index order,
/// so the result is deterministic.
Matching max_matching(const Instance& instance);

/// Optimal second-price matching value. Requires an all-ones instance with
/// at most 64 bidders. State is (keyword, set of consumed bidders); bidders
/// chosen only as price setters are never consumed.
OptResult opt_2pm(const Instance& instance, SearchLimits limits = {});

/// Optimal second-price value for arbitrary budgets and bids, memoized on the
/// exact remaining-budget vector and pruned by the sum of second-highest
/// effective bids of the keywords still to come.
OptResult opt_2paa(const Instance& instance, SearchLimits limits = {});

/// Optimal first-price value: each keyword goes to at most one bidder, who
/// pays min(bid, remaining budget).
FirstPriceOpt opt_1paa(const Instance& instance, SearchLimits limits = {});

/// Sum over keywords of the second-highest original bid.
Money second_bid_upper_bound(const Instance& instance);

}  // namespace auctionlab
