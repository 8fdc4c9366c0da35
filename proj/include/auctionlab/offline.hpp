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

// Offline approximation algorithms.

#pragma once

#include <string>
#include <vector>

#include "auctionlab/allocation.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/instance.hpp"

namespace auctionlab {

struct TopCResult {
  AuctionTrace trace;
  std::vector<KeywordIndex> chosen;
  /// r_min >= c. When false the no-truncation guarantee does not apply and
  /// each chosen pair is ordered by effective bid at sale time instead.
  bool precondition_met = false;
};

/// Sells the c keywords with the largest second-highest bid, each to its top
/// bidder with the runner-up setting the price. Ties: lower arrival index
/// first among keywords, lower bidder index first within a keyword. Keywords
/// with fewer than two positive bids are never chosen.
TopCResult top_c(const Instance& instance, std::size_t c);

enum class EdgeClass { kUp, kDown };

/// Up iff the bidder is matched by f to a keyword arriving strictly before
/// edge_keyword. Throws kNotANonMatchingEdge when (keyword, bidder) is a
/// matching pair or not an edge at all.
EdgeClass classify_edge(const Instance& instance, const Matching& f, KeywordIndex keyword,
                        BidderIndex bidder);

struct ReverseMatchResult {
  AuctionTrace trace;
  /// The maximum matching the algorithm started from.
  Matching initial_matching;
  /// Keywords ignored because they have fewer than two neighbors.
  std::vector<KeywordIndex> dropped;
  std::vector<std::string> warnings;
};

/// 2-approximation for second-price matching. Requires an all-ones instance
/// (kInvalidParams otherwise).
ReverseMatchResult reverse_match(const Instance& instance);

}  // namespace auctionlab
