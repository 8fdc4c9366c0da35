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

// Constructive reductions:
//   * PARTITION -> budgeted second-price allocation (a gadget whose optimum
//     jumps when one bidder's budget is drained exactly),
//   * vertex cover -> second-price matching, with cover extraction from any
//     feasible trace,
//   * second-price -> first-price bid transform and the randomized
//     construction that turns a first-price allocation back into a
//     second-price trace.

#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "auctionlab/allocation.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/graph.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/io.hpp"

namespace auctionlab {

// --- PARTITION gadget ------------------------------------------------------

struct PartitionGadget {
  Instance instance;
  std::vector<Money> weights;
  Money c = 1;
  Money total_weight = 0;  // W
  /// 2 when W is odd (every bid and budget doubled so cW/2 stays integral).
  Money scale = 1;

  std::vector<KeywordIndex> item_keywords;          // c_1..c_n
  std::array<KeywordIndex, 2> drain_keywords{};     // e_1, e_2
  std::vector<std::vector<KeywordIndex>> harvest;   // g_{i,k}: [i][k]
  BidderIndex a = 0;
  std::array<BidderIndex, 2> d{};
  BidderIndex f = 0;
  std::vector<BidderIndex> h;

  std::size_t n() const { return weights.size(); }
  /// scale * cW(n^5 + n + 2): value reached when a partition exists.
  Money yes_value() const;
  /// scale * cW(n^3 + cn^2 + n + 2): reaching it certifies a partition.
  Money no_threshold() const;
};

/// Requires an even number of positive weights and c >= 1 (kInvalidParams).
PartitionGadget partition_to_2paa(std::span<const Money> weights, Money c);

/// The allocation that realizes yes_value() from a certified half:
/// `subset` (0-based item indices) must have n/2 items of total weight W/2,
/// else kNotAPartition.
std::vector<Action> yes_strategy_actions(const PartitionGadget& gadget,
                                         const std::set<std::size_t>& subset);
AuctionTrace yes_strategy(const PartitionGadget& gadget, const std::set<std::size_t>& subset);

Json partition_bookkeeping(const PartitionGadget& gadget);

// --- Vertex cover gadget -----------------------------------------------------

/// Keyword order: h_v, l_v for every vertex, then one keyword per edge.
/// Bidder order: vertex bidders, edge bidders x_e, then y_v, z_v pairs.
struct VcGadget {
  Instance instance;
  Graph graph;
  std::vector<KeywordIndex> edge_keywords;
  std::vector<BidderIndex> vertex_bidders;
  std::vector<BidderIndex> edge_bidders;
  std::vector<KeywordIndex> h;
  std::vector<KeywordIndex> l;
  std::vector<BidderIndex> y;
  std::vector<BidderIndex> z;
};

VcGadget vc_to_2pm(const Graph& graph);

/// 2|V| + |E| - OPT_VC: the optimal second-price value of the gadget.
std::size_t vc_gadget_expected_value(const Graph& graph, std::size_t min_cover);

struct CoverExtraction {
  std::set<std::size_t> cover;
  /// Trace in which every edge keyword is sold to its x_e bidder; its value
  /// is at least the input's and equals 2|V| + |E| - |cover|.
  AuctionTrace normalized;
  Money input_value = 0;
};

/// Replays `actions` (kInfeasibleTrace if they do not execute), normalizes
/// and reads off the vertices whose bidders are left unsold.
CoverExtraction extract_vertex_cover(const VcGadget& gadget, std::span<const Action> actions);
CoverExtraction extract_vertex_cover(const VcGadget& gadget, const AuctionTrace& trace);

Json vc_bookkeeping(const VcGadget& gadget);

// --- First-price transform and randomized construction -----------------------

/// b'(u,v) = max { b(u,v') : v' != v, b(u,v') <= b(u,v) }, 0 over the empty set.
Instance to_first_price_bids(const Instance& instance);

/// Drops, per bidder, every allocated keyword after the one at which its
/// transformed payments first reach the budget. Value is unchanged.
FirstPriceAllocation normalize_first_price(const Instance& transformed,
                                           const FirstPriceAllocation& alloc);

/// Lowest-index bidder other than v whose original bid on u equals b'(u,v).
/// Throws kUnresolvableSecondBidder when there is none.
BidderIndex price_partner(const Instance& instance, KeywordIndex u, BidderIndex v);

struct BidderOutcome {
  BidderIndex bidder;
  Money candidate_sum = 0;  // sum of b' over S_v
  Money kept_sum = 0;
  bool over_budget = false;
};

struct RandomConstructionResult {
  AuctionTrace trace;
  std::vector<bool> marked;
  std::vector<BidderOutcome> outcomes;  // unmarked bidders with a non-empty S_v
};

/// `instance` holds the original bids; `alloc` is a normalized first-price
/// allocation of the transformed instance. Marks come from the seed's
/// marking stream, or are given explicitly. Allocated keywords with
/// b'(u,v) = 0 are left unsold.
RandomConstructionResult random_construction(const Instance& instance,
                                             const FirstPriceAllocation& alloc, std::uint64_t seed);
RandomConstructionResult random_construction(const Instance& instance,
                                             const FirstPriceAllocation& alloc,
                                             const std::vector<bool>& marked);

}  // namespace auctionlab
