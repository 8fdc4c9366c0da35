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

// Instance families: the budget-gap gadget, the adaptive adversary against
// deterministic online policies, random chains and plain random instances.
// Every generator is a pure function of its arguments.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "auctionlab/auction.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/online.hpp"

namespace auctionlab {

/// Keywords w0 (trigger), w1..w_{c-1} (drain), q1..q_{ck} (harvest).
/// Bidders T (budget c, bids 1 on w0), L (budget ck, bids k everywhere),
/// D (budget ck, bids k on the drains), H (budget ck^2, bids k on every q).
/// Throws kInvalidParams unless c >= 1 and k >= 2.
Instance gap_instance(Money c, Money k);

/// w0 -> (L, T), each drain -> (L, D), each q -> (H, L). Value
/// 1 + (c-1)k + ck(k-1).
std::vector<Action> gap_replay_actions(const Instance& gap);

struct AdversaryTranscript {
  Instance instance;
  AuctionTrace policy_trace;
  Money policy_value = 0;
  /// Keyword the policy first sold for a positive price, if any.
  std::optional<KeywordIndex> switch_step;
};

/// Shows fresh two-bidder keywords until the policy sells one, then pairs
/// every later keyword with the bidder it sold to and a new bidder.
/// Throws kNonDeterministicPolicy for randomized policies and
/// kPolicyViolation when the policy answers with a first-price Match.
AdversaryTranscript adversary_vs_policy(OnlinePolicy& policy, std::size_t m);

enum class ChainVariant { kNormal, kRestricted };

struct ChainSample {
  Instance instance;
  /// shared_first[i] for i >= 1: keyword i reuses the lower-index bidder of
  /// keyword i-1 (true) or the higher-index one (false). Entry 0 is unused.
  std::vector<bool> shared_first;
  ChainVariant variant = ChainVariant::kNormal;
  /// Bidder of keyword 0 that never bids (restricted chains only).
  std::optional<BidderIndex> unavailable;
  /// Sell each keyword to the endpoint the next keyword does not reuse.
  /// Present for normal chains; its value is m.
  std::optional<std::vector<Action>> witness;
};

/// Throws kInvalidParams for m == 0.
ChainSample sample_chain(std::size_t m, ChainVariant variant, std::uint64_t seed);

/// Each edge is present with probability p; keywords left with fewer than two
/// neighbors get distinct uniformly drawn extra neighbors up to two.
/// Throws kInvalidParams unless 0 <= p <= 1 and num_bidders >= 2.
Instance random_2pm(std::size_t num_keywords, std::size_t num_bidders, double p,
                    std::uint64_t seed);

/// Bids uniform in [0, max_bid]; budget = target_r_min * max(1, bidder's
/// largest bid). Throws kInvalidParams unless target_r_min >= 1 and
/// max_bid >= 0.
Instance random_2paa(std::size_t num_keywords, std::size_t num_bidders, Money max_bid,
                     Money target_r_min, std::uint64_t seed);

/// Random all-ones instance on n keywords and n bidders that contains a
/// perfect matching (a hidden random permutation) plus independent extra
/// edges with probability p.
Instance random_perfect_matchable(std::size_t n, double p, std::uint64_t seed);

}  // namespace auctionlab
