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

// Online allocation: policies see one keyword at a time through an
// ArrivalView and must commit to a decision before the next one arrives.
//
// Two result kinds share the driver. Second-price decisions (Skip/Assign)
// are replayed through the auction executor; first-price decisions (Match)
// build a plain bipartite matching and leave the auction trace untouched.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "auctionlab/allocation.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/instance.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {

/// First-price match of the arriving keyword to `bidder`.
struct Match {
  BidderIndex bidder;
  friend bool operator==(const Match&, const Match&) = default;
};

using Decision = std::variant<Skip, Assign, Match>;

/// Everything a policy may know when keyword `step()` arrives: that
/// keyword's bids, the current budgets and which bidders already hold a
/// first-price match. Later keywords are not reachable from here.
class ArrivalView {
 public:
  ArrivalView(std::size_t step, std::span<const BidderIndex> neighbors,
              std::span<const Money> bids, std::span<const Money> remaining,
              std::span<const std::uint8_t> first_price_matched)
      : step_(step),
        neighbors_(neighbors),
        bids_(bids),
        remaining_(remaining),
        matched_(first_price_matched) {}

  std::size_t step() const { return step_; }
  std::size_t num_bidders() const { return remaining_.size(); }
  std::span<const BidderIndex> neighbors() const { return neighbors_; }
  Money bid(BidderIndex v) const { return bids_[v]; }
  Money remaining(BidderIndex v) const { return remaining_[v]; }
  Money effective_bid(BidderIndex v) const { return auctionlab::effective_bid(bids_[v], remaining_[v]); }
  bool first_price_matched(BidderIndex v) const { return matched_[v] != 0; }

 private:
  std::size_t step_;
  std::span<const BidderIndex> neighbors_;
  std::span<const Money> bids_;
  std::span<const Money> remaining_;
  std::span<const std::uint8_t> matched_;
};

/// A policy instance carries per-run state: begin() resets it. Randomized
/// policies derive every random choice from the seed given to begin().
class OnlinePolicy {
 public:
  virtual ~OnlinePolicy() = default;
  virtual std::string name() const = 0;
  virtual bool deterministic() const = 0;
  virtual void begin(std::size_t num_bidders, std::uint64_t seed) = 0;
  virtual Decision decide(const ArrivalView& view) = 0;
};

struct OnlineRun {
  AuctionTrace trace;
  Matching matching;
};

/// Feeds keywords in arrival order. Assign decisions go through the
/// executor (its errors propagate); a Match of a non-neighbor or of an
/// already matched bidder raises kPolicyViolation.
OnlineRun run_online(const Instance& instance, OnlinePolicy& policy, std::uint64_t seed);

/// Never sells anything.
class SkipAllPolicy final : public OnlinePolicy {
 public:
  std::string name() const override { return "skip-all"; }
  bool deterministic() const override { return true; }
  void begin(std::size_t, std::uint64_t) override {}
  Decision decide(const ArrivalView&) override { return Skip{}; }
};

/// Sells to the lowest-index neighbor with budget left, priced by the next
/// lowest such neighbor; skips when fewer than two are available.
class GreedyPolicy final : public OnlinePolicy {
 public:
  std::string name() const override { return "greedy"; }
  bool deterministic() const override { return true; }
  void begin(std::size_t, std::uint64_t) override {}
  Decision decide(const ArrivalView& view) override;
};

/// Sells to the lowest-index neighbor with budget left even when no price
/// setter is available (the price is then 0).
class FirstAvailablePolicy final : public OnlinePolicy {
 public:
  std::string name() const override { return "first-available"; }
  bool deterministic() const override { return true; }
  void begin(std::size_t, std::uint64_t) override {}
  Decision decide(const ArrivalView& view) override;
};

/// Ranking for online bipartite matching: draw a uniform ranking of the
/// bidders, then match every keyword to its best-ranked unmatched neighbor.
class RankingPolicy final : public OnlinePolicy {
 public:
  RankingPolicy() = default;
  /// Fixed ranking: order[0] is the best-ranked bidder.
  explicit RankingPolicy(std::vector<BidderIndex> order) : fixed_order_(std::move(order)) {}

  std::string name() const override { return "ranking"; }
  bool deterministic() const override { return fixed_order_.has_value(); }
  void begin(std::size_t num_bidders, std::uint64_t seed) override;
  Decision decide(const ArrivalView& view) override;

  const std::vector<std::size_t>& rank() const { return rank_; }

 private:
  std::optional<std::vector<BidderIndex>> fixed_order_;
  std::vector<std::size_t> rank_;
};

/// RankingSimulate for second-price matching. Matched (M) and reserved (R)
/// bidders are both off limits for later keywords; each time bidders enter
/// M or R a fair coin picks which one is matched. A match earns its price
/// when some other neighbor of the keyword is outside M, and that neighbor
/// is used as the price setter; otherwise the keyword is skipped in the
/// trace but the bidder still counts as matched.
class RankingSimulatePolicy final : public OnlinePolicy {
 public:
  RankingSimulatePolicy() = default;
  /// Fixed ranking and/or fixed coins (coins[t] is the flip used at arrival
  /// step t; true selects the better-ranked bidder). Unset parts are drawn
  /// from independent streams of the run seed.
  RankingSimulatePolicy(std::optional<std::vector<BidderIndex>> order,
                        std::optional<std::vector<bool>> coins)
      : fixed_order_(std::move(order)), fixed_coins_(std::move(coins)) {}

  std::string name() const override { return "ranking-simulate"; }
  bool deterministic() const override { return fixed_order_ && fixed_coins_; }
  void begin(std::size_t num_bidders, std::uint64_t seed) override;
  Decision decide(const ArrivalView& view) override;

  const std::vector<std::uint8_t>& matched() const { return in_m_; }
  const std::vector<std::uint8_t>& reserved() const { return in_r_; }
  /// Number of bidders in M: the size of the underlying (first-price) matching.
  std::size_t matched_count() const;

 private:
  bool coin(std::size_t step);

  std::optional<std::vector<BidderIndex>> fixed_order_;
  std::optional<std::vector<bool>> fixed_coins_;
  std::vector<std::size_t> rank_;
  std::vector<std::uint8_t> in_m_;
  std::vector<std::uint8_t> in_r_;
  Rng coin_rng_;
};

/// Ranking on `instance` with a fixed ranking; a convenience over
/// run_online(RankingPolicy(order)).
Matching ranking_matching(const Instance& instance, const std::vector<BidderIndex>& order);

struct LeftKCopy {
  Instance copy;
  /// origin[h] is the keyword of the original instance that copy keyword h
  /// duplicates.
  std::vector<KeywordIndex> origin;
};

/// k consecutive copies of every keyword with the same bids; bidders are
/// shared. Copy ids are "<id>#<j>" for k > 1 and unchanged for k = 1.
LeftKCopy left_k_copy(const Instance& instance, std::size_t k);

std::unique_ptr<OnlinePolicy> make_policy(const std::string& name);

}  // namespace auctionlab
