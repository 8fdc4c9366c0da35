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

// Instance data model: ordered keywords, budgeted bidders and a dense
// keyword x bidder bid matrix. Keyword index == arrival position.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "auctionlab/money.hpp"

namespace auctionlab {

using KeywordIndex = std::size_t;
using BidderIndex = std::size_t;

struct Bidder {
  std::string id;
  Money budget = 0;
};

/// Immutable once built; safe to share across threads.
///
/// The constructor stores whatever it is given (including negative values
/// or duplicate ids) so that validate() can report on malformed input.
/// Algorithms assume a validated instance.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<std::string> keywords, std::vector<Bidder> bidders,
           std::vector<Money> bids);

  std::size_t num_keywords() const { return keywords_.size(); }
  std::size_t num_bidders() const { return bidders_.size(); }

  const std::string& keyword_id(KeywordIndex u) const { return keywords_.at(u); }
  const std::vector<std::string>& keyword_ids() const { return keywords_; }
  const Bidder& bidder(BidderIndex v) const { return bidders_.at(v); }
  const std::vector<Bidder>& bidders() const { return bidders_; }
  Money budget(BidderIndex v) const { return bidders_.at(v).budget; }

  Money bid(KeywordIndex u, BidderIndex v) const {
    return bids_[u * bidders_.size() + v];
  }
  std::span<const Money> bids_for(KeywordIndex u) const {
    return {bids_.data() + u * bidders_.size(), bidders_.size()};
  }
  /// Bidders with a strictly positive bid on u, ascending by index.
  std::span<const BidderIndex> neighbors(KeywordIndex u) const {
    return neighbors_[u];
  }

  std::optional<KeywordIndex> find_keyword(std::string_view id) const;
  std::optional<BidderIndex> find_bidder(std::string_view id) const;
  KeywordIndex keyword_index(std::string_view id) const;  // throws kUnknownId
  BidderIndex bidder_index(std::string_view id) const;    // throws kUnknownId

  std::vector<Money> initial_budgets() const;

  /// Second-price matching shape: every bid in {0, 1} and every budget 1.
  bool is_all_ones() const;

 private:
  std::vector<std::string> keywords_;
  std::vector<Bidder> bidders_;
  std::vector<Money> bids_;
  std::vector<std::vector<BidderIndex>> neighbors_;
  std::unordered_map<std::string, KeywordIndex> keyword_lookup_;
  std::unordered_map<std::string, BidderIndex> bidder_lookup_;
};

class InstanceBuilder {
 public:
  KeywordIndex add_keyword(std::string id);
  BidderIndex add_bidder(std::string id, Money budget);
  void set_bid(KeywordIndex u, BidderIndex v, Money amount);
  /// Resolves ids against what was added so far; throws kUnknownId.
  void set_bid(std::string_view keyword, std::string_view bidder, Money amount);

  std::size_t num_keywords() const { return keywords_.size(); }
  std::size_t num_bidders() const { return bidders_.size(); }

  Instance build() const;

 private:
  struct Entry {
    KeywordIndex keyword;
    BidderIndex bidder;
    Money amount;
  };
  std::vector<std::string> keywords_;
  std::vector<Bidder> bidders_;
  std::vector<Entry> entries_;
};

/// Builds a 0/1 instance with unit budgets from per-keyword neighbor lists.
/// Keywords are named k0, k1, ... and bidders b0, b1, ...
Instance make_all_ones(std::size_t num_bidders,
                       const std::vector<std::vector<BidderIndex>>& neighbors);

enum class FindingKind {
  kBidExceedsBudget,
  kDuplicateKeywordId,
  kDuplicateBidderId,
  kNegativeBudget,
  kNegativeBid,
  kLowDegreeKeyword,
};

struct Finding {
  FindingKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> violations;
  std::vector<Finding> warnings;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Instance& instance);

/// min over positive bids of budget / bid. Throws kNoPositiveBids.
Rational r_min(const Instance& instance);

/// Second-highest original bid on u (0 with fewer than two positive bids).
Money second_highest_bid(const Instance& instance, KeywordIndex u);

}  // namespace auctionlab
