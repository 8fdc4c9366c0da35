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

#include "auctionlab/instance.hpp"

#include <algorithm>
#include <unordered_set>

#include "auctionlab/error.hpp"

namespace auctionlab {

Instance::Instance(std::vector<std::string> keywords, std::vector<Bidder> bidders,
                   std::vector<Money> bids)
    : keywords_(std::move(keywords)),
      bidders_(std::move(bidders)),
      bids_(std::move(bids)) {
  if (bids_.size() != keywords_.size() * bidders_.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "bid matrix has " + std::to_string(bids_.size()) + " entries, expected " +
                    std::to_string(keywords_.size() * bidders_.size()));
  }
  neighbors_.resize(keywords_.size());
  for (KeywordIndex u = 0; u < keywords_.size(); ++u) {
    for (BidderIndex v = 0; v < bidders_.size(); ++v) {
      if (bid(u, v) > 0) neighbors_[u].push_back(v);
    }
    keyword_lookup_.try_emplace(keywords_[u], u);
  }
  for (BidderIndex v = 0; v < bidders_.size(); ++v) {
    bidder_lookup_.try_emplace(bidders_[v].id, v);
  }
}

std::optional<KeywordIndex> Instance::find_keyword(std::string_view id) const {
  const auto it = keyword_lookup_.find(std::string(id));
  if (it == keyword_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<BidderIndex> Instance::find_bidder(std::string_view id) const {
  const auto it = bidder_lookup_.find(std::string(id));
  if (it == bidder_lookup_.end()) return std::nullopt;
  return it->second;
}

KeywordIndex Instance::keyword_index(std::string_view id) const {
  if (auto u = find_keyword(id)) return *u;
  throw Error(ErrorCode::kUnknownId, "keyword '" + std::string(id) + "'");
}

BidderIndex Instance::bidder_index(std::string_view id) const {
  if (auto v = find_bidder(id)) return *v;
  throw Error(ErrorCode::kUnknownId, "bidder '" + std::string(id) + "'");
}

std::vector<Money> Instance::initial_budgets() const {
  std::vector<Money> out;
  out.reserve(bidders_.size());
  for (const auto& b : bidders_) out.push_back(b.budget);
  return out;
}

bool Instance::is_all_ones() const {
  const bool unit_budgets =
      std::all_of(bidders_.begin(), bidders_.end(), [](const Bidder& b) { return b.budget == 1; });
  const bool unit_bids =
      std::all_of(bids_.begin(), bids_.end(), [](Money b) { return b == 0 || b == 1; });
  return unit_budgets && unit_bids;
}

KeywordIndex InstanceBuilder::add_keyword(std::string id) {
  keywords_.push_back(std::move(id));
  return keywords_.size() - 1;
}

BidderIndex InstanceBuilder::add_bidder(std::string id, Money budget) {
  bidders_.push_back({std::move(id), budget});
  return bidders_.size() - 1;
}

void InstanceBuilder::set_bid(KeywordIndex u, BidderIndex v, Money amount) {
  if (u >= keywords_.size()) throw Error(ErrorCode::kUnknownId, "keyword index " + std::to_string(u));
  if (v >= bidders_.size()) throw Error(ErrorCode::kUnknownId, "bidder index " + std::to_string(v));
  entries_.push_back({u, v, amount});
}

void InstanceBuilder::set_bid(std::string_view keyword, std::string_view bidder, Money amount) {
  const auto kw = std::find(keywords_.begin(), keywords_.end(), keyword);
  if (kw == keywords_.end()) throw Error(ErrorCode::kUnknownId, "keyword '" + std::string(keyword) + "'");
  const auto bd = std::find_if(bidders_.begin(), bidders_.end(),
                               [&](const Bidder& b) { return b.id == bidder; });
  if (bd == bidders_.end()) throw Error(ErrorCode::kUnknownId, "bidder '" + std::string(bidder) + "'");
  set_bid(static_cast<KeywordIndex>(kw - keywords_.begin()),
          static_cast<BidderIndex>(bd - bidders_.begin()), amount);
}

Instance InstanceBuilder::build() const {
  std::vector<Money> bids(keywords_.size() * bidders_.size(), 0);
  for (const auto& e : entries_) bids[e.keyword * bidders_.size() + e.bidder] = e.amount;
  return Instance(keywords_, bidders_, std::move(bids));
}

Instance make_all_ones(std::size_t num_bidders,
                       const std::vector<std::vector<BidderIndex>>& neighbors) {
  InstanceBuilder b;
  for (std::size_t v = 0; v < num_bidders; ++v) b.add_bidder("b" + std::to_string(v), 1);
  for (std::size_t u = 0; u < neighbors.size(); ++u) {
    b.add_keyword("k" + std::to_string(u));
    for (BidderIndex v : neighbors[u]) b.set_bid(u, v, 1);
  }
  return b.build();
}

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  std::unordered_set<std::string> seen;
  for (const auto& id : instance.keyword_ids()) {
    if (!seen.insert(id).second) {
      report.violations.push_back({FindingKind::kDuplicateKeywordId, "duplicate keyword id '" + id + "'"});
    }
  }
  seen.clear();
  for (const auto& b : instance.bidders()) {
    if (!seen.insert(b.id).second) {
      report.violations.push_back({FindingKind::kDuplicateBidderId, "duplicate bidder id '" + b.id + "'"});
    }
    if (b.budget < 0) {
      report.violations.push_back({FindingKind::kNegativeBudget,
                                   "bidder '" + b.id + "' has negative budget " + std::to_string(b.budget)});
    }
  }
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    for (BidderIndex v = 0; v < instance.num_bidders(); ++v) {
      const Money b = instance.bid(u, v);
      const std::string where = "bid of '" + instance.bidder(v).id + "' on '" + instance.keyword_id(u) + "'";
      if (b < 0) {
        report.violations.push_back({FindingKind::kNegativeBid, where + " is negative: " + std::to_string(b)});
      } else if (b > instance.budget(v)) {
        report.violations.push_back({FindingKind::kBidExceedsBudget,
                                     where + " exceeds budget: " + std::to_string(b) + " > " +
                                         std::to_string(instance.budget(v))});
      }
    }
  }
  if (instance.is_all_ones()) {
    for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
      if (instance.neighbors(u).size() < 2) {
        report.warnings.push_back({FindingKind::kLowDegreeKeyword,
                                   "keyword '" + instance.keyword_id(u) + "' has degree " +
                                       std::to_string(instance.neighbors(u).size()) +
                                       "; it can never be sold for profit"});
      }
    }
  }
  return report;
}

Rational r_min(const Instance& instance) {
  std::optional<Rational> best;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    for (BidderIndex v : instance.neighbors(u)) {
      Rational ratio(instance.budget(v), instance.bid(u, v));
      if (!best || ratio < *best) best = ratio;
    }
  }
  if (!best) throw Error(ErrorCode::kNoPositiveBids, "r_min is undefined without positive bids");
  return *best;
}

Money second_highest_bid(const Instance& instance, KeywordIndex u) {
  Money top = 0;
  Money second = 0;
  for (BidderIndex v : instance.neighbors(u)) {
    const Money b = instance.bid(u, v);
    if (b > top) {
      second = top;
      top = b;
    } else if (b > second) {
      second = b;
    }
  }
  return second;
}

}  // namespace auctionlab
