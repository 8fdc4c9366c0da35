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

#include "auctionlab/auction.hpp"

#include "auctionlab/error.hpp"

namespace auctionlab {

BudgetState::BudgetState(const Instance& instance)
    : instance_(&instance), remaining_(instance.initial_budgets()) {}

Money BudgetState::effective_bid(KeywordIndex u, BidderIndex v) const {
  return auctionlab::effective_bid(instance_->bid(u, v), remaining_[v]);
}

Money BudgetState::price_of(KeywordIndex u, const Action& action) const {
  if (u >= instance_->num_keywords()) {
    throw Error(ErrorCode::kUnknownId, "keyword index " + std::to_string(u));
  }
  const auto* assign = std::get_if<Assign>(&action);
  if (assign == nullptr) return 0;
  const std::size_t n = instance_->num_bidders();
  if (assign->first >= n || assign->second >= n) {
    throw Error(ErrorCode::kUnknownId, "bidder index out of range at keyword '" +
                                           instance_->keyword_id(u) + "'");
  }
  if (assign->first == assign->second) {
    throw Error(ErrorCode::kSameBidder, "bidder '" + instance_->bidder(assign->first).id +
                                            "' cannot set its own price on '" +
                                            instance_->keyword_id(u) + "'");
  }
  const Money first_bid = effective_bid(u, assign->first);
  const Money second_bid = effective_bid(u, assign->second);
  if (first_bid < second_bid) {
    throw Error(ErrorCode::kOrderingViolation,
                "on '" + instance_->keyword_id(u) + "' first '" + instance_->bidder(assign->first).id +
                    "' bids " + std::to_string(first_bid) + " < second '" +
                    instance_->bidder(assign->second).id + "' bids " + std::to_string(second_bid));
  }
  return second_bid;
}

Money BudgetState::apply(KeywordIndex u, const Action& action) {
  const Money price = price_of(u, action);
  if (const auto* assign = std::get_if<Assign>(&action)) {
    remaining_[assign->first] = checked_sub(remaining_[assign->first], price);
  }
  ++step_;
  return price;
}

std::vector<Action> AuctionTrace::actions() const {
  std::vector<Action> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.action);
  return out;
}

AuctionTrace execute(const Instance& instance, std::span<const Action> actions) {
  if (actions.size() != instance.num_keywords()) {
    throw Error(ErrorCode::kInvalidParams, "expected " + std::to_string(instance.num_keywords()) +
                                               " actions, got " + std::to_string(actions.size()));
  }
  BudgetState state(instance);
  AuctionTrace trace;
  trace.steps.reserve(actions.size());
  for (KeywordIndex u = 0; u < actions.size(); ++u) {
    const Money price = state.apply(u, actions[u]);
    trace.steps.push_back({u, actions[u], price});
    trace.total = checked_add(trace.total, price);
  }
  trace.final_budgets.assign(state.remaining().begin(), state.remaining().end());
  return trace;
}

std::vector<Action> all_skip(const Instance& instance) {
  return std::vector<Action>(instance.num_keywords(), Skip{});
}

}  // namespace auctionlab
