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

// Second-price execution semantics.
//
// Keyword t is sold to `first` at the effective bid of `second`, both
// evaluated against the budgets left after keyword t-1. Effective bids are
// original bids truncated to the remaining budget. Only `first` is charged.

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "auctionlab/instance.hpp"
#include "auctionlab/money.hpp"

namespace auctionlab {

struct Skip {
  friend bool operator==(const Skip&, const Skip&) = default;
};

struct Assign {
  BidderIndex first;
  BidderIndex second;
  friend bool operator==(const Assign&, const Assign&) = default;
};

using Action = std::variant<Skip, Assign>;

inline bool is_skip(const Action& a) { return std::holds_alternative<Skip>(a); }

inline Money effective_bid(Money original_bid, Money remaining_budget) {
  return original_bid < remaining_budget ? original_bid : remaining_budget;
}

/// Remaining budgets B_v(t). Only ever decreases.
class BudgetState {
 public:
  explicit BudgetState(const Instance& instance);

  std::size_t step() const { return step_; }
  Money remaining(BidderIndex v) const { return remaining_.at(v); }
  std::span<const Money> remaining() const { return remaining_; }
  Money effective_bid(KeywordIndex u, BidderIndex v) const;

  /// Checks `action` against the current budgets, charges the winner and
  /// advances the step. Returns the price. On error the state is untouched.
  Money apply(KeywordIndex u, const Action& action);

  /// Price `action` would produce, with the same checks as apply().
  Money price_of(KeywordIndex u, const Action& action) const;

 private:
  const Instance* instance_;
  std::vector<Money> remaining_;
  std::size_t step_ = 0;
};

struct TraceStep {
  KeywordIndex keyword;
  Action action;
  Money price = 0;
};

struct AuctionTrace {
  std::vector<TraceStep> steps;
  Money total = 0;
  std::vector<Money> final_budgets;

  std::vector<Action> actions() const;
};

/// Replays one action per keyword in arrival order.
/// Errors: kOrderingViolation, kUnknownId, kSameBidder, kInvalidParams (wrong
/// number of actions).
AuctionTrace execute(const Instance& instance, std::span<const Action> actions);

std::vector<Action> all_skip(const Instance& instance);

}  // namespace auctionlab
