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

#include "auctionlab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "auctionlab/error.hpp"

namespace auctionlab {
namespace {

bool try_augment(const Instance& instance, KeywordIndex u, std::vector<bool>& visited,
                 std::vector<std::optional<KeywordIndex>>& owner, Matching& m) {
  for (BidderIndex v : instance.neighbors(u)) {
    if (visited[v]) continue;
    visited[v] = true;
    if (!owner[v] || try_augment(instance, *owner[v], visited, owner, m)) {
      owner[v] = u;
      m.bidder_of[u] = v;
      return true;
    }
  }
  return false;
}

void charge_node(std::uint64_t& nodes, const SearchLimits& limits, const char* solver) {
  if (++nodes > limits.max_nodes) {
    throw Error(ErrorCode::kTooLarge, std::string(solver) + " exceeded " +
                                          std::to_string(limits.max_nodes) + " search states");
  }
}

// ---------------------------------------------------------------------------
// 2PM: state is the set of consumed bidders, restricted to bidders that still
// appear in some upcoming keyword.

class MatchedSetSearch {
 public:
  MatchedSetSearch(const Instance& instance, SearchLimits limits)
      : instance_(instance), limits_(limits), memo_(instance.num_keywords()) {
    const std::size_t m = instance.num_keywords();
    future_.assign(m + 1, 0);
    for (std::size_t t = m; t-- > 0;) {
      future_[t] = future_[t + 1];
      for (BidderIndex v : instance.neighbors(t)) future_[t] |= bit(v);
    }
  }

  OptResult run() {
    OptResult result;
    result.value = best(0, 0);
    std::vector<Action> actions;
    std::uint64_t mask = 0;
    for (KeywordIndex t = 0; t < instance_.num_keywords(); ++t) {
      const auto& entry = memo_[t].at(mask & future_[t]);
      if (entry.choice < 0) {
        actions.push_back(Skip{});
        continue;
      }
      const auto v = static_cast<BidderIndex>(entry.choice);
      BidderIndex second = v;
      for (BidderIndex w : instance_.neighbors(t)) {
        if (w != v && (mask & bit(w)) == 0) {
          second = w;
          break;
        }
      }
      actions.push_back(Assign{v, second});
      mask |= bit(v);
    }
    result.witness = execute(instance_, actions);
    result.nodes = nodes_;
    return result;
  }

 private:
  struct Entry {
    Money value;
    int choice;
  };

  static std::uint64_t bit(BidderIndex v) { return std::uint64_t{1} << v; }

  Money best(KeywordIndex t, std::uint64_t mask) {
    const std::size_t m = instance_.num_keywords();
    if (t == m) return 0;
    mask &= future_[t];
    if (auto it = memo_[t].find(mask); it != memo_[t].end()) return it->second.value;
    charge_node(nodes_, limits_, "opt_2pm");

    Entry entry{best(t + 1, mask), -1};
    std::vector<BidderIndex> available;
    for (BidderIndex v : instance_.neighbors(t)) {
      if ((mask & bit(v)) == 0) available.push_back(v);
    }
    const auto ceiling = static_cast<Money>(m - t);
    if (available.size() >= 2) {
      for (BidderIndex v : available) {
        if (entry.value >= ceiling) break;
        const Money value = 1 + best(t + 1, mask | bit(v));
        if (value > entry.value) entry = {value, static_cast<int>(v)};
      }
    }
    memo_[t].emplace(mask, entry);
    return entry.value;
  }

  const Instance& instance_;
  SearchLimits limits_;
  std::vector<std::uint64_t> future_;
  std::vector<std::unordered_map<std::uint64_t, Entry>> memo_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// 2PAA / 1PAA: state is the remaining-budget vector. A budget at least as
// large as the bidder's total future bids can never bind again, so the memo
// key clamps it there.

struct BudgetsHash {
  std::size_t operator()(const std::vector<Money>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Money x : v) h = (h ^ std::hash<Money>{}(x)) * 0x100000001b3ull;
    return h;
  }
};

enum class Pricing { kSecond, kFirst };

class BudgetSearch {
 public:
  BudgetSearch(const Instance& instance, Pricing pricing, SearchLimits limits)
      : instance_(instance), pricing_(pricing), limits_(limits), memo_(instance.num_keywords()) {
    const std::size_t m = instance.num_keywords();
    const std::size_t n = instance.num_bidders();
    future_bids_.assign(m + 1, std::vector<Money>(n, 0));
    for (std::size_t t = m; t-- > 0;) {
      for (BidderIndex v = 0; v < n; ++v) {
        future_bids_[t][v] = checked_add(future_bids_[t + 1][v], std::max<Money>(0, instance.bid(t, v)));
      }
    }
  }

  struct Option {
    Money price;
    BidderIndex first;
    BidderIndex second;
  };

  Money solve() { return best(0, instance_.initial_budgets()); }

  /// Follows the recorded choices from the initial budgets.
  std::vector<std::optional<Option>> choices() {
    std::vector<std::optional<Option>> out;
    std::vector<Money> rem = instance_.initial_budgets();
    for (KeywordIndex t = 0; t < instance_.num_keywords(); ++t) {
      const auto& entry = memo_[t].at(key(t, rem));
      if (entry.choice < 0) {
        out.emplace_back();
        continue;
      }
      const Option opt = options(t, rem)[static_cast<std::size_t>(entry.choice)];
      rem[opt.first] -= opt.price;
      out.emplace_back(opt);
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Entry {
    Money value;
    int choice;
  };

  std::vector<Money> key(KeywordIndex t, const std::vector<Money>& rem) const {
    std::vector<Money> k(rem.size());
    for (std::size_t v = 0; v < rem.size(); ++v) k[v] = std::min(rem[v], future_bids_[t][v]);
    return k;
  }

  // Sorted by price descending, then first bidder ascending.
  std::vector<Option> options(KeywordIndex u, const std::vector<Money>& rem) const {
    const std::size_t n = instance_.num_bidders();
    std::vector<Money> eff(n);
    for (BidderIndex v = 0; v < n; ++v) eff[v] = effective_bid(instance_.bid(u, v), rem[v]);
    std::vector<Option> out;
    for (BidderIndex first : instance_.neighbors(u)) {
      if (eff[first] <= 0) continue;
      if (pricing_ == Pricing::kFirst) {
        out.push_back({eff[first], first, first});
        continue;
      }
      std::set<Money> seen;
      for (BidderIndex second : instance_.neighbors(u)) {
        if (second == first || eff[second] <= 0 || eff[second] > eff[first]) continue;
        if (seen.insert(eff[second]).second) out.push_back({eff[second], first, second});
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const Option& a, const Option& b) {
      return a.price != b.price ? a.price > b.price : a.first < b.first;
    });
    return out;
  }

  Money suffix_bound(KeywordIndex t, const std::vector<Money>& rem) const {
    Money total = 0;
    for (KeywordIndex u = t; u < instance_.num_keywords(); ++u) {
      Money top = 0;
      Money second = 0;
      for (BidderIndex v : instance_.neighbors(u)) {
        const Money e = effective_bid(instance_.bid(u, v), rem[v]);
        if (e > top) {
          second = top;
          top = e;
        } else if (e > second) {
          second = e;
        }
      }
      total = checked_add(total, pricing_ == Pricing::kSecond ? second : top);
    }
    return total;
  }

  Money best(KeywordIndex t, const std::vector<Money>& rem) {
    if (t == instance_.num_keywords()) return 0;
    auto k = key(t, rem);
    if (auto it = memo_[t].find(k); it != memo_[t].end()) return it->second.value;
    charge_node(nodes_, limits_, pricing_ == Pricing::kSecond ? "opt_2paa" : "opt_1paa");

    Entry entry{best(t + 1, rem), -1};
    const auto opts = options(t, rem);
    std::vector<Money> child;
    for (std::size_t i = 0; i < opts.size(); ++i) {
      child = rem;
      child[opts[i].first] -= opts[i].price;
      if (checked_add(opts[i].price, suffix_bound(t + 1, child)) <= entry.value) continue;
      const Money value = checked_add(opts[i].price, best(t + 1, child));
      if (value > entry.value) entry = {value, static_cast<int>(i)};
    }
    memo_[t].emplace(std::move(k), entry);
    return entry.value;
  }

  const Instance& instance_;
  Pricing pricing_;
  SearchLimits limits_;
  std::vector<std::vector<Money>> future_bids_;
  std::vector<std::unordered_map<std::vector<Money>, Entry, BudgetsHash>> memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Matching max_matching(const Instance& instance) {
  Matching m(instance.num_keywords());
  std::vector<std::optional<KeywordIndex>> owner(instance.num_bidders());
  std::vector<bool> visited(instance.num_bidders());
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    std::fill(visited.begin(), visited.end(), false);
    try_augment(instance, u, visited, owner, m);
  }
  return m;
}

OptResult opt_2pm(const Instance& instance, SearchLimits limits) {
  if (!instance.is_all_ones()) {
    throw Error(ErrorCode::kInvalidParams, "opt_2pm needs 0/1 bids and unit budgets");
  }
  if (instance.num_bidders() > 64) {
    throw Error(ErrorCode::kTooLarge, "opt_2pm supports at most 64 bidders");
  }
  return MatchedSetSearch(instance, limits).run();
}

OptResult opt_2paa(const Instance& instance, SearchLimits limits) {
  BudgetSearch search(instance, Pricing::kSecond, limits);
  OptResult result;
  result.value = search.solve();
  std::vector<Action> actions;
  for (const auto& choice : search.choices()) {
    if (choice) {
      actions.push_back(Assign{choice->first, choice->second});
    } else {
      actions.push_back(Skip{});
    }
  }
  result.witness = execute(instance, actions);
  result.nodes = search.nodes();
  return result;
}

FirstPriceOpt opt_1paa(const Instance& instance, SearchLimits limits) {
  BudgetSearch search(instance, Pricing::kFirst, limits);
  FirstPriceOpt result;
  result.value = search.solve();
  result.witness = FirstPriceAllocation(instance.num_keywords());
  const auto choices = search.choices();
  for (KeywordIndex u = 0; u < choices.size(); ++u) {
    if (choices[u]) result.witness.winner[u] = choices[u]->first;
  }
  result.nodes = search.nodes();
  return result;
}

Money second_bid_upper_bound(const Instance& instance) {
  Money total = 0;
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    total = checked_add(total, second_highest_bid(instance, u));
  }
  return total;
}

}  // namespace auctionlab
