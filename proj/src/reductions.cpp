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

#include "auctionlab/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "auctionlab/error.hpp"
#include "auctionlab/rng.hpp"

namespace auctionlab {
namespace {

Money power(Money base, int exp) {
  Money out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

Money mul(std::initializer_list<Money> factors) {
  Money out = 1;
  for (Money f : factors) out = checked_mul(out, f);
  return out;
}

}  // namespace

Money PartitionGadget::yes_value() const {
  const auto nn = static_cast<Money>(n());
  const Money poly = checked_add(checked_add(power(nn, 5), nn), 2);
  return mul({scale, c, total_weight, poly});
}

Money PartitionGadget::no_threshold() const {
  const auto nn = static_cast<Money>(n());
  const Money poly =
      checked_add(checked_add(checked_add(power(nn, 3), mul({c, nn, nn})), nn), 2);
  return mul({scale, c, total_weight, poly});
}

PartitionGadget partition_to_2paa(std::span<const Money> weights, Money c) {
  const std::size_t n = weights.size();
  if (n == 0 || n % 2 != 0) throw Error(ErrorCode::kInvalidParams, "need an even, positive number of items");
  if (c < 1) throw Error(ErrorCode::kInvalidParams, "c must be at least 1");
  if (std::any_of(weights.begin(), weights.end(), [](Money w) { return w <= 0; })) {
    throw Error(ErrorCode::kInvalidParams, "weights must be positive");
  }

  PartitionGadget g;
  g.weights.assign(weights.begin(), weights.end());
  g.c = c;
  for (Money w : weights) g.total_weight = checked_add(g.total_weight, w);
  g.scale = g.total_weight % 2 == 0 ? 1 : 2;
  const Money W = g.total_weight;
  const Money s = g.scale;
  const auto nn = static_cast<Money>(n);
  const Money n3 = power(nn, 3);

  InstanceBuilder b;
  for (std::size_t i = 1; i <= n; ++i) g.item_keywords.push_back(b.add_keyword("c" + std::to_string(i)));
  g.drain_keywords = {b.add_keyword("e1"), b.add_keyword("e2")};
  g.harvest.resize(n * n);
  for (std::size_t i = 1; i <= n * n; ++i) {
    for (Money k = 1; k <= c; ++k) {
      g.harvest[i - 1].push_back(b.add_keyword("g" + std::to_string(i) + "_" + std::to_string(k)));
    }
  }

  // s*cW(1 + n/2) written as s*cW(2 + n)/2; n is even so it is exact.
  const Money item_budget = mul({s, c, W, 2 + nn}) / 2;
  g.a = b.add_bidder("a", item_budget);
  g.d = {b.add_bidder("d1", item_budget), b.add_bidder("d2", item_budget)};
  g.f = b.add_bidder("f", mul({s, c, W, checked_add(n3, 1)}));
  for (std::size_t i = 1; i <= n * n; ++i) {
    g.h.push_back(b.add_bidder("h" + std::to_string(i), mul({s, c, W, n3})));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Money item_bid = mul({s, c, checked_add(weights[i], W)});
    for (BidderIndex bidder : {g.a, g.d[0], g.d[1]}) b.set_bid(g.item_keywords[i], bidder, item_bid);
  }
  for (std::size_t j = 0; j < 2; ++j) {
    b.set_bid(g.drain_keywords[j], g.d[j], mul({s, c, W}));
    b.set_bid(g.drain_keywords[j], g.f, mul({s, c, W}) / 2);
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    for (KeywordIndex kw : g.harvest[i]) {
      b.set_bid(kw, g.f, mul({s, W, checked_add(n3, 1)}));
      b.set_bid(kw, g.h[i], mul({s, W, n3}));
    }
  }
  g.instance = b.build();
  return g;
}

std::vector<Action> yes_strategy_actions(const PartitionGadget& gadget,
                                         const std::set<std::size_t>& subset) {
  const std::size_t n = gadget.n();
  Money half = 0;
  for (std::size_t i : subset) {
    if (i >= n) throw Error(ErrorCode::kNotAPartition, "item index " + std::to_string(i) + " out of range");
    half = checked_add(half, gadget.weights[i]);
  }
  if (subset.size() != n / 2 || checked_mul(half, 2) != gadget.total_weight) {
    throw Error(ErrorCode::kNotAPartition, "subset must hold n/2 items of total weight W/2");
  }

  std::vector<Action> actions = all_skip(gadget.instance);
  for (std::size_t i = 0; i < n; ++i) {
    const BidderIndex winner = subset.contains(i) ? gadget.d[0] : gadget.d[1];
    actions[gadget.item_keywords[i]] = Assign{winner, gadget.a};
  }
  // d_1, d_2 are now down to cW/2, so f wins both drains at cW/2.
  for (std::size_t j = 0; j < 2; ++j) actions[gadget.drain_keywords[j]] = Assign{gadget.f, gadget.d[j]};
  // f pays full price on the first c-1 harvest keywords of block 1, which
  // leaves it below its own harvest bid; from then on it sets every price.
  const auto c = static_cast<std::size_t>(gadget.c);
  for (std::size_t k = 0; k + 1 < c; ++k) actions[gadget.harvest[0][k]] = Assign{gadget.f, gadget.h[0]};
  for (std::size_t i = 0; i < gadget.harvest.size(); ++i) {
    for (std::size_t k = (i == 0 ? c - 1 : 0); k < c; ++k) {
      actions[gadget.harvest[i][k]] = Assign{gadget.h[i], gadget.f};
    }
  }
  return actions;
}

AuctionTrace yes_strategy(const PartitionGadget& gadget, const std::set<std::size_t>& subset) {
  return execute(gadget.instance, yes_strategy_actions(gadget, subset));
}

Json partition_bookkeeping(const PartitionGadget& g) {
  const Instance& in = g.instance;
  Json doc;
  doc["kind"] = "partition";
  doc["weights"] = g.weights;
  doc["c"] = g.c;
  doc["W"] = g.total_weight;
  doc["scale"] = g.scale;
  doc["yes_value"] = g.yes_value();
  doc["no_threshold"] = g.no_threshold();
  Json items = Json::array();
  for (KeywordIndex u : g.item_keywords) items.push_back(in.keyword_id(u));
  doc["keywords"]["items"] = items;
  doc["keywords"]["drains"] = {in.keyword_id(g.drain_keywords[0]), in.keyword_id(g.drain_keywords[1])};
  Json harvest = Json::array();
  for (const auto& block : g.harvest) {
    Json ids = Json::array();
    for (KeywordIndex u : block) ids.push_back(in.keyword_id(u));
    harvest.push_back(ids);
  }
  doc["keywords"]["harvest"] = harvest;
  doc["bidders"]["a"] = in.bidder(g.a).id;
  doc["bidders"]["d"] = {in.bidder(g.d[0]).id, in.bidder(g.d[1]).id};
  doc["bidders"]["f"] = in.bidder(g.f).id;
  Json hs = Json::array();
  for (BidderIndex v : g.h) hs.push_back(in.bidder(v).id);
  doc["bidders"]["h"] = hs;
  return doc;
}

// ---------------------------------------------------------------------------

VcGadget vc_to_2pm(const Graph& graph) {
  check_simple(graph);
  VcGadget g;
  g.graph = graph;
  const std::size_t nv = graph.num_vertices();
  const std::size_t ne = graph.num_edges();
  auto edge_label = [&](std::size_t e) {
    return graph.labels[graph.edges[e].first] + "-" + graph.labels[graph.edges[e].second];
  };

  InstanceBuilder b;
  for (std::size_t v = 0; v < nv; ++v) {
    g.h.push_back(b.add_keyword("h:" + graph.labels[v]));
    g.l.push_back(b.add_keyword("l:" + graph.labels[v]));
  }
  for (std::size_t e = 0; e < ne; ++e) g.edge_keywords.push_back(b.add_keyword("e:" + edge_label(e)));

  for (std::size_t v = 0; v < nv; ++v) g.vertex_bidders.push_back(b.add_bidder("v:" + graph.labels[v], 1));
  for (std::size_t e = 0; e < ne; ++e) g.edge_bidders.push_back(b.add_bidder("x:" + edge_label(e), 1));
  for (std::size_t v = 0; v < nv; ++v) {
    g.y.push_back(b.add_bidder("y:" + graph.labels[v], 1));
    g.z.push_back(b.add_bidder("z:" + graph.labels[v], 1));
  }

  for (std::size_t v = 0; v < nv; ++v) {
    b.set_bid(g.h[v], g.vertex_bidders[v], 1);
    b.set_bid(g.h[v], g.y[v], 1);
    b.set_bid(g.l[v], g.y[v], 1);
    b.set_bid(g.l[v], g.z[v], 1);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    b.set_bid(g.edge_keywords[e], g.vertex_bidders[graph.edges[e].first], 1);
    b.set_bid(g.edge_keywords[e], g.vertex_bidders[graph.edges[e].second], 1);
    b.set_bid(g.edge_keywords[e], g.edge_bidders[e], 1);
  }
  g.instance = b.build();
  return g;
}

std::size_t vc_gadget_expected_value(const Graph& graph, std::size_t min_cover) {
  return 2 * graph.num_vertices() + graph.num_edges() - min_cover;
}

CoverExtraction extract_vertex_cover(const VcGadget& gadget, std::span<const Action> actions) {
  AuctionTrace replay;
  try {
    replay = execute(gadget.instance, actions);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInfeasibleTrace, e.what());
  }

  const std::size_t nv = gadget.graph.num_vertices();
  // Vertices whose bidder wins its own h_v keyword. Edge keywords arrive
  // after every h_v, so these are exactly the vertex bidders that are
  // already spent when the edges come in.
  std::vector<bool> keeps_h(nv, false);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& step = replay.steps[gadget.h[v]];
    const auto* a = std::get_if<Assign>(&step.action);
    keeps_h[v] = a != nullptr && a->first == gadget.vertex_bidders[v] && step.price > 0;
  }

  // Sell every edge keyword to x_e. The price setter must be an endpoint
  // that is still unspent; when both are spent, give up one endpoint's
  // h_v (the gadget drops from 2 to 1, the edge gains 1).
  std::vector<std::size_t> setter(gadget.graph.num_edges());
  for (std::size_t e = 0; e < gadget.graph.num_edges(); ++e) {
    const auto [p, q] = gadget.graph.edges[e];
    if (!keeps_h[p]) {
      setter[e] = p;
    } else if (!keeps_h[q]) {
      setter[e] = q;
    } else {
      keeps_h[p] = false;
      setter[e] = p;
    }
  }

  std::vector<Action> normalized = all_skip(gadget.instance);
  CoverExtraction out;
  for (std::size_t v = 0; v < nv; ++v) {
    if (keeps_h[v]) {
      normalized[gadget.h[v]] = Assign{gadget.vertex_bidders[v], gadget.y[v]};
      normalized[gadget.l[v]] = Assign{gadget.y[v], gadget.z[v]};
    } else {
      normalized[gadget.h[v]] = Assign{gadget.y[v], gadget.vertex_bidders[v]};
      out.cover.insert(v);
    }
  }
  for (std::size_t e = 0; e < gadget.graph.num_edges(); ++e) {
    normalized[gadget.edge_keywords[e]] = Assign{gadget.edge_bidders[e], gadget.vertex_bidders[setter[e]]};
  }
  out.normalized = execute(gadget.instance, normalized);
  out.input_value = replay.total;
  return out;
}

CoverExtraction extract_vertex_cover(const VcGadget& gadget, const AuctionTrace& trace) {
  const auto actions = trace.actions();
  auto out = extract_vertex_cover(gadget, actions);
  if (out.input_value != trace.total) {
    throw Error(ErrorCode::kInfeasibleTrace, "recorded total does not match the replay");
  }
  return out;
}

Json vc_bookkeeping(const VcGadget& g) {
  const Instance& in = g.instance;
  Json doc;
  doc["kind"] = "vertex-cover";
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.graph.num_vertices(); ++v) {
    vertices.push_back({{"vertex", g.graph.labels[v]},
                        {"bidder", in.bidder(g.vertex_bidders[v]).id},
                        {"h", in.keyword_id(g.h[v])},
                        {"l", in.keyword_id(g.l[v])},
                        {"y", in.bidder(g.y[v]).id},
                        {"z", in.bidder(g.z[v]).id}});
  }
  doc["vertices"] = vertices;
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.graph.num_edges(); ++e) {
    edges.push_back({{"edge", {g.graph.labels[g.graph.edges[e].first], g.graph.labels[g.graph.edges[e].second]}},
                     {"keyword", in.keyword_id(g.edge_keywords[e])},
                     {"x", in.bidder(g.edge_bidders[e]).id}});
  }
  doc["edges"] = edges;
  return doc;
}

// ---------------------------------------------------------------------------

Instance to_first_price_bids(const Instance& instance) {
  const std::size_t m = instance.num_keywords();
  const std::size_t n = instance.num_bidders();
  std::vector<Money> bids(m * n, 0);
  for (KeywordIndex u = 0; u < m; ++u) {
    for (BidderIndex v = 0; v < n; ++v) {
      Money best = 0;
      for (BidderIndex w = 0; w < n; ++w) {
        if (w != v && instance.bid(u, w) <= instance.bid(u, v)) best = std::max(best, instance.bid(u, w));
      }
      bids[u * n + v] = best;
    }
  }
  return Instance(instance.keyword_ids(), instance.bidders(), std::move(bids));
}

FirstPriceAllocation normalize_first_price(const Instance& transformed,
                                           const FirstPriceAllocation& alloc) {
  if (alloc.winner.size() != transformed.num_keywords()) {
    throw Error(ErrorCode::kInvalidParams, "allocation size does not match keyword count");
  }
  FirstPriceAllocation out(transformed.num_keywords());
  std::vector<Money> spent(transformed.num_bidders(), 0);
  for (KeywordIndex u = 0; u < alloc.winner.size(); ++u) {
    if (!alloc.winner[u]) continue;
    const BidderIndex v = *alloc.winner[u];
    if (spent[v] >= transformed.budget(v)) continue;
    out.winner[u] = v;
    spent[v] = checked_add(spent[v], transformed.bid(u, v));
  }
  return out;
}

BidderIndex price_partner(const Instance& instance, KeywordIndex u, BidderIndex v) {
  Money target = 0;
  for (BidderIndex w = 0; w < instance.num_bidders(); ++w) {
    if (w != v && instance.bid(u, w) <= instance.bid(u, v)) target = std::max(target, instance.bid(u, w));
  }
  for (BidderIndex w = 0; w < instance.num_bidders(); ++w) {
    if (w != v && instance.bid(u, w) == target && instance.bid(u, w) <= instance.bid(u, v)) return w;
  }
  throw Error(ErrorCode::kUnresolvableSecondBidder,
              "no price partner for '" + instance.bidder(v).id + "' on '" + instance.keyword_id(u) + "'");
}

RandomConstructionResult random_construction(const Instance& instance,
                                             const FirstPriceAllocation& alloc, std::uint64_t seed) {
  Rng rng = make_rng(seed, Stream::kMarking);
  std::vector<bool> marked(instance.num_bidders());
  for (std::size_t v = 0; v < marked.size(); ++v) marked[v] = fair_coin(rng);
  return random_construction(instance, alloc, marked);
}

RandomConstructionResult random_construction(const Instance& instance,
                                             const FirstPriceAllocation& alloc,
                                             const std::vector<bool>& marked) {
  const std::size_t n = instance.num_bidders();
  if (marked.size() != n || alloc.winner.size() != instance.num_keywords()) {
    throw Error(ErrorCode::kInvalidParams, "marks or allocation do not match the instance");
  }
  std::vector<std::vector<KeywordIndex>> candidates(n);
  std::vector<BidderIndex> partner(instance.num_keywords(), 0);
  std::vector<Money> price(instance.num_keywords(), 0);
  const Instance transformed = to_first_price_bids(instance);
  for (KeywordIndex u = 0; u < alloc.winner.size(); ++u) {
    if (!alloc.winner[u]) continue;
    const BidderIndex v = *alloc.winner[u];
    if (transformed.bid(u, v) == 0) continue;  // contributes nothing
    partner[u] = price_partner(instance, u, v);
    price[u] = instance.bid(u, partner[u]);
    if (!marked[v] && marked[partner[u]]) candidates[v].push_back(u);
  }

  RandomConstructionResult result;
  result.marked = marked;
  std::vector<Action> actions = all_skip(instance);
  for (BidderIndex v = 0; v < n; ++v) {
    const auto& s = candidates[v];
    if (s.empty()) continue;
    BidderOutcome outcome{v};
    for (KeywordIndex u : s) outcome.candidate_sum = checked_add(outcome.candidate_sum, price[u]);
    std::vector<KeywordIndex> kept = s;
    if (outcome.candidate_sum > instance.budget(v)) {
      outcome.over_budget = true;
      const Money head = outcome.candidate_sum - price[s.back()];
      if (head >= price[s.back()]) {
        kept.pop_back();
      } else {
        kept = {s.back()};
      }
    }
    for (KeywordIndex u : kept) {
      actions[u] = Assign{v, partner[u]};
      outcome.kept_sum = checked_add(outcome.kept_sum, price[u]);
    }
    result.outcomes.push_back(outcome);
  }
  result.trace = execute(instance, actions);
  return result;
}

}  // namespace auctionlab
