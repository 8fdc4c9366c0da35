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

#include "auctionlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "auctionlab/error.hpp"

namespace auctionlab {

void check_simple(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : g.edges) {
    if (a >= g.num_vertices() || b >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidParams, "edge endpoint out of range");
    }
    if (a == b) throw Error(ErrorCode::kInvalidParams, "self-loop on vertex '" + g.labels[a] + "'");
    if (!seen.insert(std::minmax(a, b)).second) {
      throw Error(ErrorCode::kInvalidParams,
                  "repeated edge '" + g.labels[a] + "'-'" + g.labels[b] + "'");
    }
  }
}

Graph make_graph(std::size_t num_vertices,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  for (std::size_t v = 0; v < num_vertices; ++v) g.labels.push_back(std::to_string(v));
  g.edges = edges;
  check_simple(g);
  return g;
}

bool is_vertex_cover(const Graph& g, const std::set<std::size_t>& cover) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return cover.contains(e.first) || cover.contains(e.second);
  });
}

std::size_t min_vertex_cover_size(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw Error(ErrorCode::kTooLarge, "exhaustive vertex cover limited to 20 vertices");
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    const bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return ((mask >> e.first) & 1u) != 0 || ((mask >> e.second) & 1u) != 0;
    });
    if (covers) best = size;
  }
  return best;
}

namespace {

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (auto [a, b] : edges) {
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > 5) throw Error(ErrorCode::kTooLarge, "graph enumeration limited to 5 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) edges.push_back(slots[i]);
    }
    if (connected(n, edges)) out.push_back(make_graph(n, edges));
  }
  return out;
}

}  // namespace auctionlab
