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

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace auctionlab {

/// Undirected simple graph used as vertex cover input.
struct Graph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t num_vertices() const { return labels.size(); }
  std::size_t num_edges() const { return edges.size(); }
};

/// Vertices labelled "0".."n-1". Throws kInvalidParams on self-loops,
/// repeated edges or out-of-range endpoints.
Graph make_graph(std::size_t num_vertices,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges);

void check_simple(const Graph& g);

bool is_vertex_cover(const Graph& g, const std::set<std::size_t>& cover);

/// Smallest vertex cover by exhaustive subset search (num_vertices <= 20).
std::size_t min_vertex_cover_size(const Graph& g);

/// Every connected simple graph on exactly n vertices (labelled, n <= 5).
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace auctionlab
