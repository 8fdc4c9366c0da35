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

// JSON documents for instances, traces and matchings, plus the plain-text
// edge-list graph format. Integers are written and read exactly; a
// floating-point number anywhere a money value is expected is a parse error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "auctionlab/allocation.hpp"
#include "auctionlab/auction.hpp"
#include "auctionlab/graph.hpp"
#include "auctionlab/instance.hpp"

namespace auctionlab {

using Json = nlohmann::ordered_json;

Json instance_to_json(const Instance& instance);
/// Throws kParse for malformed documents, kUnknownId for bids naming
/// undeclared ids and kOverflow for integers beyond 64 bits.
Instance instance_from_json(const Json& doc);

Json trace_to_json(const Instance& instance, const AuctionTrace& trace);
/// Reads the actions back out of a trace document (prices are ignored; the
/// caller replays them through execute()).
std::vector<Action> actions_from_json(const Instance& instance, const Json& doc);

Json matching_to_json(const Instance& instance, const Matching& matching);
Json allocation_to_json(const Instance& instance, const FirstPriceAllocation& alloc);

/// One "u v" pair per line; blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace auctionlab
