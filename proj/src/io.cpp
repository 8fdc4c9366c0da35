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

#include "auctionlab/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "auctionlab/error.hpp"

namespace auctionlab {
namespace {

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::string string_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_string()) throw Error(ErrorCode::kParse, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Money money_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (v.is_number_unsigned()) {
    const auto raw = v.get<std::uint64_t>();
    if (raw > static_cast<std::uint64_t>(std::numeric_limits<Money>::max())) {
      throw Error(ErrorCode::kOverflow, std::string("field '") + name + "' exceeds 64-bit range");
    }
    return static_cast<Money>(raw);
  }
  if (v.is_number_integer()) return v.get<Money>();
  // Integer literals past the unsigned range arrive as doubles.
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::trunc(d) == d && std::fabs(d) >= 9223372036854775808.0) {
      throw Error(ErrorCode::kOverflow, std::string("field '") + name + "' exceeds 64-bit range");
    }
  }
  throw Error(ErrorCode::kParse, std::string("field '") + name + "' must be an integer");
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json doc;
  doc["keywords"] = instance.keyword_ids();
  Json bidders = Json::array();
  for (const auto& b : instance.bidders()) bidders.push_back({{"id", b.id}, {"budget", b.budget}});
  doc["bidders"] = std::move(bidders);
  Json bids = Json::array();
  for (KeywordIndex u = 0; u < instance.num_keywords(); ++u) {
    for (BidderIndex v = 0; v < instance.num_bidders(); ++v) {
      if (instance.bid(u, v) != 0) {
        bids.push_back({{"keyword", instance.keyword_id(u)},
                        {"bidder", instance.bidder(v).id},
                        {"amount", instance.bid(u, v)}});
      }
    }
  }
  doc["bids"] = std::move(bids);
  return doc;
}

Instance instance_from_json(const Json& doc) {
  const Json& keywords = field(doc, "keywords");
  const Json& bidders = field(doc, "bidders");
  if (!keywords.is_array() || !bidders.is_array()) {
    throw Error(ErrorCode::kParse, "'keywords' and 'bidders' must be arrays");
  }
  std::vector<std::string> kw_ids;
  std::map<std::string, KeywordIndex> kw_index;
  for (const auto& k : keywords) {
    if (!k.is_string()) throw Error(ErrorCode::kParse, "keyword ids must be strings");
    kw_index.try_emplace(k.get<std::string>(), kw_ids.size());
    kw_ids.push_back(k.get<std::string>());
  }
  std::vector<Bidder> bidder_list;
  std::map<std::string, BidderIndex> bidder_index;
  for (const auto& b : bidders) {
    Bidder entry{string_field(b, "id"), money_field(b, "budget")};
    bidder_index.try_emplace(entry.id, bidder_list.size());
    bidder_list.push_back(std::move(entry));
  }
  std::vector<Money> bids(kw_ids.size() * bidder_list.size(), 0);
  if (doc.contains("bids")) {
    const Json& list = doc.at("bids");
    if (!list.is_array()) throw Error(ErrorCode::kParse, "'bids' must be an array");
    for (const auto& entry : list) {
      const auto kw = string_field(entry, "keyword");
      const auto bd = string_field(entry, "bidder");
      const auto k = kw_index.find(kw);
      if (k == kw_index.end()) throw Error(ErrorCode::kUnknownId, "keyword '" + kw + "'");
      const auto b = bidder_index.find(bd);
      if (b == bidder_index.end()) throw Error(ErrorCode::kUnknownId, "bidder '" + bd + "'");
      bids[k->second * bidder_list.size() + b->second] = money_field(entry, "amount");
    }
  }
  return Instance(std::move(kw_ids), std::move(bidder_list), std::move(bids));
}

Json trace_to_json(const Instance& instance, const AuctionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["keyword"] = instance.keyword_id(s.keyword);
    if (const auto* a = std::get_if<Assign>(&s.action)) {
      step["action"] = {{"first", instance.bidder(a->first).id},
                        {"second", instance.bidder(a->second).id}};
    } else {
      step["action"] = "skip";
    }
    step["price"] = s.price;
    steps.push_back(std::move(step));
  }
  Json doc;
  doc["trace"] = std::move(steps);
  doc["total"] = trace.total;
  return doc;
}

std::vector<Action> actions_from_json(const Instance& instance, const Json& doc) {
  const Json& steps = field(doc, "trace");
  if (!steps.is_array()) throw Error(ErrorCode::kParse, "'trace' must be an array");
  std::vector<Action> actions(instance.num_keywords(), Skip{});
  std::vector<bool> seen(instance.num_keywords(), false);
  for (const auto& step : steps) {
    const KeywordIndex u = instance.keyword_index(string_field(step, "keyword"));
    if (seen[u]) throw Error(ErrorCode::kParse, "keyword '" + instance.keyword_id(u) + "' listed twice");
    seen[u] = true;
    const Json& action = field(step, "action");
    if (action.is_string()) {
      if (action.get<std::string>() != "skip") throw Error(ErrorCode::kParse, "unknown action string");
      continue;
    }
    actions[u] = Assign{instance.bidder_index(string_field(action, "first")),
                        instance.bidder_index(string_field(action, "second"))};
  }
  return actions;
}

Json matching_to_json(const Instance& instance, const Matching& matching) {
  Json pairs = Json::array();
  for (KeywordIndex u = 0; u < matching.bidder_of.size(); ++u) {
    if (matching.bidder_of[u]) {
      pairs.push_back({{"keyword", instance.keyword_id(u)},
                       {"bidder", instance.bidder(*matching.bidder_of[u]).id}});
    }
  }
  Json doc;
  doc["matching"] = std::move(pairs);
  doc["size"] = matching.size();
  return doc;
}

Json allocation_to_json(const Instance& instance, const FirstPriceAllocation& alloc) {
  const auto payments = first_price_payments(instance, alloc);
  Json pairs = Json::array();
  Money total = 0;
  for (KeywordIndex u = 0; u < alloc.winner.size(); ++u) {
    if (alloc.winner[u]) {
      pairs.push_back({{"keyword", instance.keyword_id(u)},
                       {"winner", instance.bidder(*alloc.winner[u]).id},
                       {"payment", payments[u]}});
      total = checked_add(total, payments[u]);
    }
  }
  Json doc;
  doc["allocation"] = std::move(pairs);
  doc["total"] = total;
  return doc;
}

Graph read_edge_list(std::istream& in) {
  Graph g;
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, g.labels.size());
    if (inserted) g.labels.push_back(label);
    return it->second;
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a;
    std::string b;
    if (!(ls >> a)) continue;
    std::string extra;
    if (!(ls >> b) || (ls >> extra)) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const std::size_t ia = vertex(a);
    const std::size_t ib = vertex(b);
    g.edges.emplace_back(ia, ib);
  }
  check_simple(g);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [a, b] : g.edges) out << g.labels[a] << ' ' << g.labels[b] << '\n';
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, "'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << text;
}

}  // namespace auctionlab
