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

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace auctionlab {

/// Bids, budgets and prices. Exact integers; every arithmetic path that can
/// grow a value goes through the checked helpers below and raises
/// ErrorCode::kOverflow instead of wrapping.
using Money = std::int64_t;

/// Exact rational used for ratios, bounds and means.
using Rational = boost::multiprecision::cpp_rational;

Money checked_add(Money a, Money b);
Money checked_sub(Money a, Money b);
Money checked_mul(Money a, Money b);

/// Serializes as "p/q", always with an explicit denominator.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);
double to_double(const Rational& value);

}  // namespace auctionlab
