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

#include "auctionlab/error.hpp"

namespace auctionlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kSameBidder: return "SameBidder";
    case ErrorCode::kOrderingViolation: return "OrderingViolation";
    case ErrorCode::kNoPositiveBids: return "NoPositiveBids";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotANonMatchingEdge: return "NotANonMatchingEdge";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kInfeasibleTrace: return "InfeasibleTrace";
    case ErrorCode::kUnresolvableSecondBidder: return "UnresolvableSecondBidder";
    case ErrorCode::kNonDeterministicPolicy: return "NonDeterministicPolicy";
    case ErrorCode::kPolicyViolation: return "PolicyViolation";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kEmptyStream: return "EmptyStream";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace auctionlab
