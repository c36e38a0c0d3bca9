// Copyright 2026 The plc Authors.
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

#include "plc/error.hpp"

namespace plc {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLineTooShort: return "LineTooShort";
    case ErrorCode::kLinesShareTwoPoints: return "LinesShareTwoPoints";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kAlreadyLoop: return "AlreadyLoop";
    case ErrorCode::kRankTooLow: return "RankTooLow";
    case ErrorCode::kNotRank3: return "NotRank3";
    case ErrorCode::kInconsistentFormula: return "InconsistentFormula";
    case ErrorCode::kPropertyXViolated: return "PropertyXViolated";
    case ErrorCode::kAlreadyDependent: return "AlreadyDependent";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kDepthExhausted: return "DepthExhausted";
    case ErrorCode::kXMemberNotTriple: return "XMemberNotTriple";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace plc
