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

#ifndef PLC_ERROR_HPP_
#define PLC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace plc {

enum class ErrorCode {
  kLineTooShort,
  kLinesShareTwoPoints,
  kLabelOutOfRange,
  kGroundSetMismatch,
  kAlreadyLoop,
  kRankTooLow,
  kNotRank3,
  kInconsistentFormula,
  kPropertyXViolated,
  kAlreadyDependent,
  kGroundSetTooLarge,
  kDepthExhausted,
  kXMemberNotTriple,
  kBudgetExceeded,
  kParseError,
  kInvalidArgument,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plc

#endif  // PLC_ERROR_HPP_
