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

#ifndef PLC_CLI_HPP_
#define PLC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "plc/io.hpp"
#include "plc/minimal.hpp"
#include "plc/variety.hpp"

namespace plc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitExhausted = 2;

// Runs one command; args excludes the program name. Reports go to out,
// diagnostics to err. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// Structured encodings written by --json.
Json ToJson(const MinimalSet& s);
Json ToJson(const Decomposition& d);

}  // namespace plc

#endif  // PLC_CLI_HPP_
