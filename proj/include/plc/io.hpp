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

#ifndef PLC_IO_HPP_
#define PLC_IO_HPP_

#include <string>

#include "json.hpp"
#include "plc/configuration.hpp"
#include "plc/matroid.hpp"
#include "plc/xmatroid.hpp"

namespace plc {

using Json = nlohmann::ordered_json;

// {"d": int, "lines": [[int, ...], ...]}
Json ToJson(const Configuration& c);
// {"d", "loops", "classes", "lines_over_classes", "rank"}; line entries are
// zero-based positions in "classes".
Json ToJson(const Matroid& m);
// {"d": int, "X": [[int, ...], ...]}
Json ToJson(const XSystem& s);

// Shape errors raise ParseError; semantic errors keep their own codes.
Configuration ConfigurationFromJson(const Json& j);
Matroid MatroidFromJson(const Json& j);
XSystem XSystemFromJson(const Json& j);

std::string ReadFile(const std::string& path);
Json ParseJsonText(const std::string& text, const std::string& source);

// A library name, or a path to a configuration file.
Configuration ParseConfig(const std::string& name_or_path);

// Compact one-line form, e.g. "d=7 loops{3} classes{12,45} lines{126}".
std::string Describe(const Matroid& m);

}  // namespace plc

#endif  // PLC_IO_HPP_
