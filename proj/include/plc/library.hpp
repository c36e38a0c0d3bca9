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

#ifndef PLC_LIBRARY_HPP_
#define PLC_LIBRARY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "plc/configuration.hpp"

namespace plc {

struct NamedConfiguration {
  std::string name;
  Configuration configuration;
  std::string notes;
};

// The shipped configurations in a fixed order.
const std::vector<NamedConfiguration>& Library();
std::optional<Configuration> FindNamed(const std::string& name);
// Throws InvalidArgument for unknown names.
Configuration Named(const std::string& name);

}  // namespace plc

#endif  // PLC_LIBRARY_HPP_
