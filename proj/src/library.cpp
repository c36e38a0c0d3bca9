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

#include "plc/library.hpp"

#include "plc/error.hpp"

namespace plc {

const std::vector<NamedConfiguration>& Library() {
  static const std::vector<NamedConfiguration> kLibrary = {
      {"qs",
       Configuration::Create(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}),
       "quadrilateral set: four lines in general position, six crossings"},
      {"three-concurrent-lines",
       Configuration::Create(7, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}),
       "three lines through the common point 7"},
      {"fano",
       Configuration::Create(7, {{1, 2, 3},
                                 {1, 5, 6},
                                 {1, 4, 7},
                                 {2, 5, 7},
                                 {2, 4, 6},
                                 {3, 4, 5},
                                 {3, 6, 7}}),
       "Fano plane, the projective plane of order two"},
      {"maclane",
       Configuration::Create(8, {{3, 4, 6},
                                 {2, 6, 7},
                                 {1, 5, 6},
                                 {2, 3, 5},
                                 {1, 4, 7},
                                 {1, 2, 8},
                                 {3, 7, 8},
                                 {4, 5, 8}}),
       "MacLane configuration, the unique 8_3 configuration"},
      {"affine3",
       Configuration::Create(9, {{1, 2, 3},
                                 {4, 5, 6},
                                 {7, 8, 9},
                                 {1, 4, 7},
                                 {2, 5, 8},
                                 {3, 6, 9},
                                 {1, 5, 9},
                                 {2, 6, 7},
                                 {3, 4, 8},
                                 {1, 6, 8},
                                 {2, 4, 9},
                                 {3, 5, 7}}),
       "affine plane of order three on the grid 123/456/789"},
      {"pappus",
       Configuration::Create(9, {{1, 2, 3},
                                 {1, 5, 7},
                                 {1, 6, 8},
                                 {2, 4, 7},
                                 {2, 6, 9},
                                 {3, 4, 8},
                                 {3, 5, 9},
                                 {4, 5, 6},
                                 {7, 8, 9}}),
       "Pappus configuration"},
      {"k9",
       Configuration::Create(9, {{1, 2, 4},
                                 {1, 3, 6},
                                 {1, 7, 9},
                                 {2, 3, 5},
                                 {2, 7, 8},
                                 {3, 8, 9},
                                 {4, 6, 9},
                                 {5, 6, 8},
                                 {4, 5, 7}}),
       "second 9_3 configuration"},
  };
  return kLibrary;
}

std::optional<Configuration> FindNamed(const std::string& name) {
  for (const auto& entry : Library()) {
    if (entry.name == name) return entry.configuration;
  }
  return std::nullopt;
}

Configuration Named(const std::string& name) {
  auto c = FindNamed(name);
  if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown configuration " + name);
  return *c;
}

}  // namespace plc
