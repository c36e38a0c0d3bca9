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

#ifndef PLC_ORACLE_HPP_
#define PLC_ORACLE_HPP_

#include <functional>
#include <vector>

#include "plc/bits.hpp"
#include "plc/configuration.hpp"
#include "plc/matroid.hpp"

namespace plc {

struct EnumerationBudget {
  int max_d = 6;
  long long max_count = 20'000'000;
  // Ground sets of size seven are refused unless set.
  bool allow_seven = false;
};

// Every linear hypergraph with edges of size at least three on [k], in the
// lexicographic order of edge choices. Includes the single all-point line.
std::vector<Configuration> AllConfigurations(int k);

// Calls sink with every matroid of rank at most three on [d]: loops by
// ascending mask, partitions in restricted-growth order, then line sets.
// Throws BudgetExceeded.
void EnumerateAll(int d, const EnumerationBudget& budget,
                  const std::function<void(const Matroid&)>& sink);

// Matroids strictly above m.
std::vector<Matroid> EnumerateAbove(const Matroid& m,
                                    const EnumerationBudget& budget = {});
std::vector<Matroid> BruteMinimal(const Matroid& m,
                                  const EnumerationBudget& budget = {});

// Minimal matroids in which every member of x is a circuit.
std::vector<Matroid> BruteMinimalX(int d, const std::vector<Mask>& x,
                                   const EnumerationBudget& budget = {});

}  // namespace plc

#endif  // PLC_ORACLE_HPP_
