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

#ifndef PLC_MINIMAL_HPP_
#define PLC_MINIMAL_HPP_

#include <string>
#include <vector>

#include "plc/bits.hpp"
#include "plc/configuration.hpp"
#include "plc/matroid.hpp"

namespace plc {

// Which part of the poset above the ambient a minimal matroid comes from:
// A has double points and no loops, B is simple, C has a loop.
enum class MinimalKind { kA, kB, kC };

char KindLetter(MinimalKind k);

struct MinimalMember {
  Matroid matroid;
  MinimalKind kind;
  // The formula, triple or point that produced the member.
  std::string witness;
};

struct MinimalSet {
  Configuration ambient;
  std::vector<MinimalMember> members;

  std::vector<Matroid> Matroids() const;
};

struct MinAStats {
  long long formulas_visited = 0;
  long long candidates = 0;
};

// Minimal matroids above m with no loops and at least one double point.
std::vector<MinimalMember> MinAWithWitness(const Configuration& m,
                                           MinAStats* stats = nullptr);
std::vector<Matroid> MinA(const Configuration& m);

// The least configuration above m in which x is dependent.
Configuration MSuperset(const Configuration& m, Mask x);

// Independent triples meeting every line in at most one point.
std::vector<Mask> TriplesS(const Configuration& m);
// The remaining independent triples.
std::vector<Mask> TriplesT(const Configuration& m);

// Minimal simple matroids above m, found by the triple exploration.
std::vector<MinimalMember> MinBWithWitness(const Configuration& m);
std::vector<Configuration> MinB(const Configuration& m);
// Same set from the minimal elements of all M^x; used as a cross-check.
std::vector<Configuration> MinBDirect(const Configuration& m);

// Points i whose loop matroid M(i) is minimal: degree at least two, no
// triangle through i in the non-collinearity graph, and every line off i
// meets a line through i.
Mask MZero(const Configuration& m);
// Same set by searching for a matroid strictly between m and M(i).
Mask MZeroDirect(const Configuration& m);

// All minimal matroids above a rank-3 configuration; throws NotRank3.
MinimalSet MinMatroids(const Configuration& m);

}  // namespace plc

#endif  // PLC_MINIMAL_HPP_
