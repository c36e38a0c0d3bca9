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

#ifndef PLC_SYMMETRY_HPP_
#define PLC_SYMMETRY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "plc/configuration.hpp"
#include "plc/matroid.hpp"

namespace plc {

// perm[p] is the image of p for p in 1..d; perm[0] is unused.
using Permutation = std::vector<int>;

Permutation IdentityPermutation(int d);
Permutation Compose(const Permutation& outer, const Permutation& inner);
// Cycle notation such as "(1 2 3)(4 5)", or "()" for the identity.
std::string CycleString(const Permutation& p);

struct PermutationGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

// Permutations preserving loops, parallel classes and dependent triples.
PermutationGroup Automorphisms(const Matroid& m);
PermutationGroup Automorphisms(const Configuration& c);

struct CanonicalLabeling {
  // Images of the input matroids under `perm`.
  std::vector<Matroid> forms;
  Permutation perm;
};

// Least simultaneous relabeling of the matroids (all on the same ground set)
// under the matroid order. Throws GroundSetTooLarge above twelve points.
CanonicalLabeling CanonicalLabel(const std::vector<Matroid>& ms);
Matroid CanonicalForm(const Matroid& m);
bool Isomorphic(const Matroid& a, const Matroid& b);

struct OrbitClass {
  Matroid representative;
  int size = 0;
  std::vector<Matroid> members;
};

// Splits s into orbits of g; classes are sorted by size, then representative.
std::vector<OrbitClass> OrbitClassify(const PermutationGroup& g,
                                      const std::vector<Matroid>& s);

}  // namespace plc

#endif  // PLC_SYMMETRY_HPP_
