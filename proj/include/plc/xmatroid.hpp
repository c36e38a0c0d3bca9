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

#ifndef PLC_XMATROID_HPP_
#define PLC_XMATROID_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plc/bits.hpp"
#include "plc/matroid.hpp"

namespace plc {

// A family X of subsets of [d], each of size at least two, asked to be
// circuits. Duplicate members are merged.
class XSystem {
 public:
  XSystem() = default;
  // Throws LabelOutOfRange for a member outside [d] and InvalidArgument for
  // a member with fewer than two points.
  static XSystem Create(int d, std::vector<Mask> x);

  int d() const { return d_; }
  const std::vector<Mask>& x() const { return x_; }

 private:
  int d_ = 0;
  std::vector<Mask> x_;
};

// Tables over all subsets of [d], indexed by mask.
using SetFunction = std::vector<int>;

inline constexpr int kMaxTableD = 10;
inline constexpr int kMaxValD = 20;

// min over proper X-sequences S of |F u X_1 u ... u X_k| - k, the empty
// sequence included. Branch and bound over sequence prefixes, memoized on the
// covered union. Throws GroundSetTooLarge for d above kMaxValD.
int ValX(const XSystem& sys, Mask f);

// val_X for every subset at once, from the longest proper sequence reaching
// each union. Throws GroundSetTooLarge for d above kMaxTableD.
SetFunction ValTable(const XSystem& sys);

enum class VxOrder {
  // Repeated sweeps; condition (ii) and (iii) updates on one-point steps,
  // which generate the general ones.
  kSweep,
  // The first applicable update in priority order (i), (ii), (iii), pairs
  // scanned by (|A u B|, A, B) ascending. Quartic in 2^d; for small d.
  kPriority,
  // As kPriority with every scan reversed.
  kPriorityReversed,
};

// The largest function below val_X closed under the three update rules.
// Every update order reaches it. Throws GroundSetTooLarge for d above
// kMaxTableD, and InvalidArgument when a value drops below zero, which
// happens only when no X-matroid exists.
SetFunction VxTable(const XSystem& sys, VxOrder order = VxOrder::kSweep);

// The first pair (A, B) in (A, B) order with f(A u B) + f(A n B) >
// f(A) + f(B), or nothing when f is submodular. f covers all subsets of [d].
std::optional<std::pair<Mask, Mask>> SubmodularWitness(const SetFunction& f, int d);

// True when every member of X is a circuit of m.
bool IsXMatroid(const Matroid& m, const XSystem& sys);

// Minimal matroids of rank at most three in which every member of X is a
// circuit. Throws XMemberNotTriple when a member is not a triple, and
// InvalidArgument when d < 3.
std::vector<Matroid> MinimalXMatroidsRank3(const XSystem& sys);

// "mask,value" lines, ascending mask.
std::string DumpTable(const SetFunction& f);

}  // namespace plc

#endif  // PLC_XMATROID_HPP_
