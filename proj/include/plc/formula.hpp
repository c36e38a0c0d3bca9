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

#ifndef PLC_FORMULA_HPP_
#define PLC_FORMULA_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plc/bits.hpp"
#include "plc/configuration.hpp"
#include "plc/matroid.hpp"

namespace plc {

// Forbidden-pair adjacency indexed by point: adj[p] holds the points that may
// not share two edges with p.
using ForbidAdjacency = std::array<Mask, kMaxPoints + 1>;

// A conjunction of identification and separation atoms, kept as a partition
// of [d] plus forbidden pairs between class representatives.
class Formula {
 public:
  Formula() = default;
  explicit Formula(int d);

  // Throws InconsistentFormula when a forbidden pair ends up in one class.
  static Formula FromAtoms(int d,
                           const std::vector<std::pair<int, int>>& merges,
                           const std::vector<std::pair<int, int>>& forbids);

  int d() const { return d_; }
  int Rep(int p) const { return rep_[p]; }
  Mask ClassOf(int p) const { return class_[rep_[p]]; }
  Mask Reps() const;
  std::vector<Mask> Classes() const;
  bool IsMerged(int a, int b) const { return rep_[a] == rep_[b]; }
  bool IsForbidden(int a, int b) const {
    return (forbid_[rep_[a]] & Bit(rep_[b])) != 0;
  }
  bool IsDecided(int a, int b) const {
    return IsMerged(a, b) || IsForbidden(a, b);
  }
  bool HasMerges() const;
  const ForbidAdjacency& forbid() const { return forbid_; }
  std::vector<std::pair<int, int>> ForbiddenPairs() const;

  // Empty when the new atom contradicts the formula.
  std::optional<Formula> Merge(int a, int b) const;
  std::optional<Formula> Forbid(int a, int b) const;

  // Canonical encoding; equal formulas have equal keys.
  std::string Key() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.Key() == b.Key();
  }

 private:
  int d_ = 0;
  std::array<std::uint8_t, kMaxPoints + 1> rep_{};
  std::array<Mask, kMaxPoints + 1> class_{};
  ForbidAdjacency forbid_{};
};

// Called with each edge created by a merge step; returning false stops the
// closure with the current edges.
using MergeObserver = std::function<bool(Mask)>;

// Smallest hypergraph above `edges` in which no forbidden pair lies in the
// intersection of two distinct edges.
std::vector<Mask> MergeClosure(std::vector<Mask> edges,
                               const ForbidAdjacency& forbid,
                               const MergeObserver& observer = nullptr);
Hypergraph MergeClosure(const Hypergraph& h,
                        const std::vector<std::pair<int, int>>& forbid);

// Images of the edges under the partition of f, as sets of representatives;
// images with fewer than three classes are dropped.
std::vector<Mask> QuotientEdges(const std::vector<Mask>& edges,
                                const Formula& f);
Hypergraph Quotient(const Hypergraph& h, const Formula& f);

// The hypergraph of f over the class representatives.
Hypergraph DeltaF(const Hypergraph& h, const Formula& f);
// Same value computed from the hypergraph of a formula that f extends.
Hypergraph DeltaFExtend(const Hypergraph& parent_delta, const Formula& f);

// Distinct edges meet in at most one point.
bool IsLinear(const std::vector<Mask>& edges);
bool HasPropertyX(const Hypergraph& lines, const Formula& f);

// The least matroid realizing f above m; throws PropertyXViolated.
Matroid RealizeFormula(const Configuration& m, const Formula& f);
// Same, from an already computed hypergraph of f.
Matroid RealizeFromDelta(int d, const Formula& f, const Hypergraph& delta);

// The least point-line configuration above h.
Configuration PlcClosure(const Hypergraph& h);

}  // namespace plc

#endif  // PLC_FORMULA_HPP_
