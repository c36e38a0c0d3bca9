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

#ifndef PLC_MATROID_HPP_
#define PLC_MATROID_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "plc/bits.hpp"
#include "plc/configuration.hpp"

namespace plc {

struct Simplification;

// A matroid of rank at most three: loops, parallel classes and the line
// geometry over the classes. Classes are sorted by their least member, which
// also names the class inside the lines. A rank-2 matroid with three or more
// classes carries a single line through every class.
class Matroid {
 public:
  Matroid() = default;

  // Lines are point sets; each one is mapped to the classes it meets. Lines
  // that meet fewer than three classes are dropped, and lines meeting in two
  // classes are rejected.
  static Matroid Create(int d, Mask loops, std::vector<Mask> classes,
                        const std::vector<Mask>& lines);
  static Matroid FromConfiguration(const Configuration& c);
  // Rank at most two on `support`, every other point a loop.
  static Matroid UniformRank2(int d, Mask support);

  int d() const { return d_; }
  Mask loops() const { return loops_; }
  const std::vector<Mask>& classes() const { return classes_; }
  // Lines as sets of class representatives.
  const std::vector<Mask>& lines() const { return lines_; }
  int rank() const { return rank_; }

  int Rep(int p) const { return rep_[p]; }
  bool IsLoop(int p) const { return (loops_ & Bit(p)) != 0; }
  Mask Reps() const;
  // Representatives of the classes met by s.
  Mask RepsOf(Mask s) const;
  Mask ClassOf(int p) const;
  bool IsSimple() const;
  int ParallelPairCount() const;

  int RankOf(Mask s) const;
  bool IsDependent(Mask s) const { return RankOf(s) < Size(s); }
  bool IsCircuit(Mask s) const;

  // Lines as unions of their classes.
  std::vector<Mask> LinePointSets() const;

  Matroid AddLoop(int i) const;
  Simplification Simplify() const;
  // perm[p] is the image of p, for p in 1..d; perm[0] is ignored.
  Matroid Relabel(const std::vector<int>& perm) const;

  // Number of dependent sets of size at most three; strictly monotone in the
  // dependency order.
  int SmallDependentCount() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.d_ == b.d_ && a.loops_ == b.loops_ && a.classes_ == b.classes_ &&
           a.lines_ == b.lines_;
  }
  friend std::strong_ordering operator<=>(const Matroid& a, const Matroid& b);

 private:
  void Finish();

  int d_ = 0;
  Mask loops_ = 0;
  std::vector<Mask> classes_;
  std::vector<Mask> lines_;
  int rank_ = 0;
  std::array<std::uint8_t, kMaxPoints + 1> rep_{};
};

struct Simplification {
  Configuration geometry;
  // class_of[p] is the 1-based class label of p, or 0 for a loop.
  std::vector<int> class_of;
  // Points of each class label, index 0 unused.
  std::vector<Mask> members;
};

// True when every dependent set of a is dependent in b.
bool DependencyLeq(const Matroid& a, const Matroid& b);
inline bool DependencyLess(const Matroid& a, const Matroid& b) {
  return !(a == b) && DependencyLeq(a, b);
}

// Checks the circuit axioms on the circuits of size at most four.
bool SatisfiesCircuitAxioms(const Matroid& m);

// Keeps the members of `ms` with no strictly smaller member; duplicates are
// merged. The result is sorted.
std::vector<Matroid> MinimalElements(std::vector<Matroid> ms);

}  // namespace plc

#endif  // PLC_MATROID_HPP_
