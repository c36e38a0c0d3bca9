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

#ifndef PLC_CONFIGURATION_HPP_
#define PLC_CONFIGURATION_HPP_

#include <vector>

#include "plc/bits.hpp"

namespace plc {

// An antichain of point sets over [d], each with at least three points.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates labels and edge sizes, then drops edges contained in others.
  static Hypergraph Create(int d, std::vector<Mask> edges);
  static Hypergraph FromLists(int d, const std::vector<std::vector<int>>& edges);

  int d() const { return d_; }
  const std::vector<Mask>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(int d, std::vector<Mask> edges) : d_(d), edges_(std::move(edges)) {}
  friend Hypergraph UncheckedHypergraph(int d, std::vector<Mask> edges);

  int d_ = 0;
  std::vector<Mask> edges_;
};

// Builds a hypergraph from edges already known to be valid; only normalizes.
Hypergraph UncheckedHypergraph(int d, std::vector<Mask> edges);

// Removes edges contained in another edge and sorts lexicographically.
std::vector<Mask> Antichain(std::vector<Mask> edges);

// Every edge of a lies inside some edge of b.
bool HypergraphLeq(const Hypergraph& a, const Hypergraph& b);

// A simple matroid of rank at most three given by its lines.
class Configuration {
 public:
  Configuration() = default;

  static Configuration Create(int d, const std::vector<std::vector<int>>& lines);
  static Configuration FromMasks(int d, std::vector<Mask> lines);

  int d() const { return d_; }
  const std::vector<Mask>& lines() const { return lines_; }

  int Degree(int p) const;
  int MaxDegree() const;
  // Union of the lines through p (p included when it lies on a line).
  Mask Neighborhood(int p) const;
  // True when s lies inside one line.
  bool Collinear(Mask s) const;
  bool IsDependentTriple(Mask t) const { return Collinear(t); }
  int Rank() const;

  // Lines l & s with at least three points; labels are kept.
  Configuration Restrict(Mask s) const;
  Configuration Delete(int p) const { return Restrict(FullMask(d_) & ~Bit(p)); }
  Hypergraph AsHypergraph() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int d_ = 0;
  std::vector<Mask> lines_;
};

// Points of degree at least two (resp. three).
Mask SPoints(const Configuration& m);
Mask QPoints(const Configuration& m);
Configuration ReduceS(const Configuration& m);
Configuration ReduceQ(const Configuration& m);
bool IsNilpotent(const Configuration& m);
bool IsSolvable(const Configuration& m);

}  // namespace plc

#endif  // PLC_CONFIGURATION_HPP_
