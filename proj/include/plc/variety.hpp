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

#ifndef PLC_VARIETY_HPP_
#define PLC_VARIETY_HPP_

#include <map>
#include <string>
#include <vector>

#include "plc/configuration.hpp"
#include "plc/io.hpp"
#include "plc/matroid.hpp"

namespace plc {

enum class Tri { kNo, kYes, kUnknown };
const char* TriName(Tri t);

enum class VarietyKind { kCircuit, kMatroid };

// A circuit variety V_C(N) or a matroid variety V_N, for N on the ambient
// ground set. Flags refer to the configuration over N's parallel classes.
struct VarietyNode {
  Matroid matroid;
  VarietyKind kind = VarietyKind::kCircuit;
  Tri nilpotent = Tri::kUnknown;
  Tri solvable = Tri::kUnknown;
  Tri irreducible = Tri::kUnknown;
  Tri realizable = Tri::kUnknown;
  // -1 when unknown.
  int component_count = -1;
  // Label of one irreducible component of V_N, empty for the whole variety.
  std::string component;
};

enum class FactType { kContainment, kComponents, kRealizable };
const char* FactTypeName(FactType t);

// containment: V_subject is contained in V_object. With `circuit` set the
// subject is the circuit variety V_C(subject), contained in the union of
// the matroid varieties of `objects` and the circuit varieties of
// `circuit_objects`.
// components: V_subject has `value` irreducible components.
// realizable: `value` is 1 when subject is realizable over the complex
// numbers and 0 otherwise.
struct Fact {
  FactType type = FactType::kRealizable;
  Matroid subject;
  Matroid object;
  bool circuit = false;
  std::vector<Matroid> objects;
  std::vector<Matroid> circuit_objects;
  int value = 0;
  std::string citation;
};

struct CoverMatch {
  const Fact* fact = nullptr;
  // The fact's objects carried onto the queried matroid's labels.
  std::vector<Matroid> objects;
  std::vector<Matroid> circuit_objects;
};

// Facts are matched up to relabeling. Containments are keyed by the joint
// canonical form of the pair after deleting the container's loops, which
// are zero on both sides; the other facts by the canonical form of the
// subject's configuration over its parallel classes, so loops and double
// points do not change the key.
class FactTable {
 public:
  // Throws InvalidArgument for a containment whose object is not strictly
  // below its subject in the dependency order, which no true containment
  // can violate, and for a circuit containment without objects.
  void Add(Fact f);
  const std::vector<Fact>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  const Fact* FindContainment(const Matroid& inner, const Matroid& outer) const;
  // Circuit containments are keyed by the canonical form of the subject;
  // every registered one for m is returned, in table order.
  std::vector<CoverMatch> FindCovers(const Matroid& m) const;
  const Fact* FindComponents(const Matroid& m) const;
  const Fact* FindRealizable(const Matroid& m) const;

 private:
  std::vector<Fact> entries_;
  std::map<std::vector<Matroid>, size_t> containment_;
  struct Cover {
    size_t index;
    std::vector<Matroid> objects;
    std::vector<Matroid> circuit_objects;
  };
  std::map<Matroid, std::vector<Cover>> cover_;
  std::map<Matroid, size_t> components_;
  std::map<Matroid, size_t> realizable_;
};

FactTable FactsFromJson(const Json& j);
Json ToJson(const FactTable& t);
FactTable LoadFacts(const std::string& path);
// The fact file shipped with the sources.
std::string DefaultFactsPath();

// The configuration whose points are the parallel classes of m, labeled
// 1..k in class order. A rank-2 matroid with three or more classes gives a
// single line through every point.
Configuration ClassGeometry(const Matroid& m);

VarietyNode MakeNode(const Matroid& m, VarietyKind kind, const FactTable& facts);

// Replaces a circuit variety whose class geometry is nilpotent with maximum
// degree at most two by its matroid variety, and one whose geometry has
// maximum degree at most two and only nilpotent proper restrictions by the
// matroid variety together with the rank-2 variety putting all of its
// classes on one line. Returns the input unchanged otherwise.
std::vector<VarietyNode> Rewrite(const VarietyNode& node, const FactTable& facts);
bool IsRewritable(const Matroid& m);

// The circuit varieties of the minimal matroids above the class geometry,
// lifted back to the ground set with m's loops and classes, followed by the
// matroid variety of m. Throws NotRank3 when m has rank below three.
std::vector<VarietyNode> Expand(const VarietyNode& node, const FactTable& facts);

struct PruneStep {
  VarietyNode removed;
  Matroid container;
  std::string reason;
};

// Removes nodes whose variety lies in the variety of another node, using
// registered containments, the collapsed-line rule for a registered
// realizable container with a three-point line, and the rule that an
// arrangement of rank at most two lies in the uniform rank-2 variety with
// the same or fewer loops. Dependency order alone never removes a node.
std::vector<VarietyNode> Prune(const std::vector<VarietyNode>& nodes,
                               const FactTable& facts,
                               std::vector<PruneStep>* steps = nullptr);

struct CoverStep {
  Matroid circuit;
  std::vector<Matroid> objects;
  std::vector<Matroid> circuit_objects;
  std::string citation;
};

struct Decomposition {
  Configuration ambient;
  std::vector<VarietyNode> components;
  std::vector<PruneStep> pruned;
  // Circuit varieties replaced by a registered circuit containment.
  std::vector<CoverStep> covered;
  // Matroid varieties dropped as registered non-realizable.
  std::vector<VarietyNode> dropped;
  // Circuit varieties left when the depth limit was reached.
  std::vector<VarietyNode> unexpanded;
  bool complete = true;
  int depth_used = 0;
  long long expansions = 0;
  // Circuit varieties skipped because they lie in another pending or
  // rewritten circuit variety.
  long long subsumed = 0;
};

inline constexpr int kDefaultDecompositionDepth = 6;

// Replaces circuit varieties by registered circuit containments whose
// objects all lie above the input, rewrites
// where possible and expands the rest until only matroid varieties remain,
// then splits registered multi-component varieties, drops registered
// non-realizable ones and prunes. When the depth limit is hit the result has
// complete = false and the remaining circuit varieties listed in
// `unexpanded`. Throws NotRank3 for a non-rank-3 input.
Decomposition Decompose(const Configuration& m, const FactTable& facts,
                        int depth = kDefaultDecompositionDepth);

// Components sorted by canonical form, then by labeled matroid and label.
std::vector<Matroid> ComponentForms(const Decomposition& d);

}  // namespace plc

#endif  // PLC_VARIETY_HPP_
