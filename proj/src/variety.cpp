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

#include "plc/variety.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "plc/error.hpp"
#include "plc/minimal.hpp"
#include "plc/symmetry.hpp"

#ifndef PLC_DATA_DIR
#define PLC_DATA_DIR "data"
#endif

namespace plc {
namespace {

// Key for the facts about a single matroid: its class geometry up to
// relabeling.
Matroid GeometryKey(const Matroid& m) {
  return CanonicalForm(Matroid::FromConfiguration(ClassGeometry(m)));
}

bool AllDeletionsNilpotent(const Configuration& g) {
  // Restriction never raises a degree, so nilpotency passes to every
  // restriction and checking the one-point deletions suffices.
  for (int p = 1; p <= g.d(); ++p) {
    if (!IsNilpotent(g.Delete(p))) return false;
  }
  return true;
}

// Deletes the points of s and relabels the rest as 1..d-|s| in order.
Matroid DeletePoints(const Matroid& m, Mask s) {
  std::vector<int> image(m.d() + 1, 0);
  int next = 0;
  for (int p = 1; p <= m.d(); ++p) {
    if (!Contains(s, Bit(p))) image[p] = ++next;
  }
  auto map = [&](Mask x) {
    Mask out = 0;
    ForEach(x & ~s, [&](int p) { out |= Bit(image[p]); });
    return out;
  };
  std::vector<Mask> classes;
  for (Mask c : m.classes()) {
    if (map(c) != 0) classes.push_back(map(c));
  }
  std::vector<Mask> lines;
  for (Mask l : m.LinePointSets()) lines.push_back(map(l));
  return Matroid::Create(next, map(m.loops()), classes, lines);
}

// Loops of the container are zero vectors on both sides, so a containment
// holds exactly when it holds with those points deleted.
std::vector<Matroid> StripOuterLoops(const Matroid& inner, const Matroid& outer) {
  return {DeletePoints(inner, outer.loops()), DeletePoints(outer, outer.loops())};
}

Permutation Inverse(const Permutation& p) {
  Permutation out(p.size(), 0);
  for (size_t i = 1; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

// Lifts a matroid over the classes of m back to m's ground set.
Matroid Lift(const Matroid& small, const Matroid& m) {
  const std::vector<Mask>& members = m.classes();
  auto up = [&](Mask s) {
    Mask out = 0;
    ForEach(s, [&](int label) { out |= members[label - 1]; });
    return out;
  };
  std::vector<Mask> classes;
  for (Mask c : small.classes()) classes.push_back(up(c));
  std::vector<Mask> lines;
  for (Mask l : small.LinePointSets()) lines.push_back(up(l));
  return Matroid::Create(m.d(), m.loops() | up(small.loops()), classes, lines);
}

std::vector<std::string> ComponentLabels(int n) {
  if (n == 2) return {"+", "-"};
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

bool CollapsedLineOf(const Matroid& full_inner, const Matroid& full_outer,
                     const FactTable& facts) {
  if (!Contains(full_inner.loops(), full_outer.loops())) return false;
  std::vector<Matroid> pair = StripOuterLoops(full_inner, full_outer);
  const Matroid& inner = pair[0];
  const Matroid& outer = pair[1];
  if (outer.loops() != 0 || !outer.IsSimple() || outer.rank() != 3) return false;
  if (inner.loops() != 0 || inner.rank() != 3) return false;
  const Fact* r = facts.FindRealizable(outer);
  if (r == nullptr || r->value != 1) return false;
  Mask ground = FullMask(outer.d());
  for (Mask l : outer.lines()) {
    if (Size(l) != 3) continue;
    if (inner == Matroid::Create(outer.d(), 0, {ground & ~l}, {l})) return true;
  }
  return false;
}

bool AllAbove(const CoverMatch& c, const Matroid& top) {
  for (const Matroid& o : c.objects) {
    if (!DependencyLeq(top, o)) return false;
  }
  for (const Matroid& o : c.circuit_objects) {
    if (!DependencyLeq(top, o)) return false;
  }
  return true;
}

bool RankTwoInside(const Matroid& inner, const Matroid& outer) {
  return outer.rank() <= 2 && outer.ParallelPairCount() == 0 &&
         inner.rank() <= 2 && DependencyLess(outer, inner);
}

}  // namespace

const char* TriName(Tri t) {
  switch (t) {
    case Tri::kNo: return "no";
    case Tri::kYes: return "yes";
    case Tri::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* FactTypeName(FactType t) {
  switch (t) {
    case FactType::kContainment: return "containment";
    case FactType::kComponents: return "components";
    case FactType::kRealizable: return "realizable";
  }
  return "realizable";
}

void FactTable::Add(Fact f) {
  size_t index = entries_.size();
  switch (f.type) {
    case FactType::kContainment: {
      if (f.circuit) {
        if (f.objects.empty() && f.circuit_objects.empty()) {
          throw Error(ErrorCode::kInvalidArgument, "circuit containment without objects");
        }
        CanonicalLabeling c = CanonicalLabel({f.subject});
        std::vector<Matroid> objects;
        std::vector<Matroid> circuit_objects;
        for (const Matroid& o : f.objects) {
          if (o.d() != f.subject.d()) {
            throw Error(ErrorCode::kInvalidArgument, "containment object size mismatch");
          }
          objects.push_back(o.Relabel(c.perm));
        }
        for (const Matroid& o : f.circuit_objects) {
          if (o.d() != f.subject.d()) {
            throw Error(ErrorCode::kInvalidArgument, "containment object size mismatch");
          }
          circuit_objects.push_back(o.Relabel(c.perm));
        }
        cover_[c.forms[0]].push_back({index, std::move(objects), std::move(circuit_objects)});
        break;
      }
      if (f.subject.d() != f.object.d() || !DependencyLess(f.object, f.subject)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "containment whose object is not strictly below its subject");
      }
      containment_[CanonicalLabel(StripOuterLoops(f.subject, f.object)).forms] =
          index;
      break;
    }
    case FactType::kComponents:
      if (f.value < 1) {
        throw Error(ErrorCode::kInvalidArgument, "component count below one");
      }
      components_[GeometryKey(f.subject)] = index;
      break;
    case FactType::kRealizable:
      if (f.value != 0 && f.value != 1) {
        throw Error(ErrorCode::kInvalidArgument, "realizable value must be 0 or 1");
      }
      realizable_[GeometryKey(f.subject)] = index;
      break;
  }
  entries_.push_back(std::move(f));
}

const Fact* FactTable::FindContainment(const Matroid& inner,
                                       const Matroid& outer) const {
  if (containment_.empty() || inner.d() != outer.d() ||
      !DependencyLess(outer, inner)) {
    return nullptr;
  }
  auto it = containment_.find(CanonicalLabel(StripOuterLoops(inner, outer)).forms);
  return it == containment_.end() ? nullptr : &entries_[it->second];
}

std::vector<CoverMatch> FactTable::FindCovers(const Matroid& m) const {
  std::vector<CoverMatch> out;
  if (cover_.empty()) return out;
  CanonicalLabeling c = CanonicalLabel({m});
  auto it = cover_.find(c.forms[0]);
  if (it == cover_.end()) return out;
  Permutation back = Inverse(c.perm);
  for (const Cover& cover : it->second) {
    CoverMatch match;
    match.fact = &entries_[cover.index];
    for (const Matroid& o : cover.objects) match.objects.push_back(o.Relabel(back));
    for (const Matroid& o : cover.circuit_objects) {
      match.circuit_objects.push_back(o.Relabel(back));
    }
    out.push_back(std::move(match));
  }
  return out;
}

const Fact* FactTable::FindComponents(const Matroid& m) const {
  if (components_.empty()) return nullptr;
  auto it = components_.find(GeometryKey(m));
  return it == components_.end() ? nullptr : &entries_[it->second];
}

const Fact* FactTable::FindRealizable(const Matroid& m) const {
  if (realizable_.empty()) return nullptr;
  auto it = realizable_.find(GeometryKey(m));
  return it == realizable_.end() ? nullptr : &entries_[it->second];
}

FactTable FactsFromJson(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, "facts: expected array");
  FactTable t;
  for (const Json& e : j) {
    if (!e.is_object() || !e.contains("type") || !e.at("type").is_string()) {
      throw Error(ErrorCode::kParseError, "fact: missing type");
    }
    std::string type = e.at("type").get<std::string>();
    Fact f;
    if (type == "containment") {
      f.type = FactType::kContainment;
    } else if (type == "components") {
      f.type = FactType::kComponents;
    } else if (type == "realizable") {
      f.type = FactType::kRealizable;
    } else {
      throw Error(ErrorCode::kParseError, "fact: unknown type " + type);
    }
    if (!e.contains("subject")) throw Error(ErrorCode::kParseError, "fact: missing subject");
    f.subject = MatroidFromJson(e.at("subject"));
    if (f.type == FactType::kContainment &&
        (e.contains("objects") || e.contains("circuit_objects"))) {
      f.circuit = true;
      auto read = [&](const char* key, std::vector<Matroid>* into) {
        if (!e.contains(key)) return;
        const Json& os = e.at(key);
        if (!os.is_array()) {
          throw Error(ErrorCode::kParseError, std::string("fact: ") + key + " must be an array");
        }
        for (const Json& o : os) into->push_back(MatroidFromJson(o));
      };
      read("objects", &f.objects);
      read("circuit_objects", &f.circuit_objects);
    } else if (f.type == FactType::kContainment) {
      if (!e.contains("object")) throw Error(ErrorCode::kParseError, "fact: missing object");
      f.object = MatroidFromJson(e.at("object"));
    } else {
      if (!e.contains("value")) throw Error(ErrorCode::kParseError, "fact: missing value");
      const Json& v = e.at("value");
      if (v.is_boolean()) {
        f.value = v.get<bool>() ? 1 : 0;
      } else if (v.is_number_integer()) {
        f.value = v.get<int>();
      } else {
        throw Error(ErrorCode::kParseError, "fact: bad value");
      }
    }
    if (e.contains("citation")) {
      if (!e.at("citation").is_string()) {
        throw Error(ErrorCode::kParseError, "fact: citation must be a string");
      }
      f.citation = e.at("citation").get<std::string>();
    }
    t.Add(std::move(f));
  }
  return t;
}

Json ToJson(const FactTable& t) {
  Json out = Json::array();
  for (const Fact& f : t.entries()) {
    Json e = {{"type", FactTypeName(f.type)}, {"subject", ToJson(f.subject)}};
    if (f.type == FactType::kContainment && f.circuit) {
      e["objects"] = Json::array();
      for (const Matroid& o : f.objects) e["objects"].push_back(ToJson(o));
      if (!f.circuit_objects.empty()) {
        e["circuit_objects"] = Json::array();
        for (const Matroid& o : f.circuit_objects) e["circuit_objects"].push_back(ToJson(o));
      }
    } else if (f.type == FactType::kContainment) {
      e["object"] = ToJson(f.object);
    } else if (f.type == FactType::kRealizable) {
      e["value"] = f.value == 1;
    } else {
      e["value"] = f.value;
    }
    e["citation"] = f.citation;
    out.push_back(e);
  }
  return out;
}

FactTable LoadFacts(const std::string& path) {
  return FactsFromJson(ParseJsonText(ReadFile(path), path));
}

std::string DefaultFactsPath() { return std::string(PLC_DATA_DIR) + "/facts.json"; }

Configuration ClassGeometry(const Matroid& m) {
  const std::vector<Mask>& classes = m.classes();
  int k = static_cast<int>(classes.size());
  std::vector<Mask> lines;
  for (Mask l : m.lines()) {
    Mask labels = 0;
    for (int i = 0; i < k; ++i) {
      if (Contains(l, Bit(Lowest(classes[i])))) labels |= Bit(i + 1);
    }
    lines.push_back(labels);
  }
  return Configuration::FromMasks(k, lines);
}

VarietyNode MakeNode(const Matroid& m, VarietyKind kind, const FactTable& facts) {
  VarietyNode n;
  n.matroid = m;
  n.kind = kind;
  Configuration g = ClassGeometry(m);
  n.nilpotent = IsNilpotent(g) ? Tri::kYes : Tri::kNo;
  n.solvable = IsSolvable(g) ? Tri::kYes : Tri::kNo;
  if (m.rank() <= 2) {
    n.realizable = Tri::kYes;
    n.component_count = 1;
  } else {
    if (const Fact* f = facts.FindRealizable(m)) {
      n.realizable = f->value == 1 ? Tri::kYes : Tri::kNo;
    }
    if (const Fact* f = facts.FindComponents(m)) n.component_count = f->value;
  }
  if (kind == VarietyKind::kMatroid) {
    if (n.component_count == 1 || n.solvable == Tri::kYes) {
      n.irreducible = Tri::kYes;
    } else if (n.component_count > 1) {
      n.irreducible = Tri::kNo;
    }
  }
  return n;
}

bool IsRewritable(const Matroid& m) {
  Configuration g = ClassGeometry(m);
  if (g.MaxDegree() > 2) return false;
  return IsNilpotent(g) || AllDeletionsNilpotent(g);
}

std::vector<VarietyNode> Rewrite(const VarietyNode& node, const FactTable& facts) {
  if (node.kind != VarietyKind::kCircuit) return {node};
  const Matroid& m = node.matroid;
  Configuration g = ClassGeometry(m);
  if (g.MaxDegree() > 2) return {node};
  if (IsNilpotent(g)) return {MakeNode(m, VarietyKind::kMatroid, facts)};
  if (!AllDeletionsNilpotent(g)) return {node};
  Matroid flat = Matroid::Create(m.d(), m.loops(), m.classes(),
                                 {FullMask(m.d()) & ~m.loops()});
  return {MakeNode(m, VarietyKind::kMatroid, facts),
          MakeNode(flat, VarietyKind::kMatroid, facts)};
}

std::vector<VarietyNode> Expand(const VarietyNode& node, const FactTable& facts) {
  const Matroid& m = node.matroid;
  if (m.rank() != 3) {
    throw Error(ErrorCode::kNotRank3, "expansion needs a rank-3 matroid");
  }
  std::vector<VarietyNode> out;
  for (const Matroid& small : MinMatroids(ClassGeometry(m)).Matroids()) {
    out.push_back(MakeNode(Lift(small, m), VarietyKind::kCircuit, facts));
  }
  out.push_back(MakeNode(m, VarietyKind::kMatroid, facts));
  return out;
}

std::vector<VarietyNode> Prune(const std::vector<VarietyNode>& nodes,
                               const FactTable& facts,
                               std::vector<PruneStep>* steps) {
  std::vector<VarietyNode> kept;
  for (const VarietyNode& b : nodes) {
    bool removed = false;
    for (const VarietyNode& a : nodes) {
      if (a.matroid == b.matroid) continue;
      std::string reason;
      if (const Fact* f = facts.FindContainment(b.matroid, a.matroid)) {
        reason = f->citation.empty() ? "registered containment" : f->citation;
      } else if (CollapsedLineOf(b.matroid, a.matroid, facts)) {
        reason = "collapsed three-point line of a realizable configuration";
      } else if (RankTwoInside(b.matroid, a.matroid)) {
        reason = "rank at most two, inside the uniform rank-2 variety";
      } else {
        continue;
      }
      if (steps != nullptr) steps->push_back({b, a.matroid, reason});
      removed = true;
      break;
    }
    if (!removed) kept.push_back(b);
  }
  return kept;
}

Decomposition Decompose(const Configuration& m, const FactTable& facts, int depth) {
  if (m.Rank() != 3) {
    throw Error(ErrorCode::kNotRank3, "decomposition needs a rank-3 configuration");
  }
  Decomposition out;
  out.ambient = m;
  // Invariant: V_C(m) is the union of the leaves and of V_C(X) over the
  // pending X. A new X above a pending or rewritten Y adds nothing, since
  // V_C(X) lies in V_C(Y); a pending Y above a new X is dropped the same way.
  // Pending nodes are taken in increasing order of a strictly monotone
  // potential, so a child is never a node expanded earlier, and every
  // matroid above m ends up expanded or above a rewritten node. A registered
  // circuit containment is used only when its objects lie above m, so their
  // varieties lie in V_C(m).
  using Key = std::pair<int, Matroid>;
  std::map<Key, int> pending;
  std::set<Matroid> seen;
  std::vector<Matroid> resolved;
  std::set<Matroid> leaf_seen;
  std::vector<VarietyNode> leaves;
  auto add_leaf = [&](const VarietyNode& n) {
    if (leaf_seen.insert(n.matroid).second) leaves.push_back(n);
  };
  auto drop_above = [&](const Matroid& x) {
    for (auto it = pending.begin(); it != pending.end();) {
      if (DependencyLess(x, it->first.second)) {
        it = pending.erase(it);
        ++out.subsumed;
      } else {
        ++it;
      }
    }
  };
  auto push = [&](const Matroid& x, int level) {
    if (seen.count(x) != 0) return;
    for (const Matroid& y : resolved) {
      if (DependencyLeq(y, x)) {
        ++out.subsumed;
        return;
      }
    }
    for (const auto& [key, unused] : pending) {
      if (DependencyLeq(key.second, x)) {
        ++out.subsumed;
        return;
      }
    }
    drop_above(x);
    pending.emplace(Key{x.SmallDependentCount(), x}, level);
  };
  std::set<Matroid> leaning;
  const Matroid top = Matroid::FromConfiguration(m);
  push(top, 0);
  while (!pending.empty()) {
    Matroid current = pending.begin()->first.second;
    int level = pending.begin()->second;
    pending.erase(pending.begin());
    seen.insert(current);
    VarietyNode node = MakeNode(current, VarietyKind::kCircuit, facts);
    CoverMatch cover;
    for (CoverMatch& c : facts.FindCovers(current)) {
      if (AllAbove(c, top)) {
        cover = std::move(c);
        break;
      }
    }
    if (cover.fact != nullptr) {
      for (const Matroid& o : cover.objects) {
        add_leaf(MakeNode(o, VarietyKind::kMatroid, facts));
      }
      out.covered.push_back(
          {current, cover.objects, cover.circuit_objects, cover.fact->citation});
      if (cover.circuit_objects.empty()) {
        resolved.push_back(current);
        drop_above(current);
        continue;
      }
      // V_C(current) now rests on other circuit varieties, so it must not
      // stand in for them or for anything above it.
      leaning.insert(current);
      for (const Matroid& z : cover.circuit_objects) {
        if (leaning.count(z) != 0) {
          out.unexpanded.push_back(MakeNode(z, VarietyKind::kCircuit, facts));
          out.complete = false;
        } else {
          push(z, level + 1);
        }
      }
      continue;
    }
    if (IsRewritable(current)) {
      for (const VarietyNode& n : Rewrite(node, facts)) add_leaf(n);
      resolved.push_back(current);
      drop_above(current);
      continue;
    }
    if (level >= depth) {
      out.unexpanded.push_back(node);
      out.complete = false;
      continue;
    }
    ++out.expansions;
    out.depth_used = std::max(out.depth_used, level + 1);
    for (const VarietyNode& n : Expand(node, facts)) {
      if (n.kind == VarietyKind::kCircuit) {
        push(n.matroid, level + 1);
      } else {
        add_leaf(n);
      }
    }
  }

  std::vector<VarietyNode> split;
  for (const VarietyNode& n : leaves) {
    if (n.realizable == Tri::kNo) {
      out.dropped.push_back(n);
      continue;
    }
    if (n.component_count > 1) {
      for (const std::string& label : ComponentLabels(n.component_count)) {
        VarietyNode c = n;
        c.component = label;
        c.irreducible = Tri::kYes;
        split.push_back(c);
      }
    } else {
      split.push_back(n);
    }
  }
  out.components = Prune(split, facts, &out.pruned);

  std::vector<std::tuple<Matroid, Matroid, std::string, size_t>> order;
  for (size_t i = 0; i < out.components.size(); ++i) {
    const VarietyNode& n = out.components[i];
    order.emplace_back(CanonicalForm(n.matroid), n.matroid, n.component, i);
  }
  std::sort(order.begin(), order.end());
  std::vector<VarietyNode> sorted;
  for (const auto& t : order) sorted.push_back(out.components[std::get<3>(t)]);
  out.components = std::move(sorted);
  return out;
}

std::vector<Matroid> ComponentForms(const Decomposition& d) {
  std::vector<Matroid> out;
  for (const VarietyNode& n : d.components) out.push_back(CanonicalForm(n.matroid));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plc
