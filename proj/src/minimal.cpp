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

#include "plc/minimal.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "plc/error.hpp"
#include "plc/formula.hpp"

namespace plc {
namespace {

std::string SetText(Mask m) {
  std::string s;
  ForEach(m, [&](int p) { s += std::to_string(p); });
  return s;
}

std::string FormulaText(const Formula& f) {
  std::string s;
  for (Mask c : f.Classes()) {
    if (Size(c) < 2) continue;
    if (!s.empty()) s += " ";
    s += "~" + SetText(c);
  }
  for (auto [a, b] : f.ForbiddenPairs()) {
    if (!s.empty()) s += " ";
    s += std::to_string(a) + "!~" + std::to_string(b);
  }
  return s;
}

void RequireRank3(const Configuration& m) {
  if (m.Rank() != 3) {
    throw Error(ErrorCode::kNotRank3,
                "ambient has rank " + std::to_string(m.Rank()));
  }
}

// Least pair of points whose classes lie together in two distinct edges.
bool OffendingPair(const Formula& f, const std::vector<Mask>& edges, int* x,
                   int* y) {
  std::vector<Mask> shared;
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      Mask c = edges[i] & edges[j];
      if (Size(c) >= 2) shared.push_back(c);
    }
  }
  if (shared.empty()) return false;
  int d = f.d();
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      Mask pair = Bit(f.Rep(a)) | Bit(f.Rep(b));
      if (Size(pair) < 2) continue;
      for (Mask c : shared) {
        if (Contains(c, pair)) {
          *x = a;
          *y = b;
          return true;
        }
      }
    }
  }
  return false;
}

bool UndecidedPair(const Formula& f, int* x, int* y) {
  for (int a = 1; a <= f.d(); ++a) {
    for (int b = a + 1; b <= f.d(); ++b) {
      if (!f.IsDecided(a, b)) {
        *x = a;
        *y = b;
        return true;
      }
    }
  }
  return false;
}

std::vector<Mask> IndependentTriples(const Configuration& m) {
  std::vector<Mask> out;
  int d = m.d();
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c) {
        Mask t = Bit(a) | Bit(b) | Bit(c);
        if (!m.Collinear(t)) out.push_back(t);
      }
  return out;
}

bool MeetsLinesOnce(const Configuration& m, Mask t) {
  for (Mask l : m.lines()) {
    if (Size(l & t) >= 2) return false;
  }
  return true;
}

// Calls f(t) for every triple inside e.
template <typename F>
void ForEachTriple(Mask e, F&& f) {
  std::vector<int> pts = ToList(e);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      for (size_t k = j + 1; k < pts.size(); ++k)
        f(Bit(pts[i]) | Bit(pts[j]) | Bit(pts[k]));
}

}  // namespace

char KindLetter(MinimalKind k) {
  switch (k) {
    case MinimalKind::kA: return 'A';
    case MinimalKind::kB: return 'B';
    case MinimalKind::kC: return 'C';
  }
  return '?';
}

std::vector<Matroid> MinimalSet::Matroids() const {
  std::vector<Matroid> out;
  for (const auto& m : members) out.push_back(m.matroid);
  return out;
}

std::vector<MinimalMember> MinAWithWitness(const Configuration& m,
                                           MinAStats* stats) {
  int d = m.d();
  std::vector<MinimalMember> found;
  if (d < 2) return found;
  struct Node {
    Formula formula;
    std::shared_ptr<const Hypergraph> parent_delta;
  };
  std::vector<Node> stack;
  std::unordered_set<std::string> seen;
  std::map<Matroid, std::string> candidates;
  auto lines = std::make_shared<const Hypergraph>(m.AsHypergraph());

  auto push_branches = [&](const Formula& f,
                           const std::shared_ptr<const Hypergraph>& delta,
                           int x, int y) {
    for (auto child : {f.Forbid(x, y), f.Merge(x, y)}) {
      if (!child) continue;
      if (!seen.insert(child->Key()).second) continue;
      stack.push_back({*child, delta});
    }
  };
  push_branches(Formula(d), lines, 1, 2);

  long long visited = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++visited;
    auto delta = std::make_shared<const Hypergraph>(
        DeltaFExtend(*node.parent_delta, node.formula));
    int x = 0;
    int y = 0;
    if (OffendingPair(node.formula, delta->edges(), &x, &y)) {
      push_branches(node.formula, delta, x, y);
      continue;
    }
    if (node.formula.HasMerges()) {
      Matroid mf = RealizeFromDelta(d, node.formula, *delta);
      candidates.emplace(std::move(mf), FormulaText(node.formula));
      continue;
    }
    // No merge yet: the realization is the ambient itself, so keep deciding
    // pairs until one merges.
    if (UndecidedPair(node.formula, &x, &y)) {
      push_branches(node.formula, delta, x, y);
    }
  }
  if (stats) {
    stats->formulas_visited = visited;
    stats->candidates = static_cast<long long>(candidates.size());
  }
  std::vector<Matroid> all;
  for (const auto& [mat, w] : candidates) all.push_back(mat);
  for (Matroid& mat : MinimalElements(std::move(all))) {
    std::string w = candidates.at(mat);
    found.push_back({std::move(mat), MinimalKind::kA, std::move(w)});
  }
  return found;
}

std::vector<Matroid> MinA(const Configuration& m) {
  std::vector<Matroid> out;
  for (auto& member : MinAWithWitness(m)) out.push_back(member.matroid);
  return out;
}

Configuration MSuperset(const Configuration& m, Mask x) {
  if (Size(x) != 3 || (x & ~FullMask(m.d())) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "expected a triple of points");
  }
  if (m.Collinear(x)) {
    throw Error(ErrorCode::kAlreadyDependent, "triple " + SetText(x));
  }
  std::vector<Mask> edges = m.lines();
  edges.push_back(x);
  return PlcClosure(UncheckedHypergraph(m.d(), std::move(edges)));
}

std::vector<Mask> TriplesS(const Configuration& m) {
  std::vector<Mask> out;
  for (Mask t : IndependentTriples(m)) {
    if (MeetsLinesOnce(m, t)) out.push_back(t);
  }
  return out;
}

std::vector<Mask> TriplesT(const Configuration& m) {
  std::vector<Mask> out;
  for (Mask t : IndependentTriples(m)) {
    if (!MeetsLinesOnce(m, t)) out.push_back(t);
  }
  return out;
}

std::vector<MinimalMember> MinBWithWitness(const Configuration& m) {
  int d = m.d();
  enum Status : char { kUnvisited, kInY, kInL };
  // Triples absent from the map are dependent in m.
  std::unordered_map<Mask, char> status;
  std::vector<Mask> universe = IndependentTriples(m);
  std::vector<Mask> t_list;
  for (Mask t : universe) status[t] = kUnvisited;

  std::vector<MinimalMember> k;
  size_t in_y = 0;
  for (Mask t : universe) {
    if (MeetsLinesOnce(m, t)) {
      status[t] = kInY;
      ++in_y;
      k.push_back({Matroid::FromConfiguration(MSuperset(m, t)), MinimalKind::kB,
                   SetText(t)});
    } else {
      t_list.push_back(t);
    }
  }

  ForbidAdjacency all{};
  for (int p = 1; p <= d; ++p) all[p] = FullMask(d) & ~Bit(p);

  std::vector<Mask> l;
  auto flush_l = [&]() {
    for (Mask t : l) {
      status[t] = kInY;
      ++in_y;
    }
    l.clear();
  };
  size_t next_seed = 0;
  while (in_y < universe.size()) {
    if (l.empty()) {
      while (status[t_list[next_seed]] != kUnvisited) ++next_seed;
      l.push_back(t_list[next_seed]);
      status[t_list[next_seed]] = kInL;
      continue;
    }
    Mask x = l.back();
    enum { kNone, kScenario1, kScenario2 } outcome = kNone;
    Mask appended = 0;
    std::vector<Mask> edges = m.lines();
    edges.push_back(x);
    std::vector<Mask> closed = MergeClosure(edges, all, [&](Mask e) {
      bool hit_y = false;
      ForEachTriple(e, [&](Mask t) {
        auto it = status.find(t);
        hit_y = hit_y || (it != status.end() && it->second == kInY);
      });
      if (hit_y) {
        outcome = kScenario1;
        return false;
      }
      Mask fresh = 0;
      ForEachTriple(e, [&](Mask t) {
        auto it = status.find(t);
        if (fresh == 0 && it != status.end() && it->second == kUnvisited) {
          fresh = t;
        }
      });
      if (fresh != 0) {
        outcome = kScenario2;
        appended = fresh;
        return false;
      }
      return true;
    });
    if (outcome == kScenario1) {
      flush_l();
    } else if (outcome == kScenario2) {
      status[appended] = kInL;
      l.push_back(appended);
    } else {
      flush_l();
      k.push_back({Matroid::FromConfiguration(Configuration::FromMasks(d, closed)),
                   MinimalKind::kB, SetText(x)});
    }
  }
  std::sort(k.begin(), k.end(), [](const MinimalMember& a, const MinimalMember& b) {
    return a.matroid < b.matroid;
  });
  k.erase(std::unique(k.begin(), k.end(),
                      [](const MinimalMember& a, const MinimalMember& b) {
                        return a.matroid == b.matroid;
                      }),
          k.end());
  return k;
}

std::vector<Configuration> MinB(const Configuration& m) {
  std::vector<Configuration> out;
  for (const auto& member : MinBWithWitness(m)) {
    out.push_back(Configuration::FromMasks(m.d(), member.matroid.lines()));
  }
  return out;
}

std::vector<Configuration> MinBDirect(const Configuration& m) {
  std::vector<Matroid> all;
  for (Mask t : IndependentTriples(m)) {
    all.push_back(Matroid::FromConfiguration(MSuperset(m, t)));
  }
  std::vector<Configuration> out;
  for (const Matroid& mat : MinimalElements(std::move(all))) {
    out.push_back(Configuration::FromMasks(m.d(), mat.lines()));
  }
  return out;
}

Mask MZero(const Configuration& m) {
  int d = m.d();
  const auto& lines = m.lines();
  // A point on at most one line can be made parallel to a point of that line
  // without new dependencies among the other points.
  Mask c1 = 0;
  for (int p = 1; p <= d; ++p) {
    if (m.Degree(p) >= 2) c1 |= Bit(p);
  }
  // G2 joins points that share no line; a triangle through p is a triple
  // that can be added as a new line.
  std::vector<Mask> g2(d + 1, 0);
  for (int p = 1; p <= d; ++p) {
    g2[p] = FullMask(d) & ~m.Neighborhood(p) & ~Bit(p);
  }
  Mask c2 = 0;
  for (int p = 1; p <= d; ++p) {
    bool in_triangle = false;
    ForEach(g2[p], [&](int q) { in_triangle = in_triangle || (g2[p] & g2[q]); });
    if (!in_triangle) c2 |= Bit(p);
  }
  // A line missing every line through p can be extended by p.
  Mask c3 = 0;
  ForEach(c1 & c2, [&](int p) {
    Mask near = m.Neighborhood(p);
    bool ok = true;
    for (Mask l : lines) {
      if (!(l & Bit(p)) && (l & near) == 0) ok = false;
    }
    if (ok) c3 |= Bit(p);
  });
  return c3;
}

Mask MZeroDirect(const Configuration& m) {
  int d = m.d();
  Mask out = 0;
  for (int i = 1; i <= d; ++i) {
    Mask rest = FullMask(d) & ~Bit(i);
    Configuration base = m.Restrict(rest);
    bool below = false;
    // A double point {i, j} adds nothing among the other points exactly when
    // every line through i contains j.
    for (int j = 1; j <= d && !below; ++j) {
      if (j == i) continue;
      bool all_contain = true;
      for (Mask l : m.lines()) {
        if ((l & Bit(i)) && !(l & Bit(j))) all_contain = false;
      }
      below = all_contain;
    }
    // A new triple through i whose closure keeps the other points unchanged.
    for (int j = 1; j <= d && !below; ++j) {
      for (int k = j + 1; k <= d && !below; ++k) {
        if (j == i || k == i) continue;
        Mask x = Bit(i) | Bit(j) | Bit(k);
        if (m.Collinear(x)) continue;
        below = MSuperset(m, x).Restrict(rest) == base;
      }
    }
    if (!below) out |= Bit(i);
  }
  return out;
}

MinimalSet MinMatroids(const Configuration& m) {
  RequireRank3(m);
  MinimalSet result;
  result.ambient = m;
  std::vector<MinimalMember> b = MinBWithWitness(m);
  for (auto& a : MinAWithWitness(m)) {
    bool above_b = false;
    for (const auto& nb : b) {
      if (DependencyLeq(nb.matroid, a.matroid)) {
        above_b = true;
        break;
      }
    }
    if (!above_b) result.members.push_back(std::move(a));
  }
  for (auto& nb : b) result.members.push_back(std::move(nb));
  Matroid base = Matroid::FromConfiguration(m);
  ForEach(MZero(m), [&](int i) {
    result.members.push_back(
        {base.AddLoop(i), MinimalKind::kC, std::to_string(i)});
  });
  std::sort(result.members.begin(), result.members.end(),
            [](const MinimalMember& x, const MinimalMember& y) {
              return x.matroid < y.matroid;
            });
  return result;
}

}  // namespace plc
