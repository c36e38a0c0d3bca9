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

#include "plc/oracle.hpp"

#include <map>
#include <string>

#include "plc/error.hpp"

namespace plc {
namespace {

void LinearFamilies(const std::vector<Mask>& candidates, size_t start,
                    std::vector<Mask>& chosen, int k,
                    std::vector<Configuration>& out) {
  out.push_back(Configuration::FromMasks(k, chosen));
  for (size_t i = start; i < candidates.size(); ++i) {
    Mask c = candidates[i];
    bool ok = true;
    for (Mask e : chosen) {
      if (Size(e & c) >= 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(c);
    LinearFamilies(candidates, i + 1, chosen, k, out);
    chosen.pop_back();
  }
}

// Restricted growth strings over the points of `free`, as class lists.
void Partitions(const std::vector<int>& pts, size_t i,
                std::vector<Mask>& classes,
                const std::function<void(const std::vector<Mask>&)>& sink) {
  if (i == pts.size()) {
    sink(classes);
    return;
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    classes[c] |= Bit(pts[i]);
    Partitions(pts, i + 1, classes, sink);
    classes[c] &= ~Bit(pts[i]);
  }
  classes.push_back(Bit(pts[i]));
  Partitions(pts, i + 1, classes, sink);
  classes.pop_back();
}

void CheckBudget(int d, const EnumerationBudget& budget) {
  if (d > budget.max_d && !(d == 7 && budget.allow_seven)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "ground set " + std::to_string(d) + " exceeds max_d " +
                    std::to_string(budget.max_d));
  }
  if (d > 7) {
    throw Error(ErrorCode::kBudgetExceeded, "enumeration limited to d <= 7");
  }
}

}  // namespace

std::vector<Configuration> AllConfigurations(int k) {
  std::vector<Mask> candidates;
  for (Mask s = 1; s <= FullMask(k) && s != 0; ++s) {
    if (Size(s) >= 3) candidates.push_back(s);
  }
  SortUniqueLex(candidates);
  std::vector<Configuration> out;
  std::vector<Mask> chosen;
  LinearFamilies(candidates, 0, chosen, k, out);
  return out;
}

void EnumerateAll(int d, const EnumerationBudget& budget,
                  const std::function<void(const Matroid&)>& sink) {
  CheckBudget(d, budget);
  std::map<int, std::vector<Configuration>> geometries;
  for (int k = 0; k <= d; ++k) geometries[k] = AllConfigurations(k);
  long long count = 0;
  for (Mask loops = 0; loops <= FullMask(d); ++loops) {
    std::vector<int> pts = ToList(FullMask(d) & ~loops);
    std::vector<Mask> classes;
    Partitions(pts, 0, classes, [&](const std::vector<Mask>& cls) {
      int k = static_cast<int>(cls.size());
      std::vector<Mask> reps;
      for (Mask c : cls) reps.push_back(Bit(Lowest(c)));
      for (const Configuration& g : geometries[k]) {
        std::vector<Mask> lines;
        for (Mask l : g.lines()) {
          Mask r = 0;
          ForEach(l, [&](int i) { r |= reps[i - 1]; });
          lines.push_back(r);
        }
        if (++count > budget.max_count) {
          throw Error(ErrorCode::kBudgetExceeded,
                      "more than " + std::to_string(budget.max_count) +
                          " matroids");
        }
        sink(Matroid::Create(d, loops, cls, lines));
      }
    });
    if (loops == FullMask(d)) break;
  }
}

std::vector<Matroid> EnumerateAbove(const Matroid& m,
                                    const EnumerationBudget& budget) {
  std::vector<Matroid> out;
  EnumerateAll(m.d(), budget, [&](const Matroid& n) {
    if (Contains(n.loops(), m.loops()) && !(n == m) && DependencyLeq(m, n)) {
      out.push_back(n);
    }
  });
  return out;
}

std::vector<Matroid> BruteMinimal(const Matroid& m,
                                  const EnumerationBudget& budget) {
  return MinimalElements(EnumerateAbove(m, budget));
}

std::vector<Matroid> BruteMinimalX(int d, const std::vector<Mask>& x,
                                   const EnumerationBudget& budget) {
  std::vector<Matroid> out;
  EnumerateAll(d, budget, [&](const Matroid& n) {
    for (Mask c : x) {
      if (!n.IsCircuit(c)) return;
    }
    out.push_back(n);
  });
  return MinimalElements(std::move(out));
}

}  // namespace plc
