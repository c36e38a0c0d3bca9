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

#include "plc/xmatroid.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "plc/error.hpp"

namespace plc {
namespace {

void CheckTableD(int d) {
  if (d > kMaxTableD) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "set-function tables need d <= " + std::to_string(kMaxTableD));
  }
}

// For each S lying in some member of X, the largest min(|S|, |x| - 1) over
// the members x containing S. S = A n B makes rule (i) applicable with this
// subtraction, which gives the lowest value among the admissible x.
std::vector<std::pair<Mask, int>> Overlaps(const XSystem& sys) {
  std::unordered_map<Mask, int> best;
  for (Mask x : sys.x()) {
    int cap = Size(x) - 1;
    for (Mask s = x;; s = (s - 1) & x) {
      int m = std::min(Size(s), cap);
      auto [it, fresh] = best.emplace(s, m);
      if (!fresh) it->second = std::max(it->second, m);
      if (s == 0) break;
    }
  }
  std::vector<std::pair<Mask, int>> out(best.begin(), best.end());
  std::sort(out.begin(), out.end());
  return out;
}

class VxRun {
 public:
  VxRun(const XSystem& sys, SetFunction v)
      : d_(sys.d()), full_(FullMask(sys.d())), v_(std::move(v)) {
    for (auto [s, m] : Overlaps(sys)) sub_[s] = m;
  }

  SetFunction Sweep() {
    std::vector<std::pair<Mask, int>> overlaps(sub_.begin(), sub_.end());
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [s, m] : overlaps) {
        Mask rest = full_ & ~s;
        for (Mask a = rest;; a = (a - 1) & rest) {
          Mask others = rest & ~a;
          for (Mask b = others;; b = (b - 1) & others) {
            changed |= Lower(s | a | b, v_[s | a] + v_[s | b] - m);
            if (b == 0) break;
          }
          if (a == 0) break;
        }
      }
      for (Mask a = 0; a <= full_; ++a) {
        for (int y = 1; y <= d_; ++y) {
          if (a & Bit(y)) continue;
          changed |= Lower(a, v_[a | Bit(y)]);
          changed |= Lower(a | Bit(y), v_[a] + 1);
        }
      }
    }
    return std::move(v_);
  }

  SetFunction Priority(bool reversed) {
    std::vector<Mask> by_size(full_ + 1);
    for (Mask u = 0; u <= full_; ++u) by_size[u] = u;
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](Mask a, Mask b) { return Size(a) < Size(b); });
    std::vector<Mask> ascending(full_ + 1);
    for (Mask u = 0; u <= full_; ++u) ascending[u] = u;
    if (reversed) {
      std::reverse(by_size.begin(), by_size.end());
      std::reverse(ascending.begin(), ascending.end());
    }
    while (StepOne(by_size, reversed) || StepTwo(ascending, reversed) ||
           StepThree(ascending, reversed)) {
    }
    return std::move(v_);
  }

 private:
  bool Lower(Mask s, int value) {
    if (v_[s] <= value) return false;
    if (value < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no X-matroid exists: the rank bound drops below zero");
    }
    v_[s] = value;
    return true;
  }

  // Submasks of `of` in ascending order, or descending when reversed.
  static std::vector<Mask> Submasks(Mask of, bool reversed) {
    std::vector<Mask> out;
    for (Mask t = of;; t = (t - 1) & of) {
      out.push_back(t);
      if (t == 0) break;
    }
    if (!reversed) std::reverse(out.begin(), out.end());
    return out;
  }

  bool StepOne(const std::vector<Mask>& order, bool reversed) {
    for (Mask u : order) {
      for (Mask a : Submasks(u, reversed)) {
        for (Mask t : Submasks(a, reversed)) {
          Mask b = (u & ~a) | t;
          auto it = sub_.find(a & b);
          if (it == sub_.end()) continue;
          if (Lower(u, v_[a] + v_[b] - it->second)) return true;
        }
      }
    }
    return false;
  }

  bool StepTwo(const std::vector<Mask>& order, bool reversed) {
    for (Mask a : order) {
      for (Mask b : Submasks(full_ & ~a, reversed)) {
        if (b != 0 && Lower(a, v_[a | b])) return true;
      }
    }
    return false;
  }

  bool StepThree(const std::vector<Mask>& order, bool reversed) {
    for (Mask a : order) {
      for (Mask b : Submasks(a, reversed)) {
        if (b != a && Lower(a, v_[b] + Size(a & ~b))) return true;
      }
    }
    return false;
  }

  int d_;
  Mask full_;
  SetFunction v_;
  std::unordered_map<Mask, int> sub_;
};

class ValSearch {
 public:
  ValSearch(const XSystem& sys, Mask f)
      : x_(sys.x()), full_(FullMask(sys.d())), f_(f), best_(Size(f)) {}

  int Run() {
    Visit(0, 0);
    return best_;
  }

 private:
  void Visit(Mask covered, int k) {
    auto [it, fresh] = seen_.emplace(covered, k);
    if (!fresh) {
      if (it->second >= k) return;
      it->second = k;
    }
    int value = Size(f_ | covered) - k;
    best_ = std::min(best_, value);
    std::vector<Mask> next;
    for (Mask x : x_) {
      if (!Contains(covered, x)) next.push_back(x);
    }
    // Each further step covers a new point and lowers the value by at most one.
    int steps = std::min<int>(next.size(), Size(full_ & ~covered));
    if (value - steps >= best_) return;
    std::stable_sort(next.begin(), next.end(), [&](Mask a, Mask b) {
      return Size(a & ~covered) > Size(b & ~covered);
    });
    for (Mask x : next) Visit(covered | x, k + 1);
  }

  const std::vector<Mask>& x_;
  Mask full_;
  Mask f_;
  int best_;
  std::unordered_map<Mask, int> seen_;
};

// Merge search state: a partition of [d] and, per point, the points its
// class must stay apart from.
struct Partition {
  std::vector<Mask> classes;
  std::vector<Mask> apart;

  int Find(int p) const {
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i] & Bit(p)) return static_cast<int>(i);
    }
    return -1;
  }
  bool Apart(Mask c1, Mask c2) const {
    bool out = false;
    ForEach(c1, [&](int p) { out |= (apart[p] & c2) != 0; });
    return out;
  }
  Mask Rep(int p) const { return Bit(Lowest(classes[Find(p)])); }
  Mask Reps(Mask s) const {
    Mask out = 0;
    ForEach(s, [&](int p) { out |= Rep(p); });
    return out;
  }
};

class XMinSearch {
 public:
  explicit XMinSearch(const XSystem& sys) : sys_(sys) {}

  std::vector<Matroid> Run() {
    Partition start;
    start.apart.assign(sys_.d() + 1, 0);
    for (int p = 1; p <= sys_.d(); ++p) start.classes.push_back(Bit(p));
    for (Mask x : sys_.x()) {
      ForEach(x, [&](int p) { start.apart[p] |= x & ~Bit(p); });
    }
    Explore(start);
    std::vector<Matroid> kept;
    for (Matroid& m : leaves_) {
      if (IsXMatroid(m, sys_)) kept.push_back(std::move(m));
    }
    return MinimalElements(std::move(kept));
  }

 private:
  void Explore(const Partition& state) {
    std::vector<Mask> key = state.classes;
    key.insert(key.end(), state.apart.begin(), state.apart.end());
    if (!visited_.insert(std::move(key)).second) return;

    // Lines over class representatives, closed under merging lines that
    // share two classes kept apart. Two lines sharing only classes that may
    // still be identified are a branch point.
    std::vector<Mask> lines;
    for (Mask x : sys_.x()) lines.push_back(state.Reps(x));
    for (bool merged = true; merged;) {
      merged = false;
      for (size_t i = 0; i < lines.size() && !merged; ++i) {
        for (size_t j = i + 1; j < lines.size() && !merged; ++j) {
          Mask shared = lines[i] & lines[j];
          if (Size(shared) < 2) continue;
          std::vector<int> reps = ToList(shared);
          std::pair<int, int> open{0, 0};
          bool forced = false;
          for (size_t a = 0; a < reps.size() && !forced; ++a) {
            for (size_t b = a + 1; b < reps.size() && !forced; ++b) {
              const Mask ca = state.classes[state.Find(reps[a])];
              const Mask cb = state.classes[state.Find(reps[b])];
              if (state.Apart(ca, cb)) {
                forced = true;
              } else if (open.first == 0) {
                open = {reps[a], reps[b]};
              }
            }
          }
          if (!forced) {
            Branch(state, open.first, open.second);
            return;
          }
          lines[i] |= lines[j];
          lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
    std::vector<Mask> point_lines;
    for (Mask l : lines) {
      Mask u = 0;
      ForEach(l, [&](int r) { u |= state.classes[state.Find(r)]; });
      point_lines.push_back(u);
    }
    leaves_.push_back(Matroid::Create(sys_.d(), 0, state.classes, point_lines));
  }

  void Branch(const Partition& state, int p, int q) {
    const int i = state.Find(p);
    const int j = state.Find(q);
    const Mask ci = state.classes[i];
    const Mask cj = state.classes[j];

    Partition separate = state;
    ForEach(ci, [&](int a) { separate.apart[a] |= cj; });
    ForEach(cj, [&](int b) { separate.apart[b] |= ci; });
    Explore(separate);

    Partition identify = state;
    identify.classes[i] |= cj;
    identify.classes.erase(identify.classes.begin() + j);
    std::sort(identify.classes.begin(), identify.classes.end(),
              [](Mask a, Mask b) { return Lowest(a) < Lowest(b); });
    Explore(identify);
  }

  const XSystem& sys_;
  std::set<std::vector<Mask>> visited_;
  std::vector<Matroid> leaves_;
};

}  // namespace

XSystem XSystem::Create(int d, std::vector<Mask> x) {
  if (d < 0 || d > kMaxPoints) {
    throw Error(ErrorCode::kLabelOutOfRange, "d = " + std::to_string(d));
  }
  for (Mask m : x) {
    if ((m & ~FullMask(d)) != 0) {
      throw Error(ErrorCode::kLabelOutOfRange, "X member outside [d]");
    }
    if (Size(m) < 2) {
      throw Error(ErrorCode::kInvalidArgument, "X member with fewer than two points");
    }
  }
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  XSystem out;
  out.d_ = d;
  out.x_ = std::move(x);
  return out;
}

int ValX(const XSystem& sys, Mask f) {
  if (sys.d() > kMaxValD) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                "val_X needs d <= " + std::to_string(kMaxValD));
  }
  if ((f & ~FullMask(sys.d())) != 0) {
    throw Error(ErrorCode::kLabelOutOfRange, "subset outside [d]");
  }
  return ValSearch(sys, f).Run();
}

SetFunction ValTable(const XSystem& sys) {
  CheckTableD(sys.d());
  const Mask full = FullMask(sys.d());
  // longest[U]: length of the longest proper sequence with union U, or -1.
  std::vector<int> longest(full + 1, -1);
  longest[0] = 0;
  for (Mask u = 0; u <= full; ++u) {
    if (longest[u] < 0) continue;
    for (Mask x : sys.x()) {
      if (!Contains(u, x)) longest[u | x] = std::max(longest[u | x], longest[u] + 1);
    }
  }
  std::vector<Mask> reachable;
  for (Mask u = 0; u <= full; ++u) {
    if (longest[u] >= 0) reachable.push_back(u);
  }
  SetFunction val(full + 1);
  for (Mask f = 0; f <= full; ++f) {
    int best = Size(f);
    for (Mask u : reachable) best = std::min(best, Size(f | u) - longest[u]);
    val[f] = best;
  }
  return val;
}

SetFunction VxTable(const XSystem& sys, VxOrder order) {
  VxRun run(sys, ValTable(sys));
  switch (order) {
    case VxOrder::kSweep:
      return run.Sweep();
    case VxOrder::kPriority:
      return run.Priority(false);
    case VxOrder::kPriorityReversed:
      return run.Priority(true);
  }
  return {};
}

std::optional<std::pair<Mask, Mask>> SubmodularWitness(const SetFunction& f, int d) {
  CheckTableD(d);
  const Mask full = FullMask(d);
  if (f.size() != static_cast<size_t>(full) + 1) {
    throw Error(ErrorCode::kInvalidArgument, "table does not cover every subset");
  }
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = 0; b <= full; ++b) {
      if (f[a | b] + f[a & b] > f[a] + f[b]) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool IsXMatroid(const Matroid& m, const XSystem& sys) {
  if (m.d() != sys.d()) return false;
  for (Mask x : sys.x()) {
    if (!m.IsCircuit(x)) return false;
  }
  return true;
}

std::vector<Matroid> MinimalXMatroidsRank3(const XSystem& sys) {
  for (Mask x : sys.x()) {
    if (Size(x) != 3) {
      throw Error(ErrorCode::kXMemberNotTriple,
                  "member of size " + std::to_string(Size(x)));
    }
  }
  if (sys.d() < 3) throw Error(ErrorCode::kInvalidArgument, "d < 3");
  return XMinSearch(sys).Run();
}

std::string DumpTable(const SetFunction& f) {
  std::string out;
  for (size_t s = 0; s < f.size(); ++s) {
    out += std::to_string(s) + "," + std::to_string(f[s]) + "\n";
  }
  return out;
}

}  // namespace plc
