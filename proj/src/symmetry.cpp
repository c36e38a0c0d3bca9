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

#include "plc/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "plc/error.hpp"

namespace plc {
namespace {

inline constexpr int kMaxCanonicalPoints = 12;

// Point-level view of a tuple of matroids on one ground set.
class TupleView {
 public:
  explicit TupleView(const std::vector<Matroid>& ms) : ms_(ms) {
    d_ = ms.empty() ? 0 : ms[0].d();
    for (const Matroid& m : ms) {
      if (m.d() != d_) {
        throw Error(ErrorCode::kGroundSetMismatch, "tuple members differ");
      }
      line_sets_.push_back(m.LinePointSets());
    }
  }

  int d() const { return d_; }

  // Invariant signature of p under the colouring `col`.
  std::vector<int> Signature(int p, const std::vector<int>& col) const {
    std::vector<int> sig{col[p]};
    for (size_t t = 0; t < ms_.size(); ++t) {
      const Matroid& m = ms_[t];
      sig.push_back(-1);
      if (m.IsLoop(p)) {
        sig.push_back(1);
        continue;
      }
      sig.push_back(0);
      std::vector<int> par;
      ForEach(m.ClassOf(p) & ~Bit(p), [&](int q) { par.push_back(col[q]); });
      std::sort(par.begin(), par.end());
      sig.push_back(static_cast<int>(par.size()));
      sig.insert(sig.end(), par.begin(), par.end());
      std::vector<std::vector<int>> lines;
      for (Mask l : line_sets_[t]) {
        if (!(l & Bit(p))) continue;
        std::vector<int> cs;
        ForEach(l & ~Bit(p), [&](int q) { cs.push_back(col[q]); });
        std::sort(cs.begin(), cs.end());
        lines.push_back(std::move(cs));
      }
      std::sort(lines.begin(), lines.end());
      sig.push_back(static_cast<int>(lines.size()));
      for (const auto& cs : lines) {
        sig.push_back(-2);
        sig.insert(sig.end(), cs.begin(), cs.end());
      }
    }
    return sig;
  }

  // Equitable refinement of an ordered colouring; colours become 0..k-1.
  std::vector<int> Refine(std::vector<int> col) const {
    int classes = -1;
    while (true) {
      std::vector<std::vector<int>> sigs(d_ + 1);
      for (int p = 1; p <= d_; ++p) sigs[p] = Signature(p, col);
      std::vector<std::vector<int>> distinct(sigs.begin() + 1, sigs.end());
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()),
                     distinct.end());
      for (int p = 1; p <= d_; ++p) {
        col[p] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sigs[p]) -
            distinct.begin());
      }
      int now = static_cast<int>(distinct.size());
      if (now == classes) return col;
      classes = now;
    }
  }

  std::vector<Matroid> Apply(const Permutation& perm) const {
    std::vector<Matroid> out;
    for (const Matroid& m : ms_) out.push_back(m.Relabel(perm));
    return out;
  }

  bool IsAutomorphism(const Permutation& perm) const {
    for (const Matroid& m : ms_) {
      if (!(m.Relabel(perm) == m)) return false;
    }
    return true;
  }

  // Same loop, parallel and triple relations between (p, q, r) and images.
  bool Compatible(int p, int ip, const std::vector<int>& img) const {
    for (const Matroid& m : ms_) {
      if (m.IsLoop(p) != m.IsLoop(ip)) return false;
    }
    for (int q = 1; q <= d_; ++q) {
      if (img[q] == 0 || q == p) continue;
      Mask a = Bit(p) | Bit(q);
      Mask b = Bit(ip) | Bit(img[q]);
      for (const Matroid& m : ms_) {
        if (m.IsDependent(a) != m.IsDependent(b)) return false;
      }
      for (int r = q + 1; r <= d_; ++r) {
        if (img[r] == 0 || r == p) continue;
        Mask a3 = a | Bit(r);
        Mask b3 = b | Bit(img[r]);
        for (const Matroid& m : ms_) {
          if (m.IsDependent(a3) != m.IsDependent(b3)) return false;
        }
      }
    }
    return true;
  }

 private:
  const std::vector<Matroid>& ms_;
  std::vector<std::vector<Mask>> line_sets_;
  int d_ = 0;
};

std::vector<int> Individualize(const std::vector<int>& col, int v) {
  std::vector<int> out(col.size(), 0);
  for (size_t p = 1; p < col.size(); ++p) {
    out[p] = 2 * col[p] + (static_cast<int>(p) == v ? 0 : 1);
  }
  return out;
}

struct CanonicalSearch {
  const TupleView& view;
  std::optional<std::vector<Matroid>> best;
  Permutation best_perm;

  void Run(const std::vector<int>& col_in) {
    std::vector<int> col = view.Refine(col_in);
    int d = view.d();
    std::vector<int> count(d + 1, 0);
    for (int p = 1; p <= d; ++p) ++count[col[p]];
    int target = -1;
    for (int c = 0; c < d; ++c) {
      if (count[c] >= 2) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      Permutation perm(d + 1, 0);
      for (int p = 1; p <= d; ++p) perm[p] = col[p] + 1;
      std::vector<Matroid> forms = view.Apply(perm);
      if (!best || forms < *best) {
        best = std::move(forms);
        best_perm = perm;
      }
      return;
    }
    std::vector<int> explored;
    for (int v = 1; v <= d; ++v) {
      if (col[v] != target) continue;
      bool twin = false;
      for (int w : explored) {
        Permutation swap = IdentityPermutation(d);
        std::swap(swap[v], swap[w]);
        if (view.IsAutomorphism(swap)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      explored.push_back(v);
      Run(Individualize(col, v));
    }
  }
};

// Automorphism extending the partial map `img`, assigning points in order.
bool ExtendAutomorphism(const TupleView& view, const std::vector<int>& col,
                        std::vector<int>& img, std::vector<bool>& used,
                        int p) {
  int d = view.d();
  while (p <= d && img[p] != 0) ++p;
  if (p > d) return view.IsAutomorphism(img);
  for (int q = 1; q <= d; ++q) {
    if (used[q] || col[q] != col[p]) continue;
    if (!view.Compatible(p, q, img)) continue;
    img[p] = q;
    used[q] = true;
    if (ExtendAutomorphism(view, col, img, used, p + 1)) return true;
    img[p] = 0;
    used[q] = false;
  }
  return false;
}

}  // namespace

Permutation IdentityPermutation(int d) {
  Permutation p(d + 1);
  for (int i = 0; i <= d; ++i) p[i] = i;
  return p;
}

Permutation Compose(const Permutation& outer, const Permutation& inner) {
  Permutation p(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) p[i] = outer[inner[i]];
  return p;
}

std::string CycleString(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 1; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

PermutationGroup Automorphisms(const Matroid& m) {
  std::vector<Matroid> ms{m};
  TupleView view(ms);
  int d = m.d();
  std::vector<int> col = view.Refine(std::vector<int>(d + 1, 0));
  PermutationGroup g;
  g.degree = d;
  // Orbit of each base point under the stabilizer of the earlier ones.
  for (int b = 1; b <= d; ++b) {
    std::uint64_t orbit = 1;
    for (int c = b + 1; c <= d; ++c) {
      if (col[c] != col[b]) continue;
      std::vector<int> img(d + 1, 0);
      std::vector<bool> used(d + 1, false);
      for (int f = 1; f < b; ++f) {
        img[f] = f;
        used[f] = true;
      }
      if (!view.Compatible(b, c, img)) continue;
      img[b] = c;
      used[c] = true;
      if (ExtendAutomorphism(view, col, img, used, 1)) {
        ++orbit;
        g.generators.push_back(img);
      }
    }
    g.order *= orbit;
  }
  return g;
}

PermutationGroup Automorphisms(const Configuration& c) {
  return Automorphisms(Matroid::FromConfiguration(c));
}

CanonicalLabeling CanonicalLabel(const std::vector<Matroid>& ms) {
  TupleView view(ms);
  int d = view.d();
  if (d > kMaxCanonicalPoints) {
    throw Error(ErrorCode::kGroundSetTooLarge,
                std::to_string(d) + " points, limit " +
                    std::to_string(kMaxCanonicalPoints));
  }
  CanonicalSearch search{view, std::nullopt, {}};
  search.Run(std::vector<int>(d + 1, 0));
  return {std::move(*search.best), std::move(search.best_perm)};
}

Matroid CanonicalForm(const Matroid& m) { return CanonicalLabel({m}).forms[0]; }

bool Isomorphic(const Matroid& a, const Matroid& b) {
  return a.d() == b.d() && CanonicalForm(a) == CanonicalForm(b);
}

std::vector<OrbitClass> OrbitClassify(const PermutationGroup& g,
                                      const std::vector<Matroid>& s) {
  std::set<Matroid> pending(s.begin(), s.end());
  std::vector<OrbitClass> out;
  while (!pending.empty()) {
    Matroid start = *pending.begin();
    std::set<Matroid> orbit{start};
    std::deque<Matroid> queue{start};
    while (!queue.empty()) {
      Matroid cur = queue.front();
      queue.pop_front();
      for (const Permutation& gen : g.generators) {
        Matroid next = cur.Relabel(gen);
        if (orbit.insert(next).second) queue.push_back(next);
      }
    }
    OrbitClass cls;
    for (const Matroid& m : orbit) {
      if (pending.erase(m)) cls.members.push_back(m);
    }
    cls.size = static_cast<int>(cls.members.size());
    cls.representative = cls.members.front();
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const OrbitClass& a, const OrbitClass& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return out;
}

}  // namespace plc
