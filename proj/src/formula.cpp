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

#include "plc/formula.hpp"

#include <algorithm>

#include "plc/error.hpp"

namespace plc {

Formula::Formula(int d) : d_(d) {
  if (d < 0 || d > kMaxPoints) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "ground set size " + std::to_string(d));
  }
  for (int p = 1; p <= d; ++p) {
    rep_[p] = static_cast<std::uint8_t>(p);
    class_[p] = Bit(p);
  }
}

Formula Formula::FromAtoms(int d,
                           const std::vector<std::pair<int, int>>& merges,
                           const std::vector<std::pair<int, int>>& forbids) {
  Formula f(d);
  auto check = [d](int a, int b) {
    if (a < 1 || a > d || b < 1 || b > d) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "atom (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  };
  for (auto [a, b] : merges) {
    check(a, b);
    auto g = f.Merge(a, b);
    if (!g) throw Error(ErrorCode::kInconsistentFormula, "merge contradicts");
    f = *g;
  }
  for (auto [a, b] : forbids) {
    check(a, b);
    auto g = f.Forbid(a, b);
    if (!g) throw Error(ErrorCode::kInconsistentFormula, "separation contradicts");
    f = *g;
  }
  return f;
}

Mask Formula::Reps() const {
  Mask m = 0;
  for (int p = 1; p <= d_; ++p) {
    if (rep_[p] == p) m |= Bit(p);
  }
  return m;
}

std::vector<Mask> Formula::Classes() const {
  std::vector<Mask> out;
  ForEach(Reps(), [&](int r) { out.push_back(class_[r]); });
  return out;
}

bool Formula::HasMerges() const { return Size(Reps()) < d_; }

std::vector<std::pair<int, int>> Formula::ForbiddenPairs() const {
  std::vector<std::pair<int, int>> out;
  ForEach(Reps(), [&](int r) {
    ForEach(forbid_[r] & ~FullMask(r), [&](int s) { out.emplace_back(r, s); });
  });
  return out;
}

std::optional<Formula> Formula::Merge(int a, int b) const {
  int ra = rep_[a];
  int rb = rep_[b];
  if (ra == rb) return *this;
  if (forbid_[ra] & Bit(rb)) return std::nullopt;
  if (ra > rb) std::swap(ra, rb);
  Formula f = *this;
  f.class_[ra] |= f.class_[rb];
  ForEach(f.class_[rb], [&](int p) { f.rep_[p] = static_cast<std::uint8_t>(ra); });
  f.class_[rb] = 0;
  f.forbid_[ra] |= f.forbid_[rb];
  ForEach(f.forbid_[rb], [&](int s) {
    f.forbid_[s] = (f.forbid_[s] & ~Bit(rb)) | Bit(ra);
  });
  f.forbid_[rb] = 0;
  return f;
}

std::optional<Formula> Formula::Forbid(int a, int b) const {
  int ra = rep_[a];
  int rb = rep_[b];
  if (ra == rb) return std::nullopt;
  Formula f = *this;
  f.forbid_[ra] |= Bit(rb);
  f.forbid_[rb] |= Bit(ra);
  return f;
}

std::string Formula::Key() const {
  std::string key;
  key.reserve(d_ * 5);
  for (int p = 1; p <= d_; ++p) key.push_back(static_cast<char>(rep_[p]));
  ForEach(Reps(), [&](int r) {
    Mask m = forbid_[r];
    for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>(m >> (8 * i)));
  });
  return key;
}

namespace {

bool HasForbiddenPair(Mask s, const ForbidAdjacency& forbid) {
  bool found = false;
  ForEach(s, [&](int p) {
    if (forbid[p] & s) found = true;
  });
  return found;
}

}  // namespace

std::vector<Mask> MergeClosure(std::vector<Mask> edges,
                               const ForbidAdjacency& forbid,
                               const MergeObserver& observer) {
  edges = Antichain(std::move(edges));
  while (true) {
    bool merged = false;
    for (size_t i = 0; i < edges.size() && !merged; ++i) {
      for (size_t j = i + 1; j < edges.size(); ++j) {
        Mask common = edges[i] & edges[j];
        if (Size(common) < 2 || !HasForbiddenPair(common, forbid)) continue;
        Mask u = edges[i] | edges[j];
        std::vector<Mask> next;
        next.reserve(edges.size());
        for (Mask e : edges) {
          if (!Contains(u, e)) next.push_back(e);
        }
        next.push_back(u);
        SortUniqueLex(next);
        edges = std::move(next);
        if (observer && !observer(u)) return edges;
        merged = true;
        break;
      }
    }
    if (!merged) return edges;
  }
}

Hypergraph MergeClosure(const Hypergraph& h,
                        const std::vector<std::pair<int, int>>& forbid) {
  ForbidAdjacency adj{};
  for (auto [a, b] : forbid) {
    if (a < 1 || a > h.d() || b < 1 || b > h.d()) {
      throw Error(ErrorCode::kLabelOutOfRange, "forbidden pair");
    }
    if (a == b) continue;
    adj[a] |= Bit(b);
    adj[b] |= Bit(a);
  }
  return UncheckedHypergraph(h.d(), MergeClosure(h.edges(), adj));
}

std::vector<Mask> QuotientEdges(const std::vector<Mask>& edges,
                                const Formula& f) {
  std::vector<Mask> out;
  out.reserve(edges.size());
  for (Mask e : edges) {
    Mask img = 0;
    ForEach(e, [&](int p) { img |= Bit(f.Rep(p)); });
    if (Size(img) >= 3) out.push_back(img);
  }
  return Antichain(std::move(out));
}

Hypergraph Quotient(const Hypergraph& h, const Formula& f) {
  return UncheckedHypergraph(h.d(), QuotientEdges(h.edges(), f));
}

Hypergraph DeltaF(const Hypergraph& h, const Formula& f) {
  if (h.d() != f.d()) {
    throw Error(ErrorCode::kGroundSetMismatch, "hypergraph vs formula");
  }
  return UncheckedHypergraph(
      h.d(), MergeClosure(QuotientEdges(h.edges(), f), f.forbid()));
}

Hypergraph DeltaFExtend(const Hypergraph& parent_delta, const Formula& f) {
  return DeltaF(parent_delta, f);
}

bool IsLinear(const std::vector<Mask>& edges) {
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      if (Size(edges[i] & edges[j]) >= 2) return false;
    }
  }
  return true;
}

bool HasPropertyX(const Hypergraph& lines, const Formula& f) {
  return IsLinear(DeltaF(lines, f).edges());
}

Matroid RealizeFromDelta(int d, const Formula& f, const Hypergraph& delta) {
  if (!IsLinear(delta.edges())) {
    throw Error(ErrorCode::kPropertyXViolated,
                "two closed edges share two classes");
  }
  return Matroid::Create(d, 0, f.Classes(), delta.edges());
}

Matroid RealizeFormula(const Configuration& m, const Formula& f) {
  return RealizeFromDelta(m.d(), f, DeltaF(m.AsHypergraph(), f));
}

Configuration PlcClosure(const Hypergraph& h) {
  ForbidAdjacency all{};
  for (int p = 1; p <= h.d(); ++p) all[p] = FullMask(h.d()) & ~Bit(p);
  return Configuration::FromMasks(h.d(), MergeClosure(h.edges(), all));
}

}  // namespace plc
