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

#include "plc/matroid.hpp"

#include <algorithm>
#include <string>

#include "plc/error.hpp"

namespace plc {

Matroid Matroid::Create(int d, Mask loops, std::vector<Mask> classes,
                        const std::vector<Mask>& lines) {
  if (d < 0 || d > kMaxPoints) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "ground set size " + std::to_string(d));
  }
  Mask ground = FullMask(d);
  if ((loops & ~ground) != 0) {
    throw Error(ErrorCode::kLabelOutOfRange, "loop outside ground set");
  }
  Mask covered = loops;
  for (Mask c : classes) {
    if (c == 0 || (c & ~ground) != 0) {
      throw Error(ErrorCode::kLabelOutOfRange, "bad parallel class");
    }
    if ((c & covered) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "parallel classes overlap each other or the loops");
    }
    covered |= c;
  }
  ForEach(ground & ~covered, [&](int p) { classes.push_back(Bit(p)); });

  Matroid m;
  m.d_ = d;
  m.loops_ = loops;
  m.classes_ = std::move(classes);
  std::sort(m.classes_.begin(), m.classes_.end(),
            [](Mask a, Mask b) { return Lowest(a) < Lowest(b); });
  for (Mask c : m.classes_) {
    int r = Lowest(c);
    ForEach(c, [&](int p) { m.rep_[p] = static_cast<std::uint8_t>(r); });
  }
  for (Mask l : lines) {
    if ((l & ~ground) != 0) {
      throw Error(ErrorCode::kLabelOutOfRange, "line outside ground set");
    }
    Mask r = m.RepsOf(l);
    if (Size(r) >= 3) m.lines_.push_back(r);
  }
  SortUniqueLex(m.lines_);
  for (size_t i = 0; i < m.lines_.size(); ++i) {
    for (size_t j = i + 1; j < m.lines_.size(); ++j) {
      if (Size(m.lines_[i] & m.lines_[j]) >= 2) {
        throw Error(ErrorCode::kLinesShareTwoPoints,
                    "two lines meet in two parallel classes");
      }
    }
  }
  m.Finish();
  return m;
}

void Matroid::Finish() {
  int k = static_cast<int>(classes_.size());
  if (k <= 2) {
    rank_ = k;
    lines_.clear();
  } else if (lines_.size() == 1 && lines_[0] == Reps()) {
    rank_ = 2;
  } else {
    rank_ = 3;
  }
}

Matroid Matroid::FromConfiguration(const Configuration& c) {
  return Create(c.d(), 0, {}, c.lines());
}

Matroid Matroid::UniformRank2(int d, Mask support) {
  return Create(d, FullMask(d) & ~support, {}, {support});
}

Mask Matroid::Reps() const {
  Mask m = 0;
  for (Mask c : classes_) m |= Bit(Lowest(c));
  return m;
}

Mask Matroid::RepsOf(Mask s) const {
  Mask m = 0;
  ForEach(s & ~loops_, [&](int p) { m |= Bit(rep_[p]); });
  return m;
}

Mask Matroid::ClassOf(int p) const {
  if (IsLoop(p)) return 0;
  for (Mask c : classes_) {
    if (c & Bit(p)) return c;
  }
  return 0;
}

bool Matroid::IsSimple() const {
  return loops_ == 0 && static_cast<int>(classes_.size()) == d_;
}

int Matroid::ParallelPairCount() const {
  int n = 0;
  for (Mask c : classes_) n += Size(c) * (Size(c) - 1) / 2;
  return n;
}

int Matroid::RankOf(Mask s) const {
  Mask r = RepsOf(s);
  int c = Size(r);
  if (c <= 2) return c;
  for (Mask l : lines_) {
    if (Contains(l, r)) return 2;
  }
  return 3;
}

bool Matroid::IsCircuit(Mask s) const {
  if (!IsDependent(s)) return false;
  bool minimal = true;
  ForEach(s, [&](int p) {
    if (IsDependent(s & ~Bit(p))) minimal = false;
  });
  return minimal;
}

std::vector<Mask> Matroid::LinePointSets() const {
  std::vector<Mask> out;
  for (Mask l : lines_) {
    Mask u = 0;
    ForEach(l, [&](int r) { u |= ClassOf(r); });
    out.push_back(u);
  }
  return out;
}

Matroid Matroid::AddLoop(int i) const {
  if (i < 1 || i > d_) {
    throw Error(ErrorCode::kLabelOutOfRange, "point " + std::to_string(i));
  }
  if (IsLoop(i)) {
    throw Error(ErrorCode::kAlreadyLoop, "point " + std::to_string(i));
  }
  std::vector<Mask> classes;
  for (Mask c : classes_) {
    Mask rest = c & ~Bit(i);
    if (rest != 0) classes.push_back(rest);
  }
  std::vector<Mask> lines = LinePointSets();
  for (Mask& l : lines) l &= ~Bit(i);
  return Create(d_, loops_ | Bit(i), std::move(classes), lines);
}

Simplification Matroid::Simplify() const {
  if (rank_ < 3) {
    throw Error(ErrorCode::kRankTooLow,
                "rank " + std::to_string(rank_) + " has no simplification");
  }
  Simplification s;
  int k = static_cast<int>(classes_.size());
  s.class_of.assign(d_ + 1, 0);
  s.members.assign(k + 1, 0);
  std::array<int, kMaxPoints + 1> label{};
  for (int i = 0; i < k; ++i) {
    s.members[i + 1] = classes_[i];
    label[Lowest(classes_[i])] = i + 1;
    ForEach(classes_[i], [&](int p) { s.class_of[p] = i + 1; });
  }
  std::vector<Mask> lines;
  for (Mask l : lines_) {
    Mask g = 0;
    ForEach(l, [&](int r) { g |= Bit(label[r]); });
    lines.push_back(g);
  }
  s.geometry = Configuration::FromMasks(k, std::move(lines));
  return s;
}

Matroid Matroid::Relabel(const std::vector<int>& perm) const {
  auto image = [&](Mask m) {
    Mask out = 0;
    ForEach(m, [&](int p) { out |= Bit(perm[p]); });
    return out;
  };
  std::vector<Mask> classes;
  for (Mask c : classes_) classes.push_back(image(c));
  std::vector<Mask> lines;
  for (Mask l : LinePointSets()) lines.push_back(image(l));
  return Create(d_, image(loops_), std::move(classes), lines);
}

int Matroid::SmallDependentCount() const {
  int n = 0;
  for (int a = 1; a <= d_; ++a) {
    if (IsDependent(Bit(a))) ++n;
    for (int b = a + 1; b <= d_; ++b) {
      if (IsDependent(Bit(a) | Bit(b))) ++n;
      for (int c = b + 1; c <= d_; ++c) {
        if (IsDependent(Bit(a) | Bit(b) | Bit(c))) ++n;
      }
    }
  }
  return n;
}

std::strong_ordering operator<=>(const Matroid& a, const Matroid& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  if (auto c = a.loops_ <=> b.loops_; c != 0) return c;
  if (auto c = a.classes_ <=> b.classes_; c != 0) return c;
  return a.lines_ <=> b.lines_;
}

bool DependencyLeq(const Matroid& a, const Matroid& b) {
  if (a.d() != b.d()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                std::to_string(a.d()) + " vs " + std::to_string(b.d()));
  }
  if (!Contains(b.loops(), a.loops())) return false;
  for (Mask c : a.classes()) {
    if (Size(b.RepsOf(c)) > 1) return false;
  }
  for (Mask l : a.LinePointSets()) {
    if (b.RankOf(l) > 2) return false;
  }
  return true;
}

bool SatisfiesCircuitAxioms(const Matroid& m) {
  for (size_t i = 0; i < m.lines().size(); ++i) {
    if (Size(m.lines()[i]) < 3) return false;
    for (size_t j = i + 1; j < m.lines().size(); ++j) {
      if (Size(m.lines()[i] & m.lines()[j]) >= 2) return false;
    }
  }
  int d = m.d();
  std::vector<Mask> circuits;
  for (Mask s = 1; s <= FullMask(d) && s != 0; ++s) {
    if (Size(s) > 4) continue;
    if (m.IsCircuit(s)) circuits.push_back(s);
  }
  for (size_t i = 0; i < circuits.size(); ++i) {
    for (size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if (Contains(circuits[j], circuits[i])) return false;
      Mask common = circuits[i] & circuits[j];
      Mask uni = circuits[i] | circuits[j];
      bool ok = true;
      ForEach(common, [&](int e) {
        if (!m.IsDependent(uni & ~Bit(e))) ok = false;
      });
      if (!ok) return false;
    }
  }
  // Every four-set is dependent.
  for (Mask s = 1; s <= FullMask(d) && s != 0; ++s) {
    if (Size(s) == 4 && !m.IsDependent(s)) return false;
  }
  return true;
}

std::vector<Matroid> MinimalElements(std::vector<Matroid> ms) {
  std::vector<std::pair<int, Matroid>> keyed;
  keyed.reserve(ms.size());
  for (auto& m : ms) keyed.emplace_back(m.SmallDependentCount(), std::move(m));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<Matroid> out;
  for (auto& [count, m] : keyed) {
    bool dominated = false;
    for (const Matroid& kept : out) {
      if (DependencyLeq(kept, m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plc
