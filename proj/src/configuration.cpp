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

#include "plc/configuration.hpp"

#include <algorithm>
#include <string>

#include "plc/error.hpp"

namespace plc {
namespace {

void CheckGround(int d) {
  if (d < 0 || d > kMaxPoints) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "ground set size " + std::to_string(d) + " outside 0.." +
                    std::to_string(kMaxPoints));
  }
}

Mask CheckedMask(int d, const std::vector<int>& points) {
  Mask m = 0;
  for (int p : points) {
    if (p < 1 || p > d) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "point " + std::to_string(p) + " not in 1.." +
                      std::to_string(d));
    }
    m |= Bit(p);
  }
  return m;
}

std::string Describe(Mask m) {
  std::string s = "{";
  bool first = true;
  ForEach(m, [&](int p) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  });
  return s + "}";
}

}  // namespace

std::vector<Mask> Antichain(std::vector<Mask> edges) {
  SortUniqueLex(edges);
  std::vector<Mask> out;
  out.reserve(edges.size());
  for (Mask e : edges) {
    bool contained = false;
    for (Mask f : edges) {
      if (f != e && Contains(f, e)) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(e);
  }
  return out;
}

Hypergraph UncheckedHypergraph(int d, std::vector<Mask> edges) {
  return Hypergraph(d, Antichain(std::move(edges)));
}

Hypergraph Hypergraph::Create(int d, std::vector<Mask> edges) {
  CheckGround(d);
  for (Mask e : edges) {
    if ((e & ~FullMask(d)) != 0) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "edge " + Describe(e) + " leaves [" + std::to_string(d) +
                      "]");
    }
    if (Size(e) < 3) {
      throw Error(ErrorCode::kLineTooShort, "edge " + Describe(e));
    }
  }
  return Hypergraph(d, Antichain(std::move(edges)));
}

Hypergraph Hypergraph::FromLists(int d,
                                 const std::vector<std::vector<int>>& edges) {
  CheckGround(d);
  std::vector<Mask> masks;
  for (const auto& e : edges) masks.push_back(CheckedMask(d, e));
  return Create(d, std::move(masks));
}

bool HypergraphLeq(const Hypergraph& a, const Hypergraph& b) {
  for (Mask e : a.edges()) {
    bool found = false;
    for (Mask f : b.edges()) {
      if (Contains(f, e)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Configuration Configuration::FromMasks(int d, std::vector<Mask> lines) {
  CheckGround(d);
  SortUniqueLex(lines);
  for (Mask l : lines) {
    if ((l & ~FullMask(d)) != 0) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  "line " + Describe(l) + " leaves [" + std::to_string(d) +
                      "]");
    }
    if (Size(l) < 3) {
      throw Error(ErrorCode::kLineTooShort, "line " + Describe(l));
    }
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (Size(lines[i] & lines[j]) >= 2) {
        throw Error(ErrorCode::kLinesShareTwoPoints,
                    "lines " + Describe(lines[i]) + " and " +
                        Describe(lines[j]));
      }
    }
  }
  Configuration c;
  c.d_ = d;
  c.lines_ = std::move(lines);
  return c;
}

Configuration Configuration::Create(
    int d, const std::vector<std::vector<int>>& lines) {
  CheckGround(d);
  std::vector<Mask> masks;
  for (const auto& l : lines) masks.push_back(CheckedMask(d, l));
  return FromMasks(d, std::move(masks));
}

int Configuration::Degree(int p) const {
  int n = 0;
  for (Mask l : lines_) n += (l & Bit(p)) ? 1 : 0;
  return n;
}

int Configuration::MaxDegree() const {
  int best = 0;
  for (int p = 1; p <= d_; ++p) best = std::max(best, Degree(p));
  return best;
}

Mask Configuration::Neighborhood(int p) const {
  Mask m = 0;
  for (Mask l : lines_) {
    if (l & Bit(p)) m |= l;
  }
  return m;
}

bool Configuration::Collinear(Mask s) const {
  for (Mask l : lines_) {
    if (Contains(l, s)) return true;
  }
  return false;
}

int Configuration::Rank() const {
  if (d_ <= 2) return d_;
  if (lines_.size() == 1 && lines_[0] == FullMask(d_)) return 2;
  return 3;
}

Configuration Configuration::Restrict(Mask s) const {
  Configuration c;
  c.d_ = d_;
  for (Mask l : lines_) {
    if (Size(l & s) >= 3) c.lines_.push_back(l & s);
  }
  SortUniqueLex(c.lines_);
  return c;
}

Hypergraph Configuration::AsHypergraph() const {
  return UncheckedHypergraph(d_, lines_);
}

Mask SPoints(const Configuration& m) {
  Mask out = 0;
  for (int p = 1; p <= m.d(); ++p) {
    if (m.Degree(p) >= 2) out |= Bit(p);
  }
  return out;
}

Mask QPoints(const Configuration& m) {
  Mask out = 0;
  for (int p = 1; p <= m.d(); ++p) {
    if (m.Degree(p) >= 3) out |= Bit(p);
  }
  return out;
}

Configuration ReduceS(const Configuration& m) { return m.Restrict(SPoints(m)); }
Configuration ReduceQ(const Configuration& m) { return m.Restrict(QPoints(m)); }

namespace {

bool ChainEmpties(const Configuration& m, Mask (*points)(const Configuration&)) {
  Mask current = FullMask(m.d());
  Configuration c = m;
  for (int step = 0; step <= m.d(); ++step) {
    Mask next = points(c);
    if (next == 0) return true;
    if (next == current) return false;
    current = next;
    c = c.Restrict(next);
  }
  return false;
}

}  // namespace

bool IsNilpotent(const Configuration& m) { return ChainEmpties(m, SPoints); }
bool IsSolvable(const Configuration& m) { return ChainEmpties(m, QPoints); }

}  // namespace plc
