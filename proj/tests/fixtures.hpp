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

#ifndef PLC_TESTS_FIXTURES_HPP_
#define PLC_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "plc/bits.hpp"
#include "plc/library.hpp"
#include "plc/matroid.hpp"
#include "plc/variety.hpp"

namespace plc::testing {

using Labeled = std::pair<Matroid, std::string>;

inline bool Collinear(const Matroid& m, int a, int b) {
  for (Mask l : m.lines()) {
    if (Contains(l, Bit(a)) && Contains(l, Bit(b))) return true;
  }
  return false;
}

// Point x kept free; every other point goes on one line, where the two
// further points of each line through x coincide.
inline Matroid FreePointLine(const Matroid& m, int x) {
  std::vector<Mask> classes = {Bit(x)};
  Mask rest = FullMask(m.d()) & ~Bit(x);
  for (Mask l : m.lines()) {
    if (Contains(l, Bit(x))) {
      classes.push_back(l & ~Bit(x));
      rest &= ~l;
    }
  }
  ForEach(rest, [&](int p) { classes.push_back(Bit(p)); });
  return Matroid::Create(m.d(), 0, classes, {FullMask(m.d()) & ~Bit(x)});
}

// Line l kept, every other point merged into one point off it.
inline Matroid CollapsedLine(const Matroid& m, Mask l) {
  std::vector<Mask> classes = {FullMask(m.d()) & ~l};
  ForEach(l, [&](int p) { classes.push_back(Bit(p)); });
  return Matroid::Create(m.d(), 0, classes, {l});
}

inline Matroid WithLoops(const Matroid& m, Mask s) {
  Matroid out = m;
  ForEach(s, [&](int p) { out = out.AddLoop(p); });
  return out;
}

// Pairs of points on no common line.
inline std::vector<Mask> ApartPairs(const Matroid& m) {
  std::vector<Mask> out;
  for (int a = 1; a <= m.d(); ++a) {
    for (int b = a + 1; b <= m.d(); ++b) {
      if (!Collinear(m, a, b)) out.push_back(Bit(a) | Bit(b));
    }
  }
  return out;
}

// Triples of points pairwise on no common line.
inline std::vector<Mask> ApartTriples(const Matroid& m) {
  std::vector<Mask> out;
  for (int a = 1; a <= m.d(); ++a) {
    for (int b = a + 1; b <= m.d(); ++b) {
      for (int c = b + 1; c <= m.d(); ++c) {
        if (!Collinear(m, a, b) && !Collinear(m, a, c) && !Collinear(m, b, c)) {
          out.push_back(Bit(a) | Bit(b) | Bit(c));
        }
      }
    }
  }
  return out;
}

inline void AddPlain(std::vector<Labeled>& out, const Matroid& m) { out.push_back({m, ""}); }

inline void AddSplit(std::vector<Labeled>& out, const Matroid& m) {
  out.push_back({m, "+"});
  out.push_back({m, "-"});
}

// Irreducible components of the circuit variety of a named configuration,
// built from the descriptions of each family.
inline std::vector<Labeled> ExpectedComponents(const std::string& name) {
  Matroid m = Matroid::FromConfiguration(Named(name));
  const int d = m.d();
  std::vector<Labeled> out;
  AddPlain(out, Matroid::UniformRank2(d, FullMask(d)));
  if (name == "fano") {
    for (int i = 1; i <= d; ++i) AddPlain(out, m.AddLoop(i));
    for (Mask l : m.lines()) AddPlain(out, CollapsedLine(m, l));
    for (int x = 1; x <= d; ++x) AddPlain(out, FreePointLine(m, x));
  } else if (name == "maclane") {
    AddSplit(out, m);
    for (int i = 1; i <= d; ++i) AddPlain(out, m.AddLoop(i));
    for (Mask pair : ApartPairs(m)) AddPlain(out, WithLoops(m, pair));
    for (int x = 1; x <= d; ++x) AddPlain(out, FreePointLine(m, x));
  } else if (name == "affine3") {
    AddSplit(out, m);
    for (int i = 1; i <= d; ++i) AddSplit(out, m.AddLoop(i));
    for (int a = 1; a <= d; ++a) {
      for (int b = a + 1; b <= d; ++b) AddPlain(out, WithLoops(m, Bit(a) | Bit(b)));
    }
    for (Mask l : m.lines()) AddPlain(out, WithLoops(m, l));
    for (int x = 1; x <= d; ++x) AddPlain(out, FreePointLine(m, x));
  } else if (name == "pappus") {
    AddPlain(out, m);
    for (Mask pair : ApartPairs(m)) AddPlain(out, WithLoops(m, pair));
    for (Mask t : ApartTriples(m)) AddPlain(out, WithLoops(m, t));
    for (int x = 1; x <= d; ++x) AddPlain(out, FreePointLine(m, x));
  } else if (name == "k9") {
    AddPlain(out, m);
    for (int i = 1; i <= d; ++i) AddPlain(out, m.AddLoop(i));
    for (Mask pair : ApartPairs(m)) AddPlain(out, WithLoops(m, pair));
    for (int x = 1; x <= d; ++x) AddPlain(out, FreePointLine(m, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Labeled> Components(const Decomposition& dec) {
  std::vector<Labeled> out;
  for (const VarietyNode& n : dec.components) out.push_back({n.matroid, n.component});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plc::testing

#endif  // PLC_TESTS_FIXTURES_HPP_
