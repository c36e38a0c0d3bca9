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

// Writes the registered geometric facts used by the decomposition engine as
// JSON on standard output. Each fact records a statement proved by hand for
// one of the named configurations; the matroids are rebuilt here so the
// shipped file can be regenerated and checked.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "plc/bits.hpp"
#include "plc/io.hpp"
#include "plc/library.hpp"
#include "plc/minimal.hpp"
#include "plc/symmetry.hpp"

namespace {

using plc::Bit;
using plc::Configuration;
using plc::Json;
using plc::Mask;
using plc::Matroid;

class Writer {
 public:
  void Realizable(const char* name, bool value, const std::string& citation) {
    out_.push_back({{"type", "realizable"},
                    {"subject", plc::ToJson(Top(name))},
                    {"value", value},
                    {"citation", citation}});
  }
  void Components(const char* name, int value, const std::string& citation) {
    out_.push_back({{"type", "components"},
                    {"subject", plc::ToJson(Top(name))},
                    {"value", value},
                    {"citation", citation}});
  }
  void Containment(const Matroid& inner, const Matroid& outer,
                   const std::string& citation) {
    out_.push_back({{"type", "containment"},
                    {"subject", plc::ToJson(inner)},
                    {"object", plc::ToJson(outer)},
                    {"citation", citation}});
  }
  void Cover(const Matroid& subject, const std::vector<Matroid>& objects,
             const std::vector<Matroid>& circuit_objects,
             const std::string& citation) {
    Json e = {{"type", "containment"}, {"subject", plc::ToJson(subject)}};
    e["objects"] = Json::array();
    for (const Matroid& o : objects) e["objects"].push_back(plc::ToJson(o));
    if (!circuit_objects.empty()) {
      e["circuit_objects"] = Json::array();
      for (const Matroid& o : circuit_objects) {
        e["circuit_objects"].push_back(plc::ToJson(o));
      }
    }
    e["citation"] = citation;
    out_.push_back(e);
  }
  const Json& json() const { return out_; }

  static Matroid Top(const char* name) {
    return Matroid::FromConfiguration(plc::Named(name));
  }

 private:
  Json out_ = Json::array();
};

// All classes on one line, loops kept.
Matroid Flat(const Matroid& m) {
  return Matroid::Create(m.d(), m.loops(), m.classes(),
                         {plc::FullMask(m.d()) & ~m.loops()});
}

bool Collinear(const Matroid& m, int a, int b) {
  for (Mask l : m.lines()) {
    if (plc::Contains(l, Bit(a)) && plc::Contains(l, Bit(b))) return true;
  }
  return false;
}

// Sorted sizes of the non-trivial parallel classes.
std::vector<int> ClassShape(const Matroid& m) {
  std::vector<int> out;
  for (Mask c : m.classes()) {
    if (plc::Size(c) > 1) out.push_back(plc::Size(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matroid> WithShape(const std::vector<Matroid>& ms, std::vector<int> shape) {
  std::vector<Matroid> out;
  for (const Matroid& m : ms) {
    if (ClassShape(m) == shape && m.rank() == 3) out.push_back(m);
  }
  return out;
}

void Basics(Writer& w) {
  w.Realizable("fano", false, "the Fano plane has no complex realization");
  w.Realizable("maclane", true,
               "the MacLane configuration is realizable over the complex numbers");
  w.Realizable("affine3", true,
               "the affine plane of order three is realizable over the complex numbers");
  w.Realizable("pappus", true, "the Pappus configuration is realizable");
  w.Realizable("k9", true, "the second nine-three configuration is realizable");
  w.Components("maclane", 2, "the MacLane matroid variety has two irreducible components");
  w.Components("affine3", 2,
               "the matroid variety of the affine plane of order three has two "
               "irreducible components");
  w.Components("pappus", 1, "the Pappus matroid variety is irreducible");
  w.Components("k9", 1,
               "the matroid variety of the second nine-three configuration is irreducible");
}

// A line of m kept, every other point merged into one point off it.
void CollapsedLines(Writer& w, const char* name, const std::string& citation) {
  Matroid m = Writer::Top(name);
  for (Mask l : m.lines()) {
    std::vector<Mask> classes = {plc::FullMask(m.d()) & ~l};
    plc::ForEach(l, [&](int p) { classes.push_back(Bit(p)); });
    w.Containment(Matroid::Create(m.d(), 0, classes, {l}), m, citation);
  }
}

void MacLane(Writer& w) {
  CollapsedLines(w, "maclane",
                 "a MacLane line with the other points merged off it lies in the MacLane "
                 "variety");
  // The MacLane configuration with one point deleted.
  Configuration n = Configuration::Create(
      7, {{6, 3, 4}, {6, 2, 7}, {6, 1, 5}, {2, 3, 5}, {1, 4, 7}});
  Matroid nm = Matroid::FromConfiguration(n);
  for (const plc::OrbitClass& c :
       plc::OrbitClassify(plc::Automorphisms(nm), plc::MinMatroids(n).Matroids())) {
    const Matroid& r = c.representative;
    if (r.rank() < 3 || r == nm.AddLoop(6)) continue;
    w.Containment(r, nm,
                  "minimal matroids of the MacLane configuration with a point deleted, "
                  "other than the loop at its degree-three point, lie in its matroid variety");
  }
}

void K9(Writer& w) {
  Matroid k9 = Writer::Top("k9");
  std::vector<Matroid> mins = plc::MinMatroids(plc::Named("k9")).Matroids();
  Matroid five = WithShape(mins, {5}).at(0);
  Matroid four_two = WithShape(mins, {2, 4}).at(0);
  Matroid three_two = WithShape(mins, {2, 3}).at(0);
  Matroid three = WithShape(mins, {3}).at(0);
  w.Containment(five, k9,
                "identifying five points of the second nine-three configuration stays "
                "inside its matroid variety");
  w.Containment(four_two, k9,
                "identifying disjoint point sets of sizes four and two of the second "
                "nine-three configuration stays inside its matroid variety");
  w.Containment(three_two, k9,
                "identifying a triple and a pair of the second nine-three configuration "
                "stays inside its matroid variety");
  w.Containment(three, k9,
                "identifying a triple that makes four other points collinear stays inside "
                "the matroid variety of the second nine-three configuration");
  w.Cover(five, {five}, {},
          "identifying five points of the second nine-three configuration gives a circuit "
          "variety equal to its matroid variety");
  w.Cover(four_two, {four_two}, {},
          "identifying point sets of sizes four and two of the second nine-three "
          "configuration gives a circuit variety equal to its matroid variety");
  w.Cover(three_two, {three_two, Flat(three_two)}, {},
          "identifying a triple and a pair of the second nine-three configuration gives its "
          "matroid variety together with the rank-two variety on its classes");
  w.Cover(three, {three, Flat(three)}, {},
          "identifying a triple of the second nine-three configuration gives its matroid "
          "variety together with the rank-two variety on its classes");
  const int p = 9;
  Matroid one = k9.AddLoop(p);
  std::vector<Matroid> objects = {one};
  for (int q = 1; q <= 9; ++q) {
    if (q != p && !Collinear(k9, p, q)) objects.push_back(one.AddLoop(q));
  }
  objects.push_back(Flat(one));
  w.Cover(one, objects, {},
          "the second nine-three configuration with one loop gives its matroid variety, the "
          "varieties with a second loop off every line through the first, and the rank-two "
          "variety");
}

void Pappus(Writer& w) {
  Configuration pc = plc::Named("pappus");
  Matroid pm = Matroid::FromConfiguration(pc);
  const int d = pm.d();
  std::vector<Mask> triples;
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      for (int c = b + 1; c <= d; ++c) {
        if (!Collinear(pm, a, b) && !Collinear(pm, a, c) && !Collinear(pm, b, c)) {
          triples.push_back(Bit(a) | Bit(b) | Bit(c));
        }
      }
    }
  }
  auto with_line = [&](Mask t) {
    std::vector<Mask> lines(pm.lines().begin(), pm.lines().end());
    lines.push_back(t);
    return Matroid::FromConfiguration(Configuration::FromMasks(d, lines));
  };
  std::vector<Matroid> mins = plc::MinMatroids(pc).Matroids();
  std::vector<Matroid> added_line = WithShape(mins, {});
  std::vector<Matroid> merged_triple = WithShape(mins, {3});
  std::vector<Matroid> three_pairs = WithShape(mins, {2, 2, 2});
  std::vector<Matroid> five_point_line;
  std::vector<Matroid> one_loop;
  for (int x = 1; x <= d; ++x) {
    std::vector<Mask> classes = {Bit(x)};
    Mask rest = plc::FullMask(d) & ~Bit(x);
    for (Mask l : pm.lines()) {
      if (plc::Contains(l, Bit(x))) {
        classes.push_back(l & ~Bit(x));
        rest &= ~l;
      }
    }
    plc::ForEach(rest, [&](int q) { classes.push_back(Bit(q)); });
    five_point_line.push_back(
        Matroid::Create(d, 0, classes, {plc::FullMask(d) & ~Bit(x)}));
    one_loop.push_back(pm.AddLoop(x));
  }
  std::vector<Matroid> apart;
  std::vector<Matroid> together;
  for (int a = 1; a <= d; ++a) {
    for (int b = a + 1; b <= d; ++b) {
      (Collinear(pm, a, b) ? together : apart).push_back(pm.AddLoop(a).AddLoop(b));
    }
  }
  std::vector<Matroid> loop_and_line;
  for (int x = 1; x <= d; ++x) {
    for (Mask t : triples) {
      if (!plc::Contains(t, Bit(x))) loop_and_line.push_back(with_line(t).AddLoop(x));
    }
  }
  Matroid flat = Flat(pm);

  std::vector<Matroid> objects = {pm, flat};
  objects.insert(objects.end(), five_point_line.begin(), five_point_line.end());
  std::vector<Matroid> circuits = one_loop;
  circuits.insert(circuits.end(), merged_triple.begin(), merged_triple.end());
  circuits.insert(circuits.end(), three_pairs.begin(), three_pairs.end());
  for (const Matroid& a : added_line) {
    w.Cover(a, objects, circuits,
            "a circuit on a triple of pairwise non-collinear Pappus points adds nothing "
            "beyond the Pappus variety, the one-loop circuit varieties, the identification "
            "circuit varieties, the five-point-line varieties and the rank-two variety");
  }
  for (const Matroid& b : merged_triple) {
    w.Containment(b, pm,
                  "identifying three pairwise collinear Pappus points not on one line stays "
                  "inside the Pappus variety");
    w.Cover(b, {pm, flat}, {},
            "identifying three pairwise collinear Pappus points not on one line stays inside "
            "the Pappus variety and the rank-two variety");
  }
  for (const Matroid& c : three_pairs) {
    w.Containment(c, pm,
                  "identifying three disjoint pairs of Pappus points stays inside the Pappus "
                  "variety");
    w.Cover(c, {c}, {},
            "identifying three disjoint pairs of Pappus points gives a circuit variety equal "
            "to its matroid variety");
  }
  for (const Matroid& x : one_loop) {
    w.Containment(x, pm, "the Pappus configuration with one loop lies in the Pappus variety");
  }
  for (const Matroid& g : together) {
    w.Cover(g, {pm}, {},
            "the Pappus configuration with two collinear loops lies in the Pappus variety");
  }
  for (const Matroid& f : apart) {
    Mask third = 0;
    for (Mask t : triples) {
      if (plc::Contains(t, f.loops())) third = t & ~f.loops();
    }
    w.Cover(f, {f, f.AddLoop(plc::Lowest(third))}, {},
            "the Pappus configuration with two non-collinear loops gives its matroid variety "
            "and the one where the third point of their triple is also a loop");
  }
  objects = {pm, flat};
  objects.insert(objects.end(), one_loop.begin(), one_loop.end());
  objects.insert(objects.end(), five_point_line.begin(), five_point_line.end());
  circuits = apart;
  circuits.insert(circuits.end(), together.begin(), together.end());
  for (const Matroid& h : loop_and_line) {
    w.Cover(h, objects, circuits,
            "a Pappus configuration with one loop and a circuit on a non-collinear triple adds "
            "nothing beyond the Pappus variety, the rank-two variety, the one-loop varieties, "
            "the two-loop circuit varieties and the five-point-line varieties");
  }
}

}  // namespace

int main() {
  Writer w;
  Basics(w);
  MacLane(w);
  CollapsedLines(w, "affine3",
                 "a line of the affine plane of order three with the other points merged off "
                 "it lies in its matroid variety");
  K9(w);
  Pappus(w);
  std::cout << w.json().dump(1) << "\n";
  return 0;
}
