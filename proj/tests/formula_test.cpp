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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "plc/error.hpp"
#include "plc/formula.hpp"
#include "plc/library.hpp"
#include "properties.hpp"

namespace plc {
namespace {

Mask M(std::initializer_list<int> pts) { return FromList(pts); }

std::vector<Mask> Sorted(std::vector<Mask> v) {
  SortUniqueLex(v);
  return v;
}

ForbidAdjacency Adjacency(const std::vector<std::pair<int, int>>& pairs) {
  ForbidAdjacency adj{};
  for (auto [a, b] : pairs) {
    adj[a] |= Bit(b);
    adj[b] |= Bit(a);
  }
  return adj;
}

TEST(MergeClosure, WorkedExample) {
  Hypergraph h = Hypergraph::FromLists(
      6, {{1, 2, 3}, {2, 3, 4}, {1, 4, 5}, {1, 5, 6}});
  Hypergraph r = MergeClosure(h, {{2, 3}, {1, 4}});
  EXPECT_EQ(r.edges(), Sorted({M({1, 2, 3, 4, 5}), M({1, 5, 6})}));
}

TEST(MergeClosure, NoForbiddenPairsKeepsInput) {
  Hypergraph h = Hypergraph::FromLists(5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
  EXPECT_EQ(MergeClosure(h, {}), h);
}

TEST(MergeClosure, FanoAllPairsIsFixedPoint) {
  Hypergraph fano = Named("fano").AsHypergraph();
  std::vector<std::pair<int, int>> all;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) all.emplace_back(a, b);
  Hypergraph r = MergeClosure(fano, all);
  // Fano lines already meet pairwise in one point, so nothing merges.
  EXPECT_EQ(r, fano);
  std::set<Mask> naive = testing::NaiveClosure(fano.edges(), Adjacency(all));
  EXPECT_EQ(naive, std::set<Mask>(fano.edges().begin(), fano.edges().end()));
  // One extra triple sets off the cascade to a single line.
  std::vector<Mask> plus = fano.edges();
  plus.push_back(M({1, 2, 4}));
  Hypergraph collapsed = MergeClosure(Hypergraph::Create(7, plus), all);
  EXPECT_EQ(collapsed.edges(), std::vector<Mask>{FullMask(7)});
  std::set<Mask> naive_plus = testing::NaiveClosure(plus, Adjacency(all));
  EXPECT_EQ(naive_plus, std::set<Mask>{FullMask(7)});
}

TEST(Quotient, Examples) {
  Hypergraph fano = Named("fano").AsHypergraph();
  Formula f = Formula::FromAtoms(7, {{1, 2}}, {});
  EXPECT_EQ(Quotient(fano, f).edges().size(), 6u);
  EXPECT_EQ(Quotient(fano, Formula(7)), fano);
  Formula all(7);
  for (int p = 2; p <= 7; ++p) all = *all.Merge(1, p);
  EXPECT_TRUE(Quotient(fano, all).empty());
}

TEST(DeltaF, FanoExamples) {
  Hypergraph fano = Named("fano").AsHypergraph();
  Formula f = Formula::FromAtoms(7, {{1, 2}}, {{1, 5}, {1, 4}});
  EXPECT_EQ(DeltaF(fano, f).edges(),
            Sorted({M({1, 5, 6, 7}), M({1, 4, 6, 7}), M({3, 4, 5}),
                    M({3, 6, 7})}));
  // The intermediate hypergraphs of the step-by-step computation.
  Formula g = Formula::FromAtoms(7, {{1, 2}}, {});
  EXPECT_EQ(DeltaF(fano, g).edges(),
            Sorted({M({1, 5, 6}), M({1, 4, 7}), M({1, 5, 7}), M({1, 4, 6}),
                    M({3, 4, 5}), M({3, 6, 7})}));
  Formula g2 = *g.Forbid(1, 5);
  EXPECT_EQ(DeltaF(fano, g2).edges(),
            Sorted({M({1, 5, 6, 7}), M({1, 4, 7}), M({1, 4, 6}), M({3, 4, 5}),
                    M({3, 6, 7})}));

  Formula h = Formula::FromAtoms(7, {{1, 2}, {1, 6}, {1, 7}}, {});
  EXPECT_EQ(DeltaF(fano, h).edges(), std::vector<Mask>{M({3, 4, 5})});
  EXPECT_EQ(DeltaF(fano, Formula(7)), fano);
}

TEST(Formula, Consistency) {
  Formula f = Formula::FromAtoms(5, {{1, 2}}, {{2, 3}});
  EXPECT_TRUE(f.IsForbidden(1, 3));
  EXPECT_FALSE(f.Merge(3, 2).has_value());
  EXPECT_FALSE(f.Forbid(1, 2).has_value());
  EXPECT_THROW(Formula::FromAtoms(5, {{1, 2}}, {{2, 1}}), Error);
  Formula a = Formula::FromAtoms(5, {{2, 1}}, {{3, 1}});
  Formula b = Formula::FromAtoms(5, {{1, 2}}, {{2, 3}});
  EXPECT_EQ(a.Key(), b.Key());
}

TEST(PropertyX, Examples) {
  Hypergraph fano = Named("fano").AsHypergraph();
  EXPECT_TRUE(HasPropertyX(fano, Formula::FromAtoms(7, {{1, 2}, {1, 6}, {1, 7}}, {})));
  EXPECT_TRUE(HasPropertyX(fano, Formula(7)));
  Hypergraph raw = Hypergraph::FromLists(4, {{1, 2, 3}, {1, 2, 4}});
  EXPECT_FALSE(HasPropertyX(raw, Formula(4)));
}

TEST(RealizeFormula, Examples) {
  Configuration fano = Named("fano");
  Matroid n = RealizeFormula(fano, Formula::FromAtoms(7, {{1, 2}, {1, 6}, {1, 7}}, {}));
  EXPECT_EQ(n.classes(), (std::vector<Mask>{M({1, 2, 6, 7}), M({3}), M({4}), M({5})}));
  EXPECT_EQ(n.lines(), std::vector<Mask>{M({3, 4, 5})});
  EXPECT_EQ(n.loops(), 0u);

  Configuration qs = Named("qs");
  Matroid n1 = RealizeFormula(qs, Formula::FromAtoms(6, {{1, 2}, {1, 6}}, {}));
  EXPECT_EQ(n1.lines(), std::vector<Mask>{M({3, 4, 5})});
  EXPECT_EQ(n1.classes().size(), 4u);

  EXPECT_EQ(RealizeFormula(qs, Formula(6)), Matroid::FromConfiguration(qs));
  Formula bad = Formula::FromAtoms(7, {{1, 2}}, {});
  EXPECT_FALSE(HasPropertyX(fano.AsHypergraph(), bad));
  EXPECT_THROW(RealizeFormula(fano, bad), Error);
}

TEST(PlcClosure, Examples) {
  Hypergraph h = Hypergraph::FromLists(
      10, {{1, 2, 3}, {1, 5, 6}, {1, 2, 5}, {6, 7, 8}, {6, 7, 9, 10}});
  EXPECT_EQ(PlcClosure(h).lines(),
            Sorted({M({1, 2, 3, 5, 6}), M({6, 7, 8, 9, 10})}));
  Configuration qs = Named("qs");
  EXPECT_EQ(PlcClosure(qs.AsHypergraph()), qs);
  std::vector<Mask> plus = Named("fano").lines();
  plus.push_back(M({1, 2, 4}));
  EXPECT_EQ(PlcClosure(Hypergraph::Create(7, plus)).lines(),
            std::vector<Mask>{FullMask(7)});
}

TEST(Property, MergeClosureIsClosureOperator) {
  EXPECT_EQ(testing::CheckMergeClosureLaws(1000, 17), "");
}

TEST(Property, PlcClosureLaws) { EXPECT_EQ(testing::CheckPlcClosureLaws(1000, 19), ""); }

TEST(Property, IncrementalDeltaMatchesScratch) {
  EXPECT_EQ(testing::CheckIncrementalDelta(1000, 23), "");
}

}  // namespace
}  // namespace plc
