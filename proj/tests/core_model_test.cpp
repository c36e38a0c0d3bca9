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

#include <gtest/gtest.h>

#include "plc/configuration.hpp"
#include "plc/error.hpp"
#include "plc/library.hpp"
#include "plc/matroid.hpp"
#include "properties.hpp"
#include "test_support.hpp"

namespace plc {
namespace {

Mask M(std::initializer_list<int> pts) { return FromList(pts); }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Configuration, QuadrilateralSet) {
  Configuration qs =
      Configuration::Create(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
  EXPECT_EQ(qs.lines().size(), 4u);
  EXPECT_EQ(qs, Named("qs"));
  for (int p = 1; p <= 6; ++p) EXPECT_EQ(qs.Degree(p), 2);
  EXPECT_EQ(qs.Rank(), 3);
}

TEST(Configuration, EmptyLineSetIsValid) {
  Configuration c = Configuration::Create(5, {});
  EXPECT_TRUE(c.lines().empty());
  Matroid m = Matroid::FromConfiguration(c);
  for (Mask s = 0; s < 32; ++s) {
    if (Size(s) == 3) EXPECT_FALSE(m.IsDependent(s));
  }
}

TEST(Configuration, ValidationErrors) {
  EXPECT_EQ(CodeOf([] { Configuration::Create(7, {{1, 2, 3}, {1, 2, 4}}); }),
            ErrorCode::kLinesShareTwoPoints);
  EXPECT_EQ(CodeOf([] { Configuration::Create(5, {{1, 2}}); }),
            ErrorCode::kLineTooShort);
  EXPECT_EQ(CodeOf([] { Configuration::Create(5, {{1, 2, 6}}); }),
            ErrorCode::kLabelOutOfRange);
  EXPECT_EQ(CodeOf([] { Configuration::Create(5, {{0, 2, 3}}); }),
            ErrorCode::kLabelOutOfRange);
}

TEST(Configuration, DuplicateLinesCollapse) {
  Configuration c = Configuration::Create(4, {{1, 2, 3}, {3, 2, 1}});
  EXPECT_EQ(c.lines().size(), 1u);
}

TEST(Configuration, LibraryShapes) {
  struct Shape {
    const char* name;
    int d;
    size_t lines;
  };
  for (Shape s : {Shape{"qs", 6, 4}, Shape{"three-concurrent-lines", 7, 3},
                  Shape{"fano", 7, 7}, Shape{"maclane", 8, 8},
                  Shape{"affine3", 9, 12}, Shape{"pappus", 9, 9},
                  Shape{"k9", 9, 9}}) {
    Configuration c = Named(s.name);
    EXPECT_EQ(c.d(), s.d) << s.name;
    EXPECT_EQ(c.lines().size(), s.lines) << s.name;
  }
  for (const char* n : {"fano", "maclane", "pappus", "k9"}) {
    Configuration c = Named(n);
    for (int p = 1; p <= c.d(); ++p) EXPECT_EQ(c.Degree(p), 3) << n;
  }
  Configuration affine = Named("affine3");
  for (int p = 1; p <= 9; ++p) EXPECT_EQ(affine.Degree(p), 4);
}

TEST(Configuration, MacLanePairsOffLines) {
  Configuration m = Named("maclane");
  std::vector<Mask> off;
  for (int a = 1; a <= 8; ++a) {
    for (int b = a + 1; b <= 8; ++b) {
      if (!m.Collinear(Bit(a) | Bit(b))) off.push_back(Bit(a) | Bit(b));
    }
  }
  EXPECT_EQ(off, (std::vector<Mask>{M({1, 3}), M({2, 4}), M({5, 7}), M({6, 8})}));
}

TEST(Dependence, QuadrilateralSet) {
  Matroid qs = Matroid::FromConfiguration(Named("qs"));
  EXPECT_TRUE(qs.IsDependent(M({1, 2, 3})));
  EXPECT_FALSE(qs.IsDependent(M({1, 2, 4})));
  EXPECT_TRUE(qs.IsDependent(M({1, 2, 4, 5})));
  EXPECT_EQ(qs.rank(), 3);
}

TEST(DependencyOrder, Examples) {
  Matroid qs = Matroid::FromConfiguration(Named("qs"));
  Matroid u26 = Matroid::UniformRank2(6, FullMask(6));
  EXPECT_TRUE(DependencyLeq(qs, u26));
  EXPECT_FALSE(DependencyLeq(u26, qs));
  EXPECT_TRUE(DependencyLeq(qs, qs));
  Matroid other = Matroid::FromConfiguration(Configuration::Create(5, {}));
  EXPECT_EQ(CodeOf([&] { DependencyLeq(qs, other); }),
            ErrorCode::kGroundSetMismatch);
}

TEST(Reductions, Examples) {
  Configuration tcl = Named("three-concurrent-lines");
  EXPECT_EQ(SPoints(tcl), Bit(7));
  EXPECT_TRUE(ReduceS(tcl).lines().empty());
  EXPECT_TRUE(IsNilpotent(tcl));
  EXPECT_TRUE(IsSolvable(tcl));

  Configuration qs = Named("qs");
  EXPECT_EQ(QPoints(qs), 0u);
  EXPECT_EQ(ReduceS(qs), qs);
  EXPECT_FALSE(IsNilpotent(qs));
  EXPECT_TRUE(IsSolvable(qs));

  Configuration fano = Named("fano");
  EXPECT_EQ(SPoints(fano), FullMask(7));
  EXPECT_EQ(ReduceS(fano), fano);
  EXPECT_FALSE(IsNilpotent(fano));
  EXPECT_FALSE(IsSolvable(fano));
}

TEST(AddLoop, Examples) {
  Matroid fano1 = Matroid::FromConfiguration(Named("fano")).AddLoop(1);
  EXPECT_EQ(fano1.loops(), Bit(1));
  EXPECT_EQ(fano1.lines().size(), 4u);
  EXPECT_EQ(fano1.rank(), 3);

  Matroid qs1 = Matroid::FromConfiguration(Named("qs")).AddLoop(1);
  EXPECT_EQ(qs1.loops(), Bit(1));
  EXPECT_EQ(qs1.lines(), (std::vector<Mask>{M({2, 4, 6}), M({3, 4, 5})}));
  EXPECT_EQ(CodeOf([&] { qs1.AddLoop(1); }), ErrorCode::kAlreadyLoop);
}

TEST(Simplify, Examples) {
  Matroid fano1 = Matroid::FromConfiguration(Named("fano")).AddLoop(1);
  Simplification s = fano1.Simplify();
  EXPECT_EQ(s.geometry.d(), 6);
  EXPECT_EQ(s.geometry.lines().size(), 4u);
  EXPECT_EQ(s.class_of[1], 0);

  Configuration qs = Named("qs");
  Simplification id = Matroid::FromConfiguration(qs).Simplify();
  EXPECT_EQ(id.geometry, qs);
  for (int p = 1; p <= 6; ++p) EXPECT_EQ(id.class_of[p], p);

  Matroid m = Matroid::Create(5, 0, {M({1, 2})}, {M({1, 2, 3, 4})});
  Simplification t = m.Simplify();
  EXPECT_EQ(t.geometry.d(), 4);
  EXPECT_EQ(t.geometry.lines(), (std::vector<Mask>{M({1, 2, 3})}));
  EXPECT_EQ(t.class_of[1], t.class_of[2]);

  Matroid u = Matroid::UniformRank2(4, FullMask(4));
  EXPECT_EQ(CodeOf([&] { u.Simplify(); }), ErrorCode::kRankTooLow);
}

TEST(Matroid, RankEncoding) {
  Matroid all_loops = Matroid::Create(3, FullMask(3), {}, {});
  EXPECT_EQ(all_loops.rank(), 0);
  Matroid one = Matroid::Create(3, 0, {FullMask(3)}, {});
  EXPECT_EQ(one.rank(), 1);
  Matroid two = Matroid::Create(3, 0, {M({1, 2})}, {});
  EXPECT_EQ(two.rank(), 2);
  Matroid u23 = Matroid::UniformRank2(3, FullMask(3));
  EXPECT_EQ(u23.rank(), 2);
  EXPECT_EQ(u23.lines().size(), 1u);
}

TEST(Property, DependencyLeqMatchesDependentSetContainment) {
  EXPECT_EQ(testing::CheckDependencyLeq(1000, 101), "");
}

TEST(Property, RandomMatroidsSatisfyCircuitAxioms) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Matroid m = testing::RandomMatroid(rng, 3 + static_cast<int>(rng() % 5));
    ASSERT_TRUE(SatisfiesCircuitAxioms(m));
    for (Mask s = 0; s <= FullMask(m.d()); ++s) {
      if (Size(s) <= 4) {
        ASSERT_EQ(m.IsDependent(s), testing::NaiveDependent(m, s));
      }
    }
  }
}

TEST(Property, ReductionsShrinkAndTerminate) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Configuration c = testing::RandomConfiguration(rng, 3 + rng() % 7);
    Mask s = SPoints(c);
    Mask q = QPoints(c);
    EXPECT_TRUE(Contains(s, q));
    Configuration r = ReduceS(c);
    EXPECT_LE(r.lines().size(), c.lines().size());
    if (IsSolvable(c) == false) EXPECT_FALSE(IsNilpotent(c));
  }
}

TEST(Property, RelabelPreservesDependence) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int d = 3 + static_cast<int>(rng() % 6);
    Matroid m = testing::RandomMatroid(rng, d);
    std::vector<int> perm = testing::RandomPermutation(rng, d);
    Matroid r = m.Relabel(perm);
    for (Mask s = 0; s <= FullMask(d); ++s) {
      Mask img = 0;
      ForEach(s, [&](int p) { img |= Bit(perm[p]); });
      ASSERT_EQ(m.IsDependent(s), r.IsDependent(img));
    }
  }
}

TEST(Property, MinimalElementsIsAntichain) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Matroid> ms;
    for (int i = 0; i < 30; ++i) ms.push_back(testing::RandomMatroid(rng, 5));
    std::vector<Matroid> mins = MinimalElements(ms);
    for (const Matroid& a : mins) {
      for (const Matroid& b : mins) {
        if (!(a == b)) EXPECT_FALSE(DependencyLeq(a, b));
      }
    }
    for (const Matroid& m : ms) {
      bool covered = false;
      for (const Matroid& a : mins) covered = covered || DependencyLeq(a, m);
      EXPECT_TRUE(covered);
    }
  }
}

}  // namespace
}  // namespace plc
