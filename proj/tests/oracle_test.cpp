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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "plc/error.hpp"
#include "plc/library.hpp"
#include "plc/oracle.hpp"
#include "test_support.hpp"

namespace plc {
namespace {

Mask M(std::initializer_list<int> pts) { return FromList(pts); }

EnumerationBudget WithSeven() {
  EnumerationBudget b;
  b.allow_seven = true;
  return b;
}

TEST(Enumeration, CountsMatchLabeledMatroidTotals) {
  // Labeled matroids on n elements number 16, 68, 406, 3807, 75164 for
  // n = 3..7. Rank r and rank n - r are dual, so the ranks above three are
  // recovered from the ranks below n - 3.
  std::map<int, long long> totals = {
      {3, 16}, {4, 68}, {5, 406}, {6, 3807}, {7, 75164}};
  for (int d = 3; d <= 7; ++d) {
    std::map<int, long long> by_rank;
    long long n = 0;
    EnumerateAll(d, WithSeven(), [&](const Matroid& m) {
      ++by_rank[m.rank()];
      ++n;
    });
    long long all = n;
    for (int r = 0; r <= d - 4; ++r) all += by_rank[r];
    EXPECT_EQ(all, totals[d]) << "d=" << d;
  }
}

TEST(Enumeration, RankAtMostThreeCounts) {
  long long c4 = 0;
  long long c5 = 0;
  EnumerateAll(4, {}, [&](const Matroid&) { ++c4; });
  EnumerateAll(5, {}, [&](const Matroid&) { ++c5; });
  EXPECT_EQ(c4, 67);
  EXPECT_EQ(c5, 374);
}

TEST(Enumeration, ValidAndDuplicateFree) {
  for (int d = 1; d <= 5; ++d) {
    std::set<Matroid> seen;
    long long n = 0;
    EnumerateAll(d, {}, [&](const Matroid& m) {
      ++n;
      seen.insert(m);
      EXPECT_TRUE(SatisfiesCircuitAxioms(m));
    });
    EXPECT_EQ(static_cast<long long>(seen.size()), n);
  }
}

TEST(Enumeration, Budget) {
  EXPECT_THROW(EnumerateAll(7, {}, [](const Matroid&) {}), Error);
  EnumerationBudget tiny;
  tiny.max_count = 10;
  try {
    EnumerateAll(4, tiny, [](const Matroid&) {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(EnumerateAbove, SmallCases) {
  Matroid free3 = Matroid::FromConfiguration(Configuration::Create(3, {}));
  EXPECT_EQ(EnumerateAbove(free3).size(), 15u);
  // Everything of rank at most two on three points except the line itself.
  Matroid u23 = Matroid::UniformRank2(3, FullMask(3));
  std::vector<Matroid> above = EnumerateAbove(u23);
  EXPECT_EQ(above.size(), 14u);
  for (const Matroid& n : above) {
    EXPECT_TRUE(n.loops() != 0 || n.ParallelPairCount() > 0);
  }
  Matroid top = Matroid::Create(4, FullMask(4), {}, {});
  EXPECT_TRUE(EnumerateAbove(top).empty());
  EXPECT_TRUE(BruteMinimal(top).empty());
}

TEST(BruteMinimal, FourPointLine) {
  // Merging two points of a single line adds no dependency beyond the pair,
  // so each loop quotient sits above a double-point quotient and only the
  // six double points are minimal.
  Matroid u24 = Matroid::UniformRank2(4, FullMask(4));
  std::vector<Matroid> want;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      Matroid pair = Matroid::Create(4, 0, {Bit(i) | Bit(j)}, {FullMask(4)});
      EXPECT_TRUE(DependencyLess(pair, u24.AddLoop(i)));
      want.push_back(pair);
    }
  }
  std::sort(want.begin(), want.end());
  EXPECT_EQ(BruteMinimal(u24), want);
}

TEST(BruteMinimal, AntichainThatCovers) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Matroid m = testing::RandomMatroid(rng, 3 + static_cast<int>(rng() % 3));
    std::vector<Matroid> above = EnumerateAbove(m);
    std::vector<Matroid> mins = BruteMinimal(m);
    for (const Matroid& a : mins) {
      for (const Matroid& b : mins) {
        if (!(a == b)) ASSERT_FALSE(DependencyLeq(a, b));
      }
    }
    for (const Matroid& n : above) {
      bool covered = false;
      for (const Matroid& a : mins) covered = covered || DependencyLeq(a, n);
      ASSERT_TRUE(covered);
    }
  }
}

TEST(BruteMinimalX, SmallFamilies) {
  std::vector<Matroid> one = BruteMinimalX(4, {M({1, 2, 3})});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Matroid::FromConfiguration(
                        Configuration::Create(4, {{1, 2, 3}})));
  for (const Matroid& n : BruteMinimalX(4, {M({1, 2})})) {
    EXPECT_EQ(n.ClassOf(1), n.ClassOf(2));
    EXPECT_NE(n.ClassOf(1), 0u);
  }
}

TEST(AddLoop, LeastAboveWithLoop) {
  // Every matroid above M with i as a loop is above M(i).
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 3 + static_cast<int>(rng() % 4);
    Matroid m = testing::RandomMatroid(rng, d);
    Mask free = FullMask(d) & ~m.loops();
    if (free == 0) continue;
    int i = ToList(free)[rng() % Size(free)];
    Matroid mi = m.AddLoop(i);
    ASSERT_TRUE(DependencyLess(m, mi));
    for (const Matroid& n : EnumerateAbove(m)) {
      if (n.IsLoop(i)) ASSERT_TRUE(DependencyLeq(mi, n));
    }
  }
}

}  // namespace
}  // namespace plc
