// Copyright 2026 The Authors.
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

#include "fairmat/matroid.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "fairmat/modular_exact.h"
#include "test_support.h"

namespace fairmat {
namespace {

using testing::Iota;
using testing::Rng;
using testing::Uniform;

std::vector<ElementId> Ids(std::initializer_list<ElementId> ids) { return ids; }

TEST(UniformMatroidTest, CardinalityCap) {
  UniformMatroid m(5, 2);
  EXPECT_TRUE(m.IsIndependent(Ids({})));
  EXPECT_TRUE(m.IsIndependent(Ids({1, 4})));
  EXPECT_FALSE(m.IsIndependent(Ids({0, 1, 2})));
  EXPECT_EQ(m.rank_bound(), 2);
  EXPECT_EQ(m.independence_calls(), 3);
}

TEST(UniformMatroidTest, RejectsInvalidSets) {
  UniformMatroid m(3, 3);
  EXPECT_THROW(m.IsIndependent(Ids({0, 0})), std::invalid_argument);
  EXPECT_THROW(m.IsIndependent(Ids({3})), std::invalid_argument);
}

TEST(PartitionMatroidTest, BlockCaps) {
  PartitionMatroid m({0, 0, 1, 1, 1}, {1, 2});
  EXPECT_TRUE(m.IsIndependent(Ids({0, 2, 3})));
  EXPECT_FALSE(m.IsIndependent(Ids({0, 1})));
  EXPECT_FALSE(m.IsIndependent(Ids({2, 3, 4})));
  EXPECT_EQ(m.rank_bound(), 3);
}

TEST(PartitionMatroidTest, RankCountsOnlyOccupiedCapacity) {
  PartitionMatroid m({0, 0}, {1, 5});
  EXPECT_EQ(m.rank_bound(), 1);
}

TEST(LaminarMatroidTest, NestedCaps) {
  // {0,1,2} cap 2 inside {0..4} cap 3.
  LaminarMatroid m(5, {{{0, 1, 2}, 2}, {{0, 1, 2, 3, 4}, 3}});
  EXPECT_TRUE(m.IsIndependent(Ids({0, 1, 3})));
  EXPECT_FALSE(m.IsIndependent(Ids({0, 1, 2})));
  EXPECT_FALSE(m.IsIndependent(Ids({0, 3, 4, 1})));
  EXPECT_EQ(m.rank_bound(), 3);
}

TEST(LaminarMatroidTest, RejectsCrossingGroups) {
  EXPECT_THROW(LaminarMatroid(4, {{{0, 1}, 1}, {{1, 2}, 1}}), std::invalid_argument);
}

TEST(ColorMatroidTest, LowerAndUpperCaps) {
  const std::vector<ColorId> colors = {1, 1, 2, 2, 2};
  const FairnessBounds bounds({1, 1}, {2, 2});
  auto lower = MakeLowerColorMatroid(colors, bounds);
  auto upper = MakeUpperColorMatroid(colors, bounds);
  EXPECT_TRUE(lower->IsIndependent(Ids({0, 2})));
  EXPECT_FALSE(lower->IsIndependent(Ids({0, 1})));
  EXPECT_TRUE(upper->IsIndependent(Ids({0, 1, 2, 3})));
  EXPECT_FALSE(upper->IsIndependent(Ids({2, 3, 4})));
}

TEST(ContractionTest, PinnedElementsActAsLoops) {
  auto base = std::make_shared<UniformMatroid>(4, 2);
  auto m = Contract(base, {0});
  EXPECT_TRUE(m->IsIndependent(Ids({1})));
  EXPECT_FALSE(m->IsIndependent(Ids({1, 2})));
  EXPECT_FALSE(m->IsIndependent(Ids({0})));
  EXPECT_EQ(m->rank_bound(), 1);
}

TEST(ContractionTest, RejectsDependentPin) {
  auto base = std::make_shared<UniformMatroid>(4, 1);
  EXPECT_THROW(Contract(base, {0, 1}), std::invalid_argument);
}

TEST(ContractionTest, ForwardsCallsToBase) {
  auto base = std::make_shared<UniformMatroid>(4, 2);
  auto m = Contract(base, {0});
  const int64_t before = base->independence_calls();
  m->IsIndependent(Ids({1}));
  EXPECT_GT(base->independence_calls(), before);
}

TEST(ContractionTest, UnionWithPinnedStaysIndependent) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = Uniform(rng, 3, 9);
    MatroidPtr base = testing::RandomMatroid(rng, n);
    std::vector<ElementId> order = Iota(n);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<ElementId> pinned = GreedyMaximalIndependent(*base, order);
    pinned.resize(Uniform(rng, 0, static_cast<int>(pinned.size())));
    auto contracted = Contract(base, pinned);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<ElementId> set;
      for (int e = 0; e < n; ++e) {
        if (mask >> e & 1u) set.push_back(e);
      }
      if (!contracted->IsIndependent(set)) continue;
      std::vector<ElementId> joined = set;
      joined.insert(joined.end(), pinned.begin(), pinned.end());
      ASSERT_TRUE(base->IsIndependent(joined));
    }
  }
}

TEST(TruncationTest, AddsCardinalityCap) {
  auto base = std::make_shared<PartitionMatroid>(std::vector<int>{0, 1, 2}, std::vector<int>{1, 1, 1});
  auto m = Truncate(base, 2);
  EXPECT_TRUE(m->IsIndependent(Ids({0, 1})));
  EXPECT_FALSE(m->IsIndependent(Ids({0, 1, 2})));
  EXPECT_EQ(m->rank_bound(), 2);
}

TEST(CloneProjectionTest, ForbidsBothCopies) {
  auto base = std::make_shared<UniformMatroid>(3, 2);
  CloneProjectionMatroid m(base, {0, 2});
  const ElementId lo0 = CloneProjectionMatroid::LowerClone(0);
  const ElementId up0 = CloneProjectionMatroid::UpperClone(0);
  const ElementId up1 = CloneProjectionMatroid::UpperClone(1);
  EXPECT_EQ(m.ground_size(), 4);
  EXPECT_FALSE(m.IsIndependent(Ids({lo0, up0})));
  EXPECT_TRUE(m.IsIndependent(Ids({lo0, up1})));
  EXPECT_EQ(m.Project(Ids({up1, lo0})), Ids({0, 2}));
}

TEST(TableMatroidTest, NonMatroidFamilyFailsAxioms) {
  // {0,1} and {2} maximal: augmentation fails from {2}.
  TableMatroid m(3, {{}, {0}, {1}, {2}, {0, 1}});
  std::string failure;
  EXPECT_FALSE(VerifyMatroidAxioms(m, Iota(3), &failure));
  EXPECT_FALSE(failure.empty());
}

TEST(TableMatroidTest, MatroidFamilyPassesAxioms) {
  TableMatroid m(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
  EXPECT_TRUE(VerifyMatroidAxioms(m, Iota(3)));
}

TEST(VerifyMatroidAxiomsTest, GuardsGroundSize) {
  UniformMatroid m(20, 3);
  EXPECT_THROW(VerifyMatroidAxioms(m, Iota(15)), std::length_error);
}

TEST(GreedyTest, RankAndMaximalSet) {
  PartitionMatroid m({0, 0, 1, 1}, {1, 1});
  EXPECT_EQ(GreedyRank(m, Iota(4)), 2);
  EXPECT_EQ(GreedyMaximalIndependent(m, Ids({1, 0, 3, 2})), Ids({1, 3}));
}

// Every constructor on random small grounds.
TEST(MatroidPropertyTest, ConstructedOraclesSatisfyAxioms) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = Uniform(rng, 1, 8);
    const int colors = Uniform(rng, 1, 3);
    MatroidPtr base = testing::RandomMatroid(rng, n);
    std::vector<ColorId> color_of = testing::RandomColors(rng, n, std::min(n, colors));
    const int c = std::min(n, colors);
    std::vector<int> lower(c), upper(c);
    for (int i = 0; i < c; ++i) {
      lower[i] = Uniform(rng, 0, 2);
      upper[i] = lower[i] + Uniform(rng, 0, 2);
    }
    const FairnessBounds bounds(lower, upper);
    std::vector<ElementId> order = Iota(n);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<ElementId> pinned = GreedyMaximalIndependent(*base, order);
    pinned.resize(Uniform(rng, 0, static_cast<int>(pinned.size())));
    const std::vector<MatroidPtr> oracles = {
        base, MakeLowerColorMatroid(color_of, bounds),
        MakeUpperColorMatroid(color_of, bounds), Contract(base, pinned),
        Truncate(base, Uniform(rng, 0, n))};
    for (const MatroidPtr& m : oracles) {
      std::string failure;
      ASSERT_TRUE(VerifyMatroidAxioms(*m, Iota(n), &failure))
          << m->kind() << ": " << failure;
    }
  }
}

TEST(MatroidPropertyTest, CloneCompositesSatisfyAxioms) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = Uniform(rng, 1, 5);
    const int colors = std::min(n, Uniform(rng, 1, 2));
    Constraints c;
    c.matroid = testing::RandomMatroid(rng, n);
    c.color_of = testing::RandomColors(rng, n, colors);
    std::vector<int> lower(colors), upper(colors);
    for (int i = 0; i < colors; ++i) {
      lower[i] = Uniform(rng, 0, 1);
      upper[i] = lower[i] + Uniform(rng, 0, 2);
    }
    c.bounds = FairnessBounds(lower, upper);
    const SmomibInstance s = BuildSmomib(Iota(n), c, Uniform(rng, 0, n));
    for (const MatroidPtr& m : {MatroidPtr(s.clones), s.first, s.second}) {
      std::string failure;
      ASSERT_TRUE(VerifyMatroidAxioms(*m, s.clone_ground, &failure))
          << m->kind() << ": " << failure;
    }
  }
}

// Base exchange: for bases B1, B2 and a split (X1, Y1) of B1 some split
// (X2, Y2) of B2 makes X1 ∪ Y2 and X2 ∪ Y1 bases.
TEST(MatroidPropertyTest, BaseExchangePartition) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = Uniform(rng, 2, 8);
    MatroidPtr m = testing::RandomMatroid(rng, n);
    const int rank = GreedyRank(*m, Iota(n));
    auto random_base = [&] {
      std::vector<ElementId> order = Iota(n);
      std::shuffle(order.begin(), order.end(), rng);
      return GreedyMaximalIndependent(*m, order);
    };
    const std::vector<ElementId> b1 = random_base();
    const std::vector<ElementId> b2 = random_base();
    std::vector<ElementId> x1, y1;
    for (ElementId e : b1) (Uniform(rng, 0, 1) ? x1 : y1).push_back(e);
    auto is_base = [&](std::vector<ElementId> s) {
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
      return static_cast<int>(s.size()) == rank && m->IsIndependent(s);
    };
    bool found = false;
    for (uint32_t mask = 0; mask < (1u << b2.size()) && !found; ++mask) {
      std::vector<ElementId> a = x1, b = y1;
      for (size_t i = 0; i < b2.size(); ++i) (mask >> i & 1u ? b : a).push_back(b2[i]);
      // a = X1 ∪ Y2, b = X2 ∪ Y1.
      found = is_base(a) && is_base(b);
    }
    ASSERT_TRUE(found) << "trial " << trial;
  }
}

}  // namespace
}  // namespace fairmat
