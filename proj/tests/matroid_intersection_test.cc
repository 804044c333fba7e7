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

#include "fairmat/matroid_intersection.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace fairmat {
namespace {

using testing::Iota;
using testing::Rng;
using testing::Uniform;

struct Best {
  int cardinality = 0;
  double weight = 0.0;
};

Best ExhaustiveCommon(const Matroid& a, const Matroid& b, int n,
                      const std::vector<double>& weights) {
  Best best;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<ElementId> set;
    double w = 0.0;
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) {
        set.push_back(e);
        w += weights[e];
      }
    }
    if (!a.IsIndependent(set) || !b.IsIndependent(set)) continue;
    best.cardinality = std::max<int>(best.cardinality, set.size());
    best.weight = std::max(best.weight, w);
  }
  return best;
}

double Weight(const std::vector<ElementId>& set, const std::vector<double>& w) {
  double total = 0.0;
  for (ElementId e : set) total += w[e];
  return total;
}

TEST(MaxCardinalityCommonTest, BipartiteMatching) {
  // Edges (left,right): 0:(0,0) 1:(0,1) 2:(1,0). Greedy from 0 gets stuck at
  // one edge; the augmenting path reaches {1, 2}.
  PartitionMatroid left({0, 0, 1}, {1, 1});
  PartitionMatroid right({0, 1, 0}, {1, 1});
  IntersectionStats stats;
  const auto s = MaxCardinalityCommon(left, right, Iota(3), &stats);
  EXPECT_EQ(s, (std::vector<ElementId>{1, 2}));
  EXPECT_EQ(stats.augmentations, 1);
}

TEST(MaxCardinalityCommonTest, RestrictsToGround) {
  UniformMatroid a(4, 4), b(4, 4);
  const std::vector<ElementId> ground = {3, 1};
  EXPECT_EQ(MaxCardinalityCommon(a, b, ground), (std::vector<ElementId>{1, 3}));
}

TEST(MaxCardinalityCommonTest, MatchesExhaustiveSearch) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = Uniform(rng, 1, 10);
    MatroidPtr a = testing::RandomMatroid(rng, n);
    MatroidPtr b = testing::RandomMatroid(rng, n);
    const auto s = MaxCardinalityCommon(*a, *b, Iota(n));
    ASSERT_TRUE(a->IsIndependent(s));
    ASSERT_TRUE(b->IsIndependent(s));
    const Best best = ExhaustiveCommon(*a, *b, n, std::vector<double>(n, 0.0));
    ASSERT_EQ(static_cast<int>(s.size()), best.cardinality) << "trial " << trial;
  }
}

TEST(MaxWeightCommonTest, MatchesExhaustiveSearch) {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = Uniform(rng, 1, 10);
    MatroidPtr a = testing::RandomMatroid(rng, n);
    MatroidPtr b = testing::RandomMatroid(rng, n);
    std::vector<double> w(n);
    for (double& x : w) x = Uniform(rng, -4, 9);
    const auto s = MaxWeightCommon(*a, *b, Iota(n), w);
    ASSERT_TRUE(a->IsIndependent(s));
    ASSERT_TRUE(b->IsIndependent(s));
    const Best best = ExhaustiveCommon(*a, *b, n, w);
    ASSERT_NEAR(Weight(s, w), best.weight, 1e-9) << "trial " << trial;
  }
}

TEST(MaxWeightCommonTest, PrefersHeavyOverMany) {
  // Two light edges versus one heavy edge sharing both endpoints.
  PartitionMatroid left({0, 1, 0}, {1, 1});
  PartitionMatroid right({0, 1, 1}, {1, 1});
  const std::vector<double> w = {1, 1, 5};
  EXPECT_EQ(MaxWeightCommon(left, right, Iota(3), w), (std::vector<ElementId>{2}));
}

TEST(MaxWeightCommonTest, SkipsNegativeElements) {
  UniformMatroid a(3, 3), b(3, 3);
  const std::vector<double> w = {2, -1, 0};
  const auto s = MaxWeightCommon(a, b, Iota(3), w);
  EXPECT_NEAR(Weight(s, w), 2.0, 1e-12);
  EXPECT_EQ(std::count(s.begin(), s.end(), 1), 0);
}

}  // namespace
}  // namespace fairmat
