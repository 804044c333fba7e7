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

#include "fairmat/modular_exact.h"

#include <gtest/gtest.h>

#include <set>

#include "test_support.h"

namespace fairmat {
namespace {

using testing::Iota;
using testing::Rng;
using testing::Uniform;

std::shared_ptr<ModularObjective> SignedWeights(Rng& rng, int n) {
  std::vector<double> w(n);
  for (double& x : w) x = Uniform(rng, -6, 9);
  return std::make_shared<ModularObjective>(std::move(w));
}

// Holds for x >= sum(l), the sizes the solver uses.
TEST(SmomibTest, CommonSetsOfSizeXProjectToFeasibleSets) {
  Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = Uniform(rng, 1, 5);
    Instance instance = testing::RandomInstance(rng, n, std::min(n, 2));
    const Constraints& c = instance.constraints;
    for (int x = c.bounds.lower_sum(); x <= n; ++x) {
      const SmomibInstance s = BuildSmomib(Iota(n), c, x);
      std::set<std::vector<ElementId>> projected;
      const int m = static_cast<int>(s.clone_ground.size());
      for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<ElementId> clones;
        for (int i = 0; i < m; ++i) {
          if (mask >> i & 1u) clones.push_back(s.clone_ground[i]);
        }
        if (static_cast<int>(clones.size()) != x) continue;
        if (s.first->IsIndependent(clones) && s.second->IsIndependent(clones)) {
          projected.insert(s.clones->Project(clones));
        }
      }
      std::set<std::vector<ElementId>> feasible;
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<ElementId> set;
        for (int e = 0; e < n; ++e) {
          if (mask >> e & 1u) set.push_back(e);
        }
        if (static_cast<int>(set.size()) == x && IsFeasible(set, c)) feasible.insert(set);
      }
      ASSERT_EQ(projected, feasible) << "trial " << trial << " x=" << x;
    }
  }
}

TEST(SolveF3mCentralizedTest, HandExample) {
  // Colors {1,1,2}; need one of each; uniform rank 2.
  auto f = std::make_shared<ModularObjective>(std::vector<double>{-1, 3, -2});
  Instance instance = testing::Assemble({1, 1, 2}, std::make_shared<UniformMatroid>(3, 2),
                                        FairnessBounds({1, 1}, {2, 1}), f);
  const SolutionReport r = SolveF3mCentralized(Iota(3), instance.constraints, *f);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.chosen, (std::vector<ElementId>{1, 2}));
  EXPECT_DOUBLE_EQ(r.value, 1.0);
}

TEST(SolveF3mCentralizedTest, ReportsInfeasible) {
  auto f = std::make_shared<ModularObjective>(std::vector<double>{1, 1});
  Instance instance = testing::Assemble({1, 2}, std::make_shared<UniformMatroid>(2, 1),
                                        FairnessBounds({1, 1}, {1, 1}), f);
  EXPECT_FALSE(SolveF3mCentralized(Iota(2), instance.constraints, *f).solved());
}

TEST(ModularExactPropertyTest, BothSolversMatchBruteForce) {
  Rng rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = Uniform(rng, 1, 10);
    auto f = SignedWeights(rng, n);
    Instance instance = testing::RandomInstance(rng, n, Uniform(rng, 1, 3), f);
    const testing::Reference ref = testing::ExhaustiveOptimum(instance);
    const SolutionReport central = SolveF3mCentralized(Iota(n), instance.constraints, *f);
    VectorStream stream(instance.elements);
    const SolutionReport streaming = GreedyFairStreamingM(stream, instance.constraints, *f);
    ASSERT_EQ(central.solved(), ref.feasible) << "trial " << trial;
    ASSERT_EQ(streaming.solved(), ref.feasible) << "trial " << trial;
    if (!ref.feasible) continue;
    ASSERT_EQ(central.value, ref.value) << "trial " << trial;
    ASSERT_EQ(streaming.value, ref.value) << "trial " << trial;
    ASSERT_TRUE(IsFeasible(central.chosen, instance.constraints));
    ASSERT_TRUE(IsFeasible(streaming.chosen, instance.constraints));
  }
}

}  // namespace
}  // namespace fairmat
