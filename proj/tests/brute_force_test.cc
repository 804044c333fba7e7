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

#include "fairmat/brute_force.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "test_support.h"

namespace fairmat {
namespace {

using testing::Iota;
using testing::Rng;
using testing::Uniform;

TEST(BruteForceOptTest, PicksBestFeasibleSet) {
  // Two colors, one of each required; rank 2.
  Instance instance = testing::Assemble(
      {1, 1, 2, 2}, std::make_shared<UniformMatroid>(4, 2), FairnessBounds({1, 1}, {1, 1}),
      std::make_shared<ModularObjective>(std::vector<double>{1, 4, 2, 3}));
  const BruteForceResult r =
      BruteForceOpt(instance.Ids(), instance.constraints, *instance.objective);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.optimum, (std::vector<ElementId>{1, 3}));
  EXPECT_DOUBLE_EQ(r.value, 7.0);
  EXPECT_EQ(r.feasible_count, 4);
}

TEST(BruteForceOptTest, TiesGoToLexicographicallySmallest) {
  Instance instance = testing::Assemble(
      {1, 1, 1}, std::make_shared<UniformMatroid>(3, 1), FairnessBounds({1}, {1}),
      std::make_shared<ModularObjective>(std::vector<double>{2, 2, 2}));
  const BruteForceResult r =
      BruteForceOpt(instance.Ids(), instance.constraints, *instance.objective);
  EXPECT_EQ(r.optimum, (std::vector<ElementId>{0}));
}

TEST(BruteForceOptTest, ReportsInfeasible) {
  Instance instance = testing::Assemble(
      {1, 2}, std::make_shared<UniformMatroid>(2, 1), FairnessBounds({1, 1}, {1, 1}),
      std::make_shared<ModularObjective>(std::vector<double>{1, 1}));
  const BruteForceResult r =
      BruteForceOpt(instance.Ids(), instance.constraints, *instance.objective);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.feasible_count, 0);
}

TEST(BruteForceOptTest, GuardsGroundSize) {
  Rng rng(1);
  Instance instance = testing::RandomInstance(rng, kBruteForceMaxGround + 1, 2);
  EXPECT_THROW(BruteForceOpt(instance.Ids(), instance.constraints, *instance.objective),
               std::length_error);
}

TEST(BruteForceOptTest, AgreesWithSubsetScan) {
  Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = testing::RandomInstance(rng, Uniform(rng, 1, 10), Uniform(rng, 1, 3));
    const testing::Reference ref = testing::ExhaustiveOptimum(instance);
    const BruteForceResult r =
        BruteForceOpt(instance.Ids(), instance.constraints, *instance.objective);
    ASSERT_EQ(r.feasible, ref.feasible);
    ASSERT_EQ(r.feasible_count, ref.feasible_count);
    if (ref.feasible) {
      ASSERT_NEAR(r.value, ref.value, 1e-9);
      ASSERT_TRUE(IsFeasible(r.optimum, instance.constraints));
    }
  }
}

TEST(FeasibleExistsTest, ReservoirRouteAgreesWithScan) {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Instance instance = testing::RandomInstance(rng, Uniform(rng, 1, 11), Uniform(rng, 1, 4));
    const bool expected = testing::ExhaustiveOptimum(instance).feasible;
    ASSERT_EQ(FeasibleExists(instance.Ids(), instance.constraints), expected);
    ASSERT_EQ(FeasibleExistsViaReservoirs(instance.Ids(), instance.constraints), expected)
        << "trial " << trial;
  }
}

TEST(BruteForceCommonIndependentTest, MaximizesOverIntersection) {
  PartitionMatroid left({0, 0, 1}, {1, 1});
  PartitionMatroid right({0, 1, 0}, {1, 1});
  ModularObjective f({5, 1, 1});
  EXPECT_EQ(BruteForceCommonIndependent(left, right, Iota(3), f),
            (std::vector<ElementId>{0}));
}

}  // namespace
}  // namespace fairmat
