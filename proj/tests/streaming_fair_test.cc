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

#include "fairmat/streaming_fair.h"

#include <gtest/gtest.h>

#include "fairmat/brute_force.h"
#include "test_support.h"

namespace fairmat {
namespace {

using testing::Iota;
using testing::Rng;
using testing::Uniform;

// Two elements per color: e_c plain, e'_c shared; one block per color.
Instance AdversarialInstance(int colors) {
  std::vector<ColorId> color_of;
  std::vector<int> block_of;
  std::vector<char> shared;
  for (int c = 1; c <= colors; ++c) {
    for (int s = 0; s < 2; ++s) {
      color_of.push_back(c);
      block_of.push_back(c - 1);
      shared.push_back(static_cast<char>(s));
    }
  }
  return testing::Assemble(
      color_of, std::make_shared<PartitionMatroid>(block_of, std::vector<int>(colors, 1)),
      FairnessBounds(std::vector<int>(colors, 1), std::vector<int>(colors, 1)),
      std::make_shared<SharedBonusObjective>(shared, 1.0, 1.01));
}

TEST(FairReservoirTest, ExactLowerBoundsOnSmallInstance) {
  Instance instance = testing::Assemble(
      {1, 2, 1, 2}, std::make_shared<UniformMatroid>(4, 3), FairnessBounds({1, 1}, {2, 2}),
      std::make_shared<ModularObjective>(std::vector<double>{1, 1, 1, 1}));
  VectorStream stream(instance.elements);
  const FirstPassResult r = FairReservoir(stream, instance.constraints);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(testing::CountColors(r.solution, instance.constraints),
            (std::vector<int>{1, 1}));
  EXPECT_EQ(stream.passes(), 1);
}

TEST(FairReservoirTest, ReportsInfeasible) {
  // Both colors live in one block of capacity one.
  Instance instance = testing::Assemble(
      {1, 2}, std::make_shared<UniformMatroid>(2, 1), FairnessBounds({1, 1}, {1, 1}),
      std::make_shared<ModularObjective>(std::vector<double>{1, 1}));
  VectorStream stream(instance.elements);
  EXPECT_EQ(FairReservoir(stream, instance.constraints).outcome, Outcome::kInfeasible);
}

TEST(FairReservoirTest, MissingColorIsInfeasible) {
  Instance instance = testing::Assemble(
      {1, 1}, std::make_shared<UniformMatroid>(2, 2), FairnessBounds({1, 1}, {1, 1}),
      std::make_shared<ModularObjective>(std::vector<double>{1, 1}));
  VectorStream stream(instance.elements);
  EXPECT_FALSE(FairReservoir(stream, instance.constraints).solved());
}

TEST(SplitBalancedTest, HalvesEveryColor) {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = Uniform(rng, 0, 15);
    Constraints c;
    c.color_of = testing::RandomColors(rng, n, 3);
    c.bounds = FairnessBounds({0, 0, 0}, {n, n, n});
    c.matroid = std::make_shared<UniformMatroid>(n, n);
    std::vector<ElementId> set;
    for (ElementId e = 0; e < n; ++e) {
      if (Uniform(rng, 0, 1)) set.push_back(e);
    }
    const BalancedSplit split = SplitBalanced(set, c);
    const auto total = testing::CountColors(set, c);
    const auto first = testing::CountColors(split.first, c);
    const auto second = testing::CountColors(split.second, c);
    for (int col = 0; col < 3; ++col) {
      ASSERT_EQ(first[col] + second[col], total[col]);
      ASSERT_EQ(first[col], total[col] / 2);
      ASSERT_EQ(second[col], total[col] - total[col] / 2);
    }
  }
}

TEST(StreamingPropertyTest, FirstPassesSatisfyLowerBounds) {
  Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 25), Uniform(rng, 1, 4));
    const Constraints& c = instance.constraints;
    for (int kind = 0; kind < 2; ++kind) {
      VectorStream stream(instance.elements);
      const FirstPassResult r = kind == 0
                                    ? FairReservoir(stream, c)
                                    : GreedyFairReservoir(stream, c, *instance.objective);
      ASSERT_TRUE(r.solved()) << "trial " << trial << " " << r.note;
      ASSERT_TRUE(c.matroid->IsIndependent(r.solution));
      ASSERT_EQ(testing::CountColors(r.solution, c), c.bounds.lower_bounds());
    }
  }
}

TEST(StreamingPropertyTest, SecondPassesAreRelaxedFeasible) {
  Rng rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 25), Uniform(rng, 1, 4));
    const Constraints& c = instance.constraints;
    for (SecondPassKind kind : {SecondPassKind::kFairStreaming, SecondPassKind::kFairStreamingPlus}) {
      VectorStream stream(instance.elements);
      const SolutionReport r = TwoPass(stream, c, *instance.objective, SwapRoutineFactory(),
                                       FirstPassKind::kGreedyFairReservoir, kind);
      ASSERT_TRUE(r.solved());
      ASSERT_EQ(stream.passes(), 2);
      ASSERT_TRUE(c.matroid->IsIndependent(r.chosen));
      const auto count = testing::CountColors(r.chosen, c);
      for (int col = 1; col <= c.num_colors(); ++col) {
        ASSERT_GE(count[col - 1], c.bounds.lower(col) / 2);
        ASSERT_LE(count[col - 1], c.bounds.upper(col));
      }
    }
  }
}

TEST(StreamingPropertyTest, TwoPassWithExactRoutineIsHalfApproximate) {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 10), Uniform(rng, 1, 3));
    const testing::Reference ref = testing::ExhaustiveOptimum(instance);
    ASSERT_TRUE(ref.feasible);
    VectorStream stream(instance.elements);
    const SolutionReport r =
        TwoPass(stream, instance.constraints, *instance.objective, ExactRoutineFactory());
    ASSERT_TRUE(r.solved());
    ASSERT_GE(r.value, ref.value / 2 - kEpsilon) << "trial " << trial;
  }
}

TEST(GreedyFairStreamingTest, NeverViolatesBounds) {
  Rng rng(79);
  for (int trial = 0; trial < 150; ++trial) {
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 25), Uniform(rng, 1, 4));
    VectorStream stream(instance.elements);
    const SolutionReport r = GreedyFairStreaming(stream, instance.constraints, *instance.objective);
    ASSERT_TRUE(r.solved());
    ASSERT_EQ(r.violation, 0);
    ASSERT_TRUE(IsFeasible(r.chosen, instance.constraints));
  }
}

TEST(GreedyFairStreamingTest, LosesFactorCOnAdversarialInstance) {
  Instance instance = AdversarialInstance(10);
  VectorStream greedy_stream(instance.elements);
  const SolutionReport greedy =
      GreedyFairStreaming(greedy_stream, instance.constraints, *instance.objective);
  EXPECT_LE(greedy.value, 1.01 + kEpsilon);
  VectorStream stream(instance.elements);
  const SolutionReport two_pass =
      TwoPass(stream, instance.constraints, *instance.objective, ExactRoutineFactory());
  EXPECT_GE(two_pass.value, 5.0);
}

TEST(RandomBaseTest, ReturnsBaseAndIsSeeded) {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    Instance instance = testing::RandomInstance(rng, Uniform(rng, 1, 15), 2);
    VectorStream s1(instance.elements), s2(instance.elements);
    const SolutionReport a = RandomBase(s1, instance.constraints, *instance.objective, 7);
    const SolutionReport b = RandomBase(s2, instance.constraints, *instance.objective, 7);
    ASSERT_EQ(a.chosen, b.chosen);
    ASSERT_EQ(static_cast<int>(a.chosen.size()),
              GreedyRank(*instance.constraints.matroid, instance.Ids()));
  }
}

TEST(MatroidIntersectionBaselineTest, RespectsUpperBounds) {
  Rng rng(89);
  for (int trial = 0; trial < 80; ++trial) {
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 20), 3);
    VectorStream stream(instance.elements);
    const SolutionReport r = MatroidIntersectionBaseline(
        stream, instance.constraints, *instance.objective, SwapRoutineFactory());
    ASSERT_TRUE(instance.constraints.matroid->IsIndependent(r.chosen));
    const auto count = testing::CountColors(r.chosen, instance.constraints);
    for (int c = 1; c <= 3; ++c) ASSERT_LE(count[c - 1], instance.constraints.bounds.upper(c));
  }
}

TEST(MemoryTest, StreamingAlgorithmsStayWithinBound) {
  Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const int colors = Uniform(rng, 1, 4);
    Instance instance = testing::RandomFeasibleInstance(rng, Uniform(rng, 1, 30), colors);
    const int k = instance.constraints.matroid->rank_bound();
    const int bound = k * colors + 2 * k;
    const Objective& f = *instance.objective;
    const Constraints& c = instance.constraints;
    std::vector<SolutionReport> reports;
    VectorStream s1(instance.elements), s2(instance.elements), s3(instance.elements),
        s4(instance.elements), s5(instance.elements), s6(instance.elements);
    reports.push_back(FirstPassOnly(s1, c, f, FirstPassKind::kFairReservoir));
    reports.push_back(TwoPass(s2, c, f, SwapRoutineFactory()));
    reports.push_back(TwoPass(s3, c, f, SwapRoutineFactory(), FirstPassKind::kGreedyFairReservoir,
                              SecondPassKind::kFairStreamingPlus));
    reports.push_back(GreedyFairStreaming(s4, c, f));
    reports.push_back(RandomBase(s5, c, f, 1));
    reports.push_back(MatroidIntersectionBaseline(s6, c, f, SwapRoutineFactory()));
    for (const SolutionReport& r : reports) {
      ASSERT_LE(r.stored_elements_peak, bound) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace fairmat
