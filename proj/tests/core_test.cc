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

#include "fairmat/core.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "fairmat/matroid.h"
#include "fairmat/objective.h"
#include "test_support.h"

namespace fairmat {
namespace {

Constraints ThreeColors() {
  Constraints c;
  c.matroid = std::make_shared<UniformMatroid>(6, 4);
  c.bounds = FairnessBounds({1, 0, 1}, {2, 1, 2});
  c.color_of = {1, 1, 2, 2, 3, 3};
  c.Validate();
  return c;
}

TEST(FairnessBoundsTest, RejectsLowerAboveUpper) {
  EXPECT_THROW(FairnessBounds({2}, {1}), std::invalid_argument);
  EXPECT_THROW(FairnessBounds({-1}, {1}), std::invalid_argument);
  EXPECT_THROW(FairnessBounds({0, 1}, {1}), std::invalid_argument);
}

TEST(FairnessBoundsTest, Sums) {
  FairnessBounds b({1, 2, 0}, {3, 2, 4});
  EXPECT_EQ(b.lower_sum(), 3);
  EXPECT_EQ(b.upper_sum(), 9);
  EXPECT_EQ(b.lower(2), 2);
  EXPECT_EQ(b.upper(3), 4);
}

TEST(ConstraintsTest, ValidateRejectsBadColors) {
  Constraints c = ThreeColors();
  c.color_of[0] = 4;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c = ThreeColors();
  c.color_of.pop_back();
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(ColorCountsTest, CountsPerColor) {
  const Constraints c = ThreeColors();
  const std::vector<ElementId> set = {0, 1, 4};
  EXPECT_EQ(ColorCounts(set, c), (std::vector<int>{2, 0, 1}));
}

TEST(FairnessViolationTest, SumsExcessAndDeficit) {
  const Constraints c = ThreeColors();
  // color 1: 2 within [1,2]; color 2: 2 > 1; color 3: 0 < 1.
  const std::vector<ElementId> set = {0, 1, 2, 3};
  EXPECT_EQ(FairnessViolation(set, c), 2);
  EXPECT_EQ(FairnessViolation(std::vector<ElementId>{0, 4}, c), 0);
}

TEST(IsFeasibleTest, ChecksBoundsAndMatroid) {
  const Constraints c = ThreeColors();
  EXPECT_TRUE(IsFeasible(std::vector<ElementId>{0, 2, 4}, c));
  EXPECT_FALSE(IsFeasible(std::vector<ElementId>{0, 1, 2, 3, 4}, c));  // rank 4
  EXPECT_FALSE(IsFeasible(std::vector<ElementId>{0}, c));
  EXPECT_THROW(IsFeasible(std::vector<ElementId>{0, 9}, c), std::invalid_argument);
}

TEST(CheckElementSetTest, RejectsDuplicatesAndRange) {
  EXPECT_THROW(CheckElementSet(std::vector<ElementId>{1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(CheckElementSet(std::vector<ElementId>{-1}, 3), std::invalid_argument);
  EXPECT_NO_THROW(CheckElementSet(std::vector<ElementId>{2, 0}, 3));
}

TEST(SummarizeTest, FillsReport) {
  const Constraints c = ThreeColors();
  ModularObjective f({1, 2, 3, 4, 5, 6});
  const SolutionReport r = Summarize({4, 0}, c, f);
  EXPECT_EQ(r.chosen, (std::vector<ElementId>{0, 4}));
  EXPECT_DOUBLE_EQ(r.value, 6.0);
  EXPECT_EQ(r.per_color, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(r.violation, 0);
  EXPECT_TRUE(r.solved());
}

TEST(CallMeterTest, MeasuresSinceConstruction) {
  UniformMatroid m(3, 2);
  ModularObjective f({1, 1, 1});
  m.IsIndependent(std::vector<ElementId>{0});
  const CallMeter meter(m, f);
  m.IsIndependent(std::vector<ElementId>{0, 1});
  f.Value(std::vector<ElementId>{1});
  const OracleCalls calls = meter.Elapsed();
  EXPECT_EQ(calls.independence, 1);
  EXPECT_EQ(calls.objective, 1);
}

TEST(PeakCounterTest, KeepsMaximum) {
  PeakCounter peak;
  peak.Observe(3);
  peak.Observe(1);
  EXPECT_EQ(peak.peak(), 3);
}

}  // namespace
}  // namespace fairmat
