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

#include <algorithm>
#include <cmath>

#include "fairmat/matroid_intersection.h"
#include "fairmat/streaming_fair.h"

namespace fairmat {

SmomibInstance BuildSmomib(std::span<const ElementId> ground,
                           const Constraints& constraints, int size) {
  CheckElementSet(ground, constraints.ground_size());
  SmomibInstance smomib;
  smomib.ground.assign(ground.begin(), ground.end());
  std::sort(smomib.ground.begin(), smomib.ground.end());
  smomib.size = size;
  const int m = static_cast<int>(smomib.ground.size());
  smomib.clone_ground.resize(2 * m);
  for (int i = 0; i < 2 * m; ++i) smomib.clone_ground[i] = i;

  smomib.clones = std::make_shared<CloneProjectionMatroid>(constraints.matroid,
                                                           smomib.ground);
  smomib.first = Truncate(smomib.clones, size);

  const FairnessBounds& bounds = constraints.bounds;
  const int num_colors = constraints.num_colors();
  std::vector<LaminarGroup> groups(2 * num_colors + 1);
  for (int c = 1; c <= num_colors; ++c) {
    groups[2 * (c - 1)].cap = bounds.lower(c);
    groups[2 * (c - 1) + 1].cap = bounds.upper(c) - bounds.lower(c);
  }
  LaminarGroup& all_upper = groups.back();
  all_upper.cap = std::max(0, size - bounds.lower_sum());
  for (int p = 0; p < m; ++p) {
    const int c = constraints.color(smomib.ground[p]);
    groups[2 * (c - 1)].members.push_back(CloneProjectionMatroid::LowerClone(p));
    groups[2 * (c - 1) + 1].members.push_back(
        CloneProjectionMatroid::UpperClone(p));
    all_upper.members.push_back(CloneProjectionMatroid::UpperClone(p));
  }
  smomib.second = std::make_shared<LaminarMatroid>(2 * m, std::move(groups));
  smomib.ranks_match =
      GreedyRank(*smomib.first, smomib.clone_ground) == size &&
      GreedyRank(*smomib.second, smomib.clone_ground) == size;
  return smomib;
}

SolutionReport SolveF3mCentralized(std::span<const ElementId> ground,
                                   const Constraints& constraints,
                                   const ModularObjective& objective) {
  const CallMeter meter(*constraints.matroid, objective);
  const FairnessBounds& bounds = constraints.bounds;
  const int low = bounds.lower_sum();
  const int high = std::min(bounds.upper_sum(), static_cast<int>(ground.size()));

  double lambda = 1.0;
  for (ElementId e : ground) lambda += std::abs(objective.weight(e));

  bool found = false;
  double best_value = 0.0;
  std::vector<ElementId> best;
  for (int x = low; x <= high; ++x) {
    const SmomibInstance smomib = BuildSmomib(ground, constraints, x);
    if (!smomib.ranks_match) continue;
    std::vector<double> weights(smomib.clone_ground.size());
    for (size_t p = 0; p < smomib.ground.size(); ++p) {
      const double w = objective.weight(smomib.ground[p]) + lambda;
      weights[CloneProjectionMatroid::LowerClone(p)] = w;
      weights[CloneProjectionMatroid::UpperClone(p)] = w;
    }
    const std::vector<ElementId> lifted = MaxWeightCommon(
        *smomib.first, *smomib.second, smomib.clone_ground, weights);
    if (static_cast<int>(lifted.size()) != x) continue;
    std::vector<ElementId> projected = smomib.clones->Project(lifted);
    double value = 0.0;
    for (ElementId e : projected) value += objective.weight(e);
    if (!found || value > best_value + kEpsilon) {
      found = true;
      best_value = value;
      best = std::move(projected);
    }
  }
  if (!found) {
    SolutionReport report = InfeasibleReport("no feasible set of any size");
    report.oracle_calls = meter.Elapsed();
    return report;
  }
  SolutionReport report = Summarize(std::move(best), constraints, objective);
  report.stored_elements_peak = static_cast<int>(ground.size());
  report.oracle_calls = meter.Elapsed();
  return report;
}

SolutionReport GreedyFairStreamingM(ElementStream& stream,
                                    const Constraints& constraints,
                                    const ModularObjective& objective) {
  const CallMeter meter(*constraints.matroid, objective);
  const FirstPassResult pass =
      GreedyFairReservoir(stream, constraints, objective);
  if (!pass.solved()) {
    SolutionReport report = InfeasibleReport(pass.note);
    report.stored_elements_peak = pass.stored_peak;
    report.oracle_calls = meter.Elapsed();
    return report;
  }
  std::vector<ElementId> pool;
  for (const auto& reservoir : pass.reservoirs) {
    pool.insert(pool.end(), reservoir.begin(), reservoir.end());
  }
  SolutionReport report = SolveF3mCentralized(pool, constraints, objective);
  report.stored_elements_peak = pass.stored_peak;
  report.oracle_calls = meter.Elapsed();
  return report;
}

}  // namespace fairmat
