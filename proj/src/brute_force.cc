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

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fairmat/matroid_intersection.h"

namespace fairmat {
namespace {

std::vector<ElementId> PrepareGround(std::span<const ElementId> ground,
                                     int ground_size) {
  if (static_cast<int>(ground.size()) > kBruteForceMaxGround) {
    throw std::length_error("brute force: ground of " +
                            std::to_string(ground.size()) +
                            " elements exceeds the limit of " +
                            std::to_string(kBruteForceMaxGround));
  }
  CheckElementSet(ground, ground_size);
  std::vector<ElementId> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

// Keeps the best set seen so far under (value desc, lexicographic asc).
struct Champion {
  bool found = false;
  double value = 0.0;
  std::vector<ElementId> set;

  void Offer(const std::vector<ElementId>& candidate, double v) {
    const bool wins =
        !found || v > value + kEpsilon ||
        (v >= value - kEpsilon &&
         std::lexicographical_compare(candidate.begin(), candidate.end(),
                                      set.begin(), set.end()));
    if (!wins) return;
    found = true;
    value = v;
    set = candidate;
  }
};

}  // namespace

BruteForceResult BruteForceOpt(std::span<const ElementId> ground,
                               const Constraints& constraints,
                               const Objective& objective) {
  const std::vector<ElementId> sorted =
      PrepareGround(ground, constraints.ground_size());
  const int m = static_cast<int>(sorted.size());
  const Matroid& matroid = *constraints.matroid;
  const FairnessBounds& bounds = constraints.bounds;

  BruteForceResult result;
  Champion champion;
  std::vector<ElementId> current;
  std::vector<int> counts(constraints.num_colors(), 0);

  std::function<void(int)> visit = [&](int index) {
    if (index == m) {
      ++result.enumerated;
      for (int c = 1; c <= bounds.num_colors(); ++c) {
        if (counts[c - 1] < bounds.lower(c)) return;
      }
      ++result.feasible_count;
      champion.Offer(current, objective.Value(current));
      return;
    }
    const ElementId e = sorted[index];
    const ColorId c = constraints.color(e);
    if (counts[c - 1] < bounds.upper(c)) {
      current.push_back(e);
      if (matroid.IsIndependent(current)) {
        ++counts[c - 1];
        visit(index + 1);
        --counts[c - 1];
      }
      current.pop_back();
    }
    visit(index + 1);
  };
  visit(0);

  result.feasible = champion.found;
  result.optimum = champion.set;
  result.value = champion.value;
  return result;
}

bool FeasibleExistsViaReservoirs(std::span<const ElementId> ground,
                                 const Constraints& constraints) {
  CheckElementSet(ground, constraints.ground_size());
  const Matroid& matroid = *constraints.matroid;
  std::vector<std::vector<ElementId>> reservoirs(constraints.num_colors());
  std::vector<ElementId> buffer;
  for (ElementId e : ground) {
    auto& reservoir = reservoirs[constraints.color(e) - 1];
    buffer = reservoir;
    buffer.push_back(e);
    if (matroid.IsIndependent(buffer)) reservoir.push_back(e);
  }
  std::vector<ElementId> pool;
  for (const auto& reservoir : reservoirs) {
    pool.insert(pool.end(), reservoir.begin(), reservoir.end());
  }
  auto lower = MakeLowerColorMatroid(constraints.color_of, constraints.bounds);
  const auto common = MaxCardinalityCommon(matroid, *lower, pool);
  return static_cast<int>(common.size()) == constraints.bounds.lower_sum();
}

bool FeasibleExists(std::span<const ElementId> ground,
                    const Constraints& constraints) {
  if (static_cast<int>(ground.size()) > kBruteForceMaxGround) {
    return FeasibleExistsViaReservoirs(ground, constraints);
  }
  const std::vector<ElementId> sorted =
      PrepareGround(ground, constraints.ground_size());
  const int m = static_cast<int>(sorted.size());
  const FairnessBounds& bounds = constraints.bounds;
  std::vector<ElementId> current;
  std::vector<int> counts(constraints.num_colors(), 0);
  // Only the lower bounds need to be reached, so stop adding a color once
  // it hits its lower bound.
  std::function<bool(int)> visit = [&](int index) {
    if (index == m) {
      for (int c = 1; c <= bounds.num_colors(); ++c) {
        if (counts[c - 1] < bounds.lower(c)) return false;
      }
      return true;
    }
    const ElementId e = sorted[index];
    const ColorId c = constraints.color(e);
    if (counts[c - 1] < bounds.lower(c)) {
      current.push_back(e);
      if (constraints.matroid->IsIndependent(current)) {
        ++counts[c - 1];
        const bool ok = visit(index + 1);
        --counts[c - 1];
        if (ok) return true;
      }
      current.pop_back();
    }
    return visit(index + 1);
  };
  return visit(0);
}

std::vector<ElementId> BruteForceCommonIndependent(
    const Matroid& first, const Matroid& second,
    std::span<const ElementId> ground, const Objective& objective) {
  const std::vector<ElementId> sorted =
      PrepareGround(ground, first.ground_size());
  const int m = static_cast<int>(sorted.size());
  Champion champion;
  std::vector<ElementId> current;
  std::function<void(int)> visit = [&](int index) {
    if (index == m) {
      champion.Offer(current, objective.Value(current));
      return;
    }
    current.push_back(sorted[index]);
    if (first.IsIndependent(current) && second.IsIndependent(current)) {
      visit(index + 1);
    }
    current.pop_back();
    visit(index + 1);
  };
  visit(0);
  return champion.set;
}

}  // namespace fairmat
