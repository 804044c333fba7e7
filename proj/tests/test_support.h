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

// Random instances and an exhaustive reference oracle for tests.

#ifndef FAIRMAT_TESTS_TEST_SUPPORT_H_
#define FAIRMAT_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/matroid.h"
#include "fairmat/objective.h"

namespace fairmat::testing {

using Rng = std::mt19937_64;

inline int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<ElementId> Iota(int n) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

inline std::vector<Element> MakeElements(const std::vector<ColorId>& colors) {
  std::vector<Element> elements;
  for (size_t i = 0; i < colors.size(); ++i) {
    elements.push_back({static_cast<ElementId>(i), colors[i], static_cast<int>(i)});
  }
  return elements;
}

// Partition with random blocks, laminar with nested groups, or uniform.
inline MatroidPtr RandomMatroid(Rng& rng, int n) {
  switch (Uniform(rng, 0, 2)) {
    case 0:
      return std::make_shared<UniformMatroid>(n, Uniform(rng, 1, std::max(1, n / 2 + 1)));
    case 1: {
      const int blocks = Uniform(rng, 1, 4);
      std::vector<int> block_of(n);
      for (int& b : block_of) b = Uniform(rng, 0, blocks - 1);
      std::vector<int> caps(blocks);
      for (int& c : caps) c = Uniform(rng, 1, 3);
      return std::make_shared<PartitionMatroid>(block_of, caps);
    }
    default: {
      const int leaves = Uniform(rng, 2, 4);
      std::vector<LaminarGroup> groups(leaves + 2);
      for (ElementId e = 0; e < n; ++e) {
        const int leaf = Uniform(rng, 0, leaves - 1);
        groups[leaf].members.push_back(e);
        if (leaf < leaves / 2 + 1) groups[leaves].members.push_back(e);
        groups[leaves + 1].members.push_back(e);
      }
      for (int g = 0; g < leaves; ++g) groups[g].cap = Uniform(rng, 1, 3);
      groups[leaves].cap = Uniform(rng, 1, 4);
      groups[leaves + 1].cap = Uniform(rng, 2, 6);
      return std::make_shared<LaminarMatroid>(n, std::move(groups));
    }
  }
}

// Monotone submodular: coverage, exemplar clustering or non-negative modular.
inline ObjectivePtr RandomMonotoneObjective(Rng& rng, int n) {
  switch (Uniform(rng, 0, 2)) {
    case 0: {
      const int universe = 2 * n + 1;
      std::vector<std::vector<int>> neighbors(n);
      for (auto& list : neighbors) {
        const int size = Uniform(rng, 1, 4);
        for (int j = 0; j < size; ++j) list.push_back(Uniform(rng, 0, universe - 1));
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
      return std::make_shared<CoverageObjective>(std::move(neighbors), universe);
    }
    case 1: {
      std::uniform_real_distribution<double> coord(-1.0, 1.0);
      std::vector<std::vector<double>> points(n, std::vector<double>(2));
      for (auto& p : points) {
        for (double& x : p) x = coord(rng);
      }
      std::vector<int> payload = Iota(n);
      return std::make_shared<ExemplarObjective>(std::move(points), std::move(payload));
    }
    default: {
      std::vector<double> weights(n);
      for (double& w : weights) w = Uniform(rng, 0, 9);
      return std::make_shared<ModularObjective>(std::move(weights));
    }
  }
}

inline std::vector<ColorId> RandomColors(Rng& rng, int n, int colors) {
  std::vector<ColorId> out(n);
  for (int i = 0; i < n; ++i) out[i] = i < colors ? i + 1 : Uniform(rng, 1, colors);
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline Instance Assemble(std::vector<ColorId> colors, MatroidPtr matroid,
                         FairnessBounds bounds, ObjectivePtr objective) {
  Instance instance;
  instance.elements = MakeElements(colors);
  instance.constraints.matroid = std::move(matroid);
  instance.constraints.bounds = std::move(bounds);
  instance.constraints.color_of = std::move(colors);
  instance.objective = std::move(objective);
  instance.Validate();
  return instance;
}

// Bounds planted around a random independent set, so the instance is
// feasible by construction.
inline Instance RandomFeasibleInstance(Rng& rng, int n, int colors,
                                       ObjectivePtr objective = nullptr) {
  std::vector<ColorId> color_of = RandomColors(rng, n, colors);
  MatroidPtr matroid = RandomMatroid(rng, n);
  std::vector<ElementId> order = Iota(n);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ElementId> planted = GreedyMaximalIndependent(*matroid, order);
  planted.resize(Uniform(rng, 0, static_cast<int>(planted.size())));
  std::vector<int> count(colors, 0);
  for (ElementId e : planted) ++count[color_of[e] - 1];
  std::vector<int> lower(colors);
  std::vector<int> upper(colors);
  for (int c = 0; c < colors; ++c) {
    lower[c] = Uniform(rng, 0, count[c]);
    upper[c] = count[c] + Uniform(rng, 0, 2);
  }
  if (objective == nullptr) objective = RandomMonotoneObjective(rng, n);
  return Assemble(std::move(color_of), std::move(matroid),
                  FairnessBounds(lower, upper), std::move(objective));
}

// Bounds drawn without regard to feasibility.
inline Instance RandomInstance(Rng& rng, int n, int colors,
                               ObjectivePtr objective = nullptr) {
  std::vector<ColorId> color_of = RandomColors(rng, n, colors);
  MatroidPtr matroid = RandomMatroid(rng, n);
  std::vector<int> lower(colors);
  std::vector<int> upper(colors);
  for (int c = 0; c < colors; ++c) {
    lower[c] = Uniform(rng, 0, 3);
    upper[c] = lower[c] + Uniform(rng, 0, 2);
  }
  if (objective == nullptr) objective = RandomMonotoneObjective(rng, n);
  return Assemble(std::move(color_of), std::move(matroid),
                  FairnessBounds(lower, upper), std::move(objective));
}

struct Reference {
  bool feasible = false;
  double value = 0.0;
  std::vector<ElementId> best;
  int64_t feasible_count = 0;
};

// Scans every subset mask. Independent of the library's search code.
inline Reference ExhaustiveOptimum(const Instance& instance) {
  const int n = instance.size();
  const Constraints& c = instance.constraints;
  Reference ref;
  std::vector<ElementId> set;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    set.clear();
    std::vector<int> count(c.num_colors(), 0);
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) {
        set.push_back(e);
        ++count[c.color_of[e] - 1];
      }
    }
    bool ok = true;
    for (int col = 1; col <= c.num_colors() && ok; ++col) {
      ok = count[col - 1] >= c.bounds.lower(col) && count[col - 1] <= c.bounds.upper(col);
    }
    if (!ok || !c.matroid->IsIndependent(set)) continue;
    ++ref.feasible_count;
    const double v = instance.objective->Value(set);
    if (!ref.feasible || v > ref.value + kEpsilon) {
      ref.feasible = true;
      ref.value = v;
      ref.best = set;
    }
  }
  return ref;
}

inline std::vector<int> CountColors(std::span<const ElementId> set,
                                    const Constraints& c) {
  std::vector<int> count(c.num_colors(), 0);
  for (ElementId e : set) ++count[c.color_of[e] - 1];
  return count;
}

}  // namespace fairmat::testing

#endif  // FAIRMAT_TESTS_TEST_SUPPORT_H_
