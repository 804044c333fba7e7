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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fairmat/matroid.h"
#include "fairmat/objective.h"

namespace fairmat {

FairnessBounds::FairnessBounds(std::vector<int> lower, std::vector<int> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) {
    throw std::invalid_argument("fairness bounds: lower/upper size mismatch");
  }
  for (size_t c = 0; c < lower_.size(); ++c) {
    if (lower_[c] < 0 || upper_[c] < 0) {
      throw std::invalid_argument("fairness bounds must be non-negative");
    }
    if (lower_[c] > upper_[c]) {
      throw std::invalid_argument("fairness bounds: lower > upper for color " +
                                  std::to_string(c + 1));
    }
  }
}

int FairnessBounds::lower_sum() const {
  return std::accumulate(lower_.begin(), lower_.end(), 0);
}

int FairnessBounds::upper_sum() const {
  return std::accumulate(upper_.begin(), upper_.end(), 0);
}

void Constraints::Validate() const {
  if (matroid == nullptr) throw std::invalid_argument("constraints: no matroid");
  if (matroid->ground_size() != ground_size()) {
    throw std::invalid_argument(
        "constraints: matroid ground size differs from color map size");
  }
  for (ColorId c : color_of) {
    if (c < 1 || c > num_colors()) {
      throw std::invalid_argument("constraints: color " + std::to_string(c) +
                                  " out of range");
    }
  }
}

std::vector<ElementId> Instance::Ids() const {
  std::vector<ElementId> ids(elements.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

void Instance::Validate() const {
  constraints.Validate();
  if (objective == nullptr) throw std::invalid_argument("instance: no objective");
  if (constraints.ground_size() != size() || objective->ground_size() != size()) {
    throw std::invalid_argument("instance: ground size mismatch");
  }
  for (int i = 0; i < size(); ++i) {
    if (elements[i].id != i) {
      throw std::invalid_argument("instance: element ids must be 0..n-1 in order");
    }
    if (elements[i].color != constraints.color_of[i]) {
      throw std::invalid_argument("instance: element color disagrees with constraints");
    }
  }
}

std::vector<ColorId> ColorsOf(std::span<const Element> elements) {
  std::vector<ColorId> colors(elements.size());
  for (const Element& e : elements) {
    if (e.id < 0 || e.id >= static_cast<int>(elements.size())) {
      throw std::invalid_argument("element id out of range");
    }
    colors[e.id] = e.color;
  }
  return colors;
}

const char* OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kSolved:
      return "solved";
    case Outcome::kInfeasible:
      return "infeasible";
    case Outcome::kFailed:
      return "failed";
  }
  return "unknown";
}

void CheckElementSet(std::span<const ElementId> set, int ground_size) {
  for (ElementId e : set) {
    if (e < 0 || e >= ground_size) {
      throw std::invalid_argument("unknown element id " + std::to_string(e));
    }
  }
  if (set.size() < 2) return;
  if (set.size() <= 16) {
    for (size_t i = 0; i < set.size(); ++i) {
      for (size_t j = i + 1; j < set.size(); ++j) {
        if (set[i] == set[j]) {
          throw std::invalid_argument("duplicate element id " +
                                      std::to_string(set[i]));
        }
      }
    }
    return;
  }
  std::vector<ElementId> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::invalid_argument("duplicate element id " + std::to_string(*dup));
  }
}

std::vector<int> ColorCounts(std::span<const ElementId> set,
                             const Constraints& constraints) {
  std::vector<int> counts(constraints.num_colors(), 0);
  for (ElementId e : set) {
    if (e < 0 || e >= constraints.ground_size()) {
      throw std::invalid_argument("unknown element id " + std::to_string(e));
    }
    ++counts[constraints.color_of[e] - 1];
  }
  return counts;
}

int FairnessViolation(std::span<const int> per_color,
                      const FairnessBounds& bounds) {
  int err = 0;
  for (int c = 1; c <= bounds.num_colors(); ++c) {
    const int count = per_color[c - 1];
    err += std::max({count - bounds.upper(c), bounds.lower(c) - count, 0});
  }
  return err;
}

int FairnessViolation(std::span<const ElementId> set,
                      const Constraints& constraints) {
  return FairnessViolation(ColorCounts(set, constraints), constraints.bounds);
}

bool IsFeasible(std::span<const ElementId> set, const Constraints& constraints) {
  CheckElementSet(set, constraints.ground_size());
  if (FairnessViolation(set, constraints) != 0) return false;
  return constraints.matroid->IsIndependent(set);
}

SolutionReport Summarize(std::vector<ElementId> chosen,
                         const Constraints& constraints,
                         const Objective& objective) {
  SolutionReport report;
  std::sort(chosen.begin(), chosen.end());
  report.value = objective.Value(chosen);
  report.per_color = ColorCounts(chosen, constraints);
  report.violation = FairnessViolation(report.per_color, constraints.bounds);
  report.chosen = std::move(chosen);
  return report;
}

SolutionReport InfeasibleReport(std::string note) {
  SolutionReport report;
  report.outcome = Outcome::kInfeasible;
  report.note = std::move(note);
  return report;
}

CallMeter::CallMeter(const Matroid& matroid, const Objective& objective)
    : matroid_(matroid), objective_(objective) {
  start_.objective = objective.calls();
  start_.independence = matroid.independence_calls();
}

OracleCalls CallMeter::Elapsed() const {
  return {objective_.calls() - start_.objective,
          matroid_.independence_calls() - start_.independence};
}

}  // namespace fairmat
