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

// Shared vocabulary: elements, colors, fairness bounds, constraints,
// instances and solution reports.

#ifndef FAIRMAT_CORE_H_
#define FAIRMAT_CORE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fairmat {

class Matroid;
class Objective;

using ElementId = int;
// Colors are dense integers 1..C.
using ColorId = int;

// Absolute tolerance for every comparison between objective values.
inline constexpr double kEpsilon = 1e-9;

struct Element {
  ElementId id = 0;
  ColorId color = 1;
  // Opaque handle resolved by the objective (node id, feature row, ...).
  int payload = 0;
};

// Per-color lower and upper bounds; lower(c) <= upper(c) for every color.
class FairnessBounds {
 public:
  FairnessBounds() = default;
  // Throws std::invalid_argument on size mismatch, negative entries or
  // lower > upper.
  FairnessBounds(std::vector<int> lower, std::vector<int> upper);

  int num_colors() const { return static_cast<int>(lower_.size()); }
  int lower(ColorId c) const { return lower_[c - 1]; }
  int upper(ColorId c) const { return upper_[c - 1]; }
  const std::vector<int>& lower_bounds() const { return lower_; }
  const std::vector<int>& upper_bounds() const { return upper_; }
  int lower_sum() const;
  int upper_sum() const;

 private:
  std::vector<int> lower_;
  std::vector<int> upper_;
};

// The feasible family: independent in `matroid` and within the color
// bounds. `color_of` is indexed by element id.
struct Constraints {
  std::shared_ptr<const Matroid> matroid;
  FairnessBounds bounds;
  std::vector<ColorId> color_of;

  int num_colors() const { return bounds.num_colors(); }
  int ground_size() const { return static_cast<int>(color_of.size()); }
  ColorId color(ElementId e) const { return color_of[e]; }
  // Throws std::invalid_argument when the pieces disagree.
  void Validate() const;
};

// Elements are stored in stream order and element i has id i.
struct Instance {
  std::vector<Element> elements;
  Constraints constraints;
  std::shared_ptr<const Objective> objective;

  int size() const { return static_cast<int>(elements.size()); }
  int num_colors() const { return constraints.num_colors(); }
  std::vector<ElementId> Ids() const;
  void Validate() const;
};

// Builds Constraints::color_of from a list of elements with ids 0..n-1.
std::vector<ColorId> ColorsOf(std::span<const Element> elements);

enum class Outcome { kSolved, kInfeasible, kFailed };
const char* OutcomeName(Outcome outcome);

struct OracleCalls {
  int64_t objective = 0;
  int64_t independence = 0;
};

struct SolutionReport {
  Outcome outcome = Outcome::kSolved;
  // Sorted ascending.
  std::vector<ElementId> chosen;
  double value = 0.0;
  std::vector<int> per_color;
  int violation = 0;
  int stored_elements_peak = 0;
  OracleCalls oracle_calls;
  std::string note;

  bool solved() const { return outcome == Outcome::kSolved; }
};

// |S ∩ V_c| for c = 1..C, returned with index c-1.
std::vector<int> ColorCounts(std::span<const ElementId> set,
                             const Constraints& constraints);

// err(S) = sum_c max{|S∩V_c| - u_c, l_c - |S∩V_c|, 0}.
int FairnessViolation(std::span<const int> per_color,
                      const FairnessBounds& bounds);
int FairnessViolation(std::span<const ElementId> set,
                      const Constraints& constraints);

// True iff `set` is independent and respects every color bound. Throws
// std::invalid_argument for ids outside the ground set.
bool IsFeasible(std::span<const ElementId> set, const Constraints& constraints);

// Fills value/per_color/violation for `chosen` (sorted on the way in).
SolutionReport Summarize(std::vector<ElementId> chosen,
                         const Constraints& constraints,
                         const Objective& objective);

SolutionReport InfeasibleReport(std::string note);

// Throws std::invalid_argument unless every id is in [0, ground_size) and
// ids are pairwise distinct.
void CheckElementSet(std::span<const ElementId> set, int ground_size);

// Oracle calls issued since construction, measured on one matroid and one
// objective.
class CallMeter {
 public:
  CallMeter(const Matroid& matroid, const Objective& objective);
  OracleCalls Elapsed() const;

 private:
  const Matroid& matroid_;
  const Objective& objective_;
  OracleCalls start_;
};

// Tracks the largest value passed to Observe().
class PeakCounter {
 public:
  void Observe(int current) {
    if (current > peak_) peak_ = current;
  }
  int peak() const { return peak_; }

 private:
  int peak_ = 0;
};

}  // namespace fairmat

#endif  // FAIRMAT_CORE_H_
