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

// Streaming algorithms for fair monotone submodular maximization under a
// matroid constraint: first-pass reservoirs, second-pass extenders, the
// one-pass greedy heuristic and the baselines.
//
// Every streaming routine reports `stored_elements_peak`, the largest number
// of elements it held at any point of a pass.

#ifndef FAIRMAT_STREAMING_FAIR_H_
#define FAIRMAT_STREAMING_FAIR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/objective.h"
#include "fairmat/routine_a.h"
#include "fairmat/stream.h"

namespace fairmat {

struct FirstPassResult {
  Outcome outcome = Outcome::kSolved;
  // Exactly l_c elements of every color when solved. Ascending.
  std::vector<ElementId> solution;
  // reservoirs[c - 1] is the maximal independent set kept for color c.
  std::vector<std::vector<ElementId>> reservoirs;
  int stored_peak = 0;
  std::string note;

  bool solved() const { return outcome == Outcome::kSolved; }
};

// Keeps the first maximal independent set of each color, then extracts a
// maximum common independent set of the union with the lower-bound color
// matroid.
FirstPassResult FairReservoir(ElementStream& stream,
                              const Constraints& constraints);

// As FairReservoir, but a blocked element e replaces the first e' of its
// color (increasing f({e'}), then id) such that I_c + e - e' is independent
// and f(I_c + e - e') >= f(I_c).
FirstPassResult GreedyFairReservoir(ElementStream& stream,
                                    const Constraints& constraints,
                                    const Objective& objective);

// Picks a feasible subset of the reservoirs, or reports infeasibility.
FirstPassResult SelectFeasibleCore(std::vector<std::vector<ElementId>> reservoirs,
                                   const Constraints& constraints);

struct BalancedSplit {
  std::vector<ElementId> first;
  std::vector<ElementId> second;
};

// Scans `set` in ascending id order; an element goes to `first` iff
// `first` currently holds fewer elements of its color than `second`.
BalancedSplit SplitBalanced(std::span<const ElementId> set,
                            const Constraints& constraints);

// Second pass. Runs one copy of A per half S_i with the upper-bound color
// matroid and I contracted by S_i, feeding it every stream element outside
// S; then tops each output up with S_i elements while the color stays below
// its upper bound. Returns the better of the two (ties to the first).
SolutionReport FairStreaming(ElementStream& stream,
                             std::span<const ElementId> first_pass,
                             const Constraints& constraints,
                             const Objective& objective,
                             const RoutineAFactory& routine);

// Second pass with the filling done by A again: for each half, A runs over
// S_i with objective f(. ∪ S'_i), the upper-bound color matroid contracted
// by S'_i and a free matroid of rank |S_i|. Its output is completed
// greedily to a base of the contracted color matroid.
SolutionReport FairStreamingPlus(ElementStream& stream,
                                 std::span<const ElementId> first_pass,
                                 const Constraints& constraints,
                                 const Objective& objective,
                                 const RoutineAFactory& routine);

enum class FirstPassKind { kFairReservoir, kGreedyFairReservoir };
enum class SecondPassKind { kFairStreaming, kFairStreamingPlus };

// Both passes over the same stream.
SolutionReport TwoPass(ElementStream& stream, const Constraints& constraints,
                       const Objective& objective, const RoutineAFactory& routine,
                       FirstPassKind first = FirstPassKind::kGreedyFairReservoir,
                       SecondPassKind second = SecondPassKind::kFairStreaming);

// The first pass alone, reported as a solution.
SolutionReport FirstPassOnly(ElementStream& stream, const Constraints& constraints,
                             const Objective& objective, FirstPassKind kind);

// One pass: GreedyFairReservoir, then the remaining reservoir elements are
// added greedily by largest f(e | S) (ties by id) whenever S + e stays
// independent and within the upper bounds.
SolutionReport GreedyFairStreaming(ElementStream& stream,
                                   const Constraints& constraints,
                                   const Objective& objective);

// A uniformly keyed maximum-key base of the matroid; colors are ignored.
SolutionReport RandomBase(ElementStream& stream, const Constraints& constraints,
                          const Objective& objective, uint64_t seed);

// A run over the whole stream with I and the upper-bound color matroid.
SolutionReport MatroidIntersectionBaseline(ElementStream& stream,
                                           const Constraints& constraints,
                                           const Objective& objective,
                                           const RoutineAFactory& routine);

}  // namespace fairmat

#endif  // FAIRMAT_STREAMING_FAIR_H_
