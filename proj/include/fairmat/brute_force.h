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

// Exhaustive ground truth for small instances.

#ifndef FAIRMAT_BRUTE_FORCE_H_
#define FAIRMAT_BRUTE_FORCE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/matroid.h"
#include "fairmat/objective.h"

namespace fairmat {

inline constexpr int kBruteForceMaxGround = 20;

struct BruteForceResult {
  bool feasible = false;
  // Ascending. Among maximizers (within kEpsilon) the lexicographically
  // smallest ascending id sequence.
  std::vector<ElementId> optimum;
  double value = 0.0;
  int64_t feasible_count = 0;
  int64_t enumerated = 0;
};

// Scans every feasible subset of `ground`. Subtrees are cut as soon as the
// partial set is dependent or exceeds an upper color bound. Throws
// std::length_error if |ground| > kBruteForceMaxGround.
BruteForceResult BruteForceOpt(std::span<const ElementId> ground,
                               const Constraints& constraints,
                               const Objective& objective);

// True iff some subset of `ground` is feasible. Exhaustive for
// |ground| <= kBruteForceMaxGround; larger grounds use per-color maximal
// independent sets and a max-cardinality intersection with the lower-bound
// color matroid.
bool FeasibleExists(std::span<const ElementId> ground,
                    const Constraints& constraints);

// The reservoir-based answer on its own, for cross-checking.
bool FeasibleExistsViaReservoirs(std::span<const ElementId> ground,
                                 const Constraints& constraints);

// Maximizes f over sets independent in both matroids. Same tie rule and
// size limit as BruteForceOpt.
std::vector<ElementId> BruteForceCommonIndependent(
    const Matroid& first, const Matroid& second,
    std::span<const ElementId> ground, const Objective& objective);

}  // namespace fairmat

#endif  // FAIRMAT_BRUTE_FORCE_H_
