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

// Exact fair maximization of modular (possibly negative) objectives under a
// matroid constraint: a one-pass streaming algorithm and a centralized
// solver based on weighted matroid intersection over a cloned ground set.

#ifndef FAIRMAT_MODULAR_EXACT_H_
#define FAIRMAT_MODULAR_EXACT_H_

#include <memory>
#include <span>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/matroid.h"
#include "fairmat/objective.h"
#include "fairmat/stream.h"

namespace fairmat {

// Two matroids over clones of `ground` whose common independent sets of
// size x project exactly onto the feasible sets of size x. Element v at
// position p of `ground` becomes a lower clone 2p and an upper clone 2p + 1.
//   first:  independent projection, never both clones, at most x clones.
//   second: at most l_c lower clones and u_c - l_c upper clones of color c,
//           and at most x - sum(l) upper clones overall.
struct SmomibInstance {
  std::vector<ElementId> ground;        // original elements, ascending
  std::vector<ElementId> clone_ground;  // 0..2|ground|-1
  std::shared_ptr<CloneProjectionMatroid> clones;
  MatroidPtr first;
  MatroidPtr second;
  int size = 0;  // x
  // Both matroids have rank x on the clone ground.
  bool ranks_match = false;
};

SmomibInstance BuildSmomib(std::span<const ElementId> ground,
                           const Constraints& constraints, int size);

// Maximizes the modular objective over the feasible subsets of `ground`.
// For each size x in [sum(l), sum(u)] with matching ranks, solves a weighted
// intersection with clone weights w(v) + lambda, lambda = 1 + sum |w|, and
// keeps the best projection of size x.
SolutionReport SolveF3mCentralized(std::span<const ElementId> ground,
                                   const Constraints& constraints,
                                   const ModularObjective& objective);

// One pass keeping, per color, a max-weight independent set by the swap
// rule of GreedyFairReservoir; the optimum over their union is then found
// by SolveF3mCentralized.
SolutionReport GreedyFairStreamingM(ElementStream& stream,
                                    const Constraints& constraints,
                                    const ModularObjective& objective);

}  // namespace fairmat

#endif  // FAIRMAT_MODULAR_EXACT_H_
