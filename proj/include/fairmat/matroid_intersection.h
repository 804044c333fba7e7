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

// Exact two-matroid intersection over independence oracles.
//
// Both routines augment along shortest paths in the exchange graph of the
// current common independent set S: an arc y -> x (y ∈ S, x ∉ S) when
// S - y + x is independent in the first matroid, an arc x -> y when
// S - y + x is independent in the second. Paths run from the elements that
// can be added to S in the first matroid to those that can be added in the
// second. Ties are broken by ascending element id.

#ifndef FAIRMAT_MATROID_INTERSECTION_H_
#define FAIRMAT_MATROID_INTERSECTION_H_

#include <span>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/matroid.h"

namespace fairmat {

struct IntersectionStats {
  int augmentations = 0;
};

// A maximum-cardinality set independent in both matroids, ascending.
std::vector<ElementId> MaxCardinalityCommon(const Matroid& first,
                                            const Matroid& second,
                                            std::span<const ElementId> ground,
                                            IntersectionStats* stats = nullptr);

// A maximum-weight common independent set, ascending. `weights` is indexed
// by element id and may hold negative entries. Among sets of equal weight
// the largest one found is returned.
std::vector<ElementId> MaxWeightCommon(const Matroid& first,
                                       const Matroid& second,
                                       std::span<const ElementId> ground,
                                       std::span<const double> weights,
                                       IntersectionStats* stats = nullptr);

}  // namespace fairmat

#endif  // FAIRMAT_MATROID_INTERSECTION_H_
