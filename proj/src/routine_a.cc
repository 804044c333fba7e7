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

#include "fairmat/routine_a.h"

#include <algorithm>

#include "fairmat/brute_force.h"

namespace fairmat {

SwapRoutine::SwapRoutine(MatroidPtr first, MatroidPtr second,
                         const Objective& objective, double beta, double alpha)
    : first_(std::move(first)),
      second_(std::move(second)),
      state_(objective.NewState()),
      beta_(beta),
      alpha_(alpha) {}

int SwapRoutine::LightestBlocker(const Matroid& matroid, ElementId e) const {
  std::vector<ElementId> buffer;
  int best = -1;
  for (size_t i = 0; i < members_.size(); ++i) {
    buffer.clear();
    for (size_t j = 0; j < members_.size(); ++j) {
      if (j != i) buffer.push_back(members_[j]);
    }
    buffer.push_back(e);
    if (!matroid.IsIndependent(buffer)) continue;
    if (best < 0 || weights_[i] < weights_[best] ||
        (weights_[i] == weights_[best] && members_[i] < members_[best])) {
      best = static_cast<int>(i);
    }
  }
  return best;
}

void SwapRoutine::Process(ElementId e) {
  if (state_->Contains(e)) return;
  const double w = state_->Gain(e);
  std::vector<ElementId> grown = members_;
  grown.push_back(e);
  const bool fits_first = first_->IsIndependent(grown);
  const bool fits_second = second_->IsIndependent(grown);
  if (fits_first && fits_second) {
    members_.push_back(e);
    weights_.push_back(w);
    state_->Add(e);
    return;
  }
  std::vector<int> evict;
  for (const auto& [fits, matroid] :
       {std::pair{fits_first, first_.get()}, std::pair{fits_second, second_.get()}}) {
    if (fits) continue;
    const int blocker = LightestBlocker(*matroid, e);
    // e is a loop of this matroid.
    if (blocker < 0) return;
    if (std::find(evict.begin(), evict.end(), blocker) == evict.end()) {
      evict.push_back(blocker);
    }
  }
  double evicted_weight = 0.0;
  for (int i : evict) evicted_weight += weights_[i];
  if (w < (1.0 + beta_) * evicted_weight) return;
  std::sort(evict.rbegin(), evict.rend());
  for (int i : evict) {
    state_->Remove(members_[i]);
    members_.erase(members_.begin() + i);
    weights_.erase(weights_.begin() + i);
  }
  members_.push_back(e);
  weights_.push_back(w);
  state_->Add(e);
}

std::vector<ElementId> SwapRoutine::Finalize() {
  std::vector<ElementId> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

ExactRoutine::ExactRoutine(MatroidPtr first, MatroidPtr second,
                           const Objective& objective)
    : first_(std::move(first)), second_(std::move(second)),
      objective_(objective) {}

std::vector<ElementId> ExactRoutine::Finalize() {
  return BruteForceCommonIndependent(*first_, *second_, buffer_, objective_);
}

RoutineAFactory SwapRoutineFactory(double beta) {
  return [beta](MatroidPtr first, MatroidPtr second, const Objective& objective) {
    return std::make_unique<SwapRoutine>(std::move(first), std::move(second),
                                         objective, beta);
  };
}

RoutineAFactory ExactRoutineFactory() {
  return [](MatroidPtr first, MatroidPtr second, const Objective& objective) {
    return std::make_unique<ExactRoutine>(std::move(first), std::move(second),
                                          objective);
  };
}

}  // namespace fairmat
