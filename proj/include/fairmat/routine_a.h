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

// Streaming maximization of a monotone submodular function subject to two
// matroid constraints, used as a black box by the second pass.

#ifndef FAIRMAT_ROUTINE_A_H_
#define FAIRMAT_ROUTINE_A_H_

#include <functional>
#include <memory>
#include <string_view>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/matroid.h"
#include "fairmat/objective.h"

namespace fairmat {

class RoutineA {
 public:
  virtual ~RoutineA() = default;
  virtual void Process(ElementId e) = 0;
  // Ascending; independent in both matroids.
  virtual std::vector<ElementId> Finalize() = 0;
  // Number of elements currently held.
  virtual int stored() const = 0;
  // Declared approximation guarantee.
  virtual double alpha() const = 0;
  virtual std::string_view name() const = 0;
};

// The objective must outlive the routine.
using RoutineAFactory = std::function<std::unique_ptr<RoutineA>(
    MatroidPtr first, MatroidPtr second, const Objective& objective)>;

// Single-pass swap rule. Each kept element carries the weight w(e) = f(e | S)
// taken when it arrived. An element that cannot be added evicts, per
// violated matroid, the lightest element whose removal restores
// independence (ties by id), provided w(e) >= (1 + beta) * sum of the
// evicted weights.
class SwapRoutine : public RoutineA {
 public:
  SwapRoutine(MatroidPtr first, MatroidPtr second, const Objective& objective,
              double beta = 1.0, double alpha = 1.0 / 8.0);
  void Process(ElementId e) override;
  std::vector<ElementId> Finalize() override;
  int stored() const override { return static_cast<int>(members_.size()); }
  double alpha() const override { return alpha_; }
  std::string_view name() const override { return "swap"; }

 private:
  // Lightest y in the current set with S - y + e independent, or -1.
  int LightestBlocker(const Matroid& matroid, ElementId e) const;

  MatroidPtr first_;
  MatroidPtr second_;
  std::unique_ptr<ObjectiveState> state_;
  double beta_;
  double alpha_;
  std::vector<ElementId> members_;
  std::vector<double> weights_;  // parallel to members_
};

// Buffers every element and returns an exact maximizer over the common
// independent sets at Finalize(). Not a streaming algorithm; it is the
// alpha = 1 reference for small instances (at most 20 buffered elements).
class ExactRoutine : public RoutineA {
 public:
  ExactRoutine(MatroidPtr first, MatroidPtr second, const Objective& objective);
  void Process(ElementId e) override { buffer_.push_back(e); }
  std::vector<ElementId> Finalize() override;
  int stored() const override { return static_cast<int>(buffer_.size()); }
  double alpha() const override { return 1.0; }
  std::string_view name() const override { return "exact"; }

 private:
  MatroidPtr first_;
  MatroidPtr second_;
  const Objective& objective_;
  std::vector<ElementId> buffer_;
};

RoutineAFactory SwapRoutineFactory(double beta = 1.0);
RoutineAFactory ExactRoutineFactory();

}  // namespace fairmat

#endif  // FAIRMAT_ROUTINE_A_H_
