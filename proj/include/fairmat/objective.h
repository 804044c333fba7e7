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

// Set-function value oracles over element ids {0, ..., ground_size() - 1}.
//
// Every oracle is normalized (f(∅) = 0). Value() and Marginal() are the
// plain value-oracle interface; NewState() hands out an incremental view of
// a growing (and occasionally shrinking) solution so that streaming code
// can ask for f(e | S) and f(S + a - r) - f(S) without re-evaluating f(S).

#ifndef FAIRMAT_OBJECTIVE_H_
#define FAIRMAT_OBJECTIVE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "fairmat/core.h"

namespace fairmat {

class ObjectiveState;

class Objective {
 public:
  explicit Objective(int ground_size);
  virtual ~Objective() = default;
  Objective(const Objective&) = delete;
  Objective& operator=(const Objective&) = delete;

  // f(S). Throws std::invalid_argument for unknown or repeated ids.
  double Value(std::span<const ElementId> set) const;
  // f(e | S) = f(S + e) - f(S). Throws std::invalid_argument if e is in S.
  double Marginal(ElementId e, std::span<const ElementId> set) const;

  virtual std::unique_ptr<ObjectiveState> NewState() const;

  virtual std::string_view kind() const = 0;
  virtual bool is_modular() const { return false; }

  int ground_size() const { return ground_size_; }
  int64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  void CountCalls(int64_t n) const {
    calls_.fetch_add(n, std::memory_order_relaxed);
  }

 protected:
  // `set` is already validated.
  virtual double Evaluate(std::span<const ElementId> set) const = 0;

 private:
  friend class ObjectiveState;
  int ground_size_;
  mutable std::atomic<int64_t> calls_{0};
};

using ObjectivePtr = std::shared_ptr<const Objective>;

// Incremental evaluation of f around a current set S. The generic
// implementation re-evaluates f; concrete oracles override the hooks.
// Every Gain()/SwapGain() counts as one objective call.
class ObjectiveState {
 public:
  explicit ObjectiveState(const Objective& objective) : objective_(objective) {}
  virtual ~ObjectiveState() = default;

  // f(e | S) for e not in S.
  double Gain(ElementId e) const;
  // f(S + add - remove) - f(S) for add not in S, remove in S.
  double SwapGain(ElementId add, ElementId remove) const;
  void Add(ElementId e);
  void Remove(ElementId e);
  void Reset(std::span<const ElementId> set);

  double value() const { return value_; }
  const std::vector<ElementId>& members() const { return members_; }
  bool Contains(ElementId e) const;
  const Objective& objective() const { return objective_; }

 protected:
  virtual double DoGain(ElementId e) const;
  virtual double DoSwapGain(ElementId add, ElementId remove) const;
  // Hooks run after members_ changed; they must bring value_ up to date.
  // The defaults re-evaluate f.
  virtual void OnAdd(ElementId e);
  virtual void OnRemove(ElementId e);
  virtual void OnReset();
  double Evaluate(std::span<const ElementId> set) const {
    return objective_.Evaluate(set);
  }

  const Objective& objective_;
  std::vector<ElementId> members_;
  double value_ = 0.0;
};

// f(S) = |∪_{v ∈ S} N(v)|, neighbor lists indexed by element id.
class CoverageObjective : public Objective {
 public:
  // Neighbor ids must lie in [0, universe_size).
  CoverageObjective(std::vector<std::vector<int>> neighbors, int universe_size);
  std::string_view kind() const override { return "coverage"; }
  std::unique_ptr<ObjectiveState> NewState() const override;
  const std::vector<int>& neighbors(ElementId e) const { return neighbors_[e]; }
  int universe_size() const { return universe_size_; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<std::vector<int>> neighbors_;
  int universe_size_;
};

// Facility-location family: f(S) = coef * sum_p (max_{e ∈ S ∪ {0}} s(p, e)
// - s(p, 0)) + sum_{e ∈ S} linear(e), where p ranges over the points and
// 0 is a phantom exemplar.
class FacilityLocationObjective : public Objective {
 public:
  explicit FacilityLocationObjective(int ground_size) : Objective(ground_size) {}
  std::unique_ptr<ObjectiveState> NewState() const override;

  virtual int num_points() const = 0;
  // Similarity of point p to the exemplar of element e.
  virtual double Score(int point, ElementId e) const = 0;
  virtual double PhantomScore(int point) const = 0;
  virtual double coefficient() const { return 1.0; }
  virtual double Linear(ElementId e) const {
    (void)e;
    return 0.0;
  }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;
};

// Exemplar clustering: f(S) = sum_{p ∈ V} (d(p, 0) - min_{e ∈ S ∪ {0}} d(p, e))
// with d the squared Euclidean distance and the phantom at the origin.
// Element e's exemplar is point row `payload[e]`; every row is a point.
class ExemplarObjective : public FacilityLocationObjective {
 public:
  ExemplarObjective(std::vector<std::vector<double>> points,
                    std::vector<int> payload);
  std::string_view kind() const override { return "exemplar"; }
  int num_points() const override { return static_cast<int>(points_.size()); }
  double Score(int point, ElementId e) const override;
  double PhantomScore(int point) const override { return -origin_dist_[point]; }

 private:
  std::vector<std::vector<double>> points_;
  std::vector<int> payload_;
  std::vector<double> origin_dist_;
};

// Movie recommendation: f(S) = alpha * sum_{m'} max(max_{m ∈ S} <v_m, v_m'>, 0)
// + (1 - alpha) * sum_{m ∈ S} <w_u, v_m>. Element e is movie row
// `payload[e]`; the coverage sum runs over every row.
class RecommendationObjective : public FacilityLocationObjective {
 public:
  RecommendationObjective(std::vector<std::vector<double>> movies,
                          std::vector<int> payload, std::vector<double> user,
                          double alpha);
  std::string_view kind() const override { return "recommendation"; }
  int num_points() const override { return static_cast<int>(movies_.size()); }
  double Score(int point, ElementId e) const override;
  double PhantomScore(int point) const override {
    (void)point;
    return 0.0;
  }
  double coefficient() const override { return alpha_; }
  double Linear(ElementId e) const override;

 private:
  std::vector<std::vector<double>> movies_;
  std::vector<int> payload_;
  std::vector<double> user_;
  double alpha_;
};

// f(S) = sum_{e ∈ S} w(e); weights may be negative.
class ModularObjective : public Objective {
 public:
  explicit ModularObjective(std::vector<double> weights);
  std::string_view kind() const override { return "modular"; }
  bool is_modular() const override { return true; }
  std::unique_ptr<ObjectiveState> NewState() const override;
  double weight(ElementId e) const { return weights_[e]; }
  const std::vector<double>& weights() const { return weights_; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<double> weights_;
};

// f(S) = unit * |S \ shared| + bonus * min(1, |S ∩ shared|).
// Reproduces the instance where per-color greedy reservoirs lose a factor C.
class SharedBonusObjective : public Objective {
 public:
  SharedBonusObjective(std::vector<char> shared, double unit, double bonus);
  std::string_view kind() const override { return "shared_bonus"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  std::vector<char> shared_;
  double unit_;
  double bonus_;
};

// g(X) = f(X ∪ fixed) - f(fixed). Elements of `fixed` contribute nothing.
class ConditionedObjective : public Objective {
 public:
  ConditionedObjective(const Objective& base, std::vector<ElementId> fixed);
  std::string_view kind() const override { return "conditioned"; }

 protected:
  double Evaluate(std::span<const ElementId> set) const override;

 private:
  const Objective& base_;
  std::vector<ElementId> fixed_;
  std::vector<char> is_fixed_;
  double fixed_value_;
};

struct SubmodularityViolation {
  std::vector<ElementId> smaller;  // Y
  std::vector<ElementId> larger;   // X, with Y ⊆ X
  ElementId element = -1;          // e ∉ X
  double gain_smaller = 0.0;       // f(e | Y)
  double gain_larger = 0.0;        // f(e | X)
};

// Samples `trials` triples (Y ⊆ X, e ∉ X) from `ground` and checks
// f(e|Y) >= f(e|X) - eps and f(e|X) >= -eps. Returns false and fills
// `violation` (when given) on the first failing triple.
bool CheckSubmodularMonotone(const Objective& objective,
                             std::span<const ElementId> ground, int trials,
                             uint64_t seed,
                             SubmodularityViolation* violation = nullptr);

}  // namespace fairmat

#endif  // FAIRMAT_OBJECTIVE_H_
