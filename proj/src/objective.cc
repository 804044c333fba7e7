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

#include "fairmat/objective.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace fairmat {

Objective::Objective(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

double Objective::Value(std::span<const ElementId> set) const {
  CheckElementSet(set, ground_size_);
  CountCalls(1);
  return Evaluate(set);
}

double Objective::Marginal(ElementId e, std::span<const ElementId> set) const {
  CheckElementSet(set, ground_size_);
  if (e < 0 || e >= ground_size_) {
    throw std::invalid_argument("unknown element id " + std::to_string(e));
  }
  if (std::find(set.begin(), set.end(), e) != set.end()) {
    throw std::invalid_argument("marginal: element " + std::to_string(e) +
                                " already in the set");
  }
  std::vector<ElementId> extended(set.begin(), set.end());
  extended.push_back(e);
  CountCalls(2);
  return Evaluate(extended) - Evaluate(set);
}

std::unique_ptr<ObjectiveState> Objective::NewState() const {
  return std::make_unique<ObjectiveState>(*this);
}

// ---------------------------------------------------------------------------

bool ObjectiveState::Contains(ElementId e) const {
  return std::find(members_.begin(), members_.end(), e) != members_.end();
}

double ObjectiveState::Gain(ElementId e) const {
  objective_.CountCalls(1);
  return DoGain(e);
}

double ObjectiveState::SwapGain(ElementId add, ElementId remove) const {
  objective_.CountCalls(1);
  return DoSwapGain(add, remove);
}

void ObjectiveState::Add(ElementId e) {
  if (e < 0 || e >= objective_.ground_size() || Contains(e)) {
    throw std::invalid_argument("objective state: cannot add element " +
                                std::to_string(e));
  }
  objective_.CountCalls(1);
  members_.push_back(e);
  OnAdd(e);
}

void ObjectiveState::Remove(ElementId e) {
  auto it = std::find(members_.begin(), members_.end(), e);
  if (it == members_.end()) {
    throw std::invalid_argument("objective state: element " + std::to_string(e) +
                                " is not a member");
  }
  objective_.CountCalls(1);
  members_.erase(it);
  OnRemove(e);
}

void ObjectiveState::Reset(std::span<const ElementId> set) {
  CheckElementSet(set, objective_.ground_size());
  objective_.CountCalls(1);
  members_.assign(set.begin(), set.end());
  OnReset();
}

double ObjectiveState::DoGain(ElementId e) const {
  std::vector<ElementId> extended(members_);
  extended.push_back(e);
  return Evaluate(extended) - value_;
}

double ObjectiveState::DoSwapGain(ElementId add, ElementId remove) const {
  std::vector<ElementId> swapped;
  swapped.reserve(members_.size());
  for (ElementId m : members_) {
    if (m != remove) swapped.push_back(m);
  }
  swapped.push_back(add);
  return Evaluate(swapped) - value_;
}

void ObjectiveState::OnAdd(ElementId) { value_ = Evaluate(members_); }
void ObjectiveState::OnRemove(ElementId) { value_ = Evaluate(members_); }
void ObjectiveState::OnReset() { value_ = Evaluate(members_); }

// ---------------------------------------------------------------------------
// Coverage.

CoverageObjective::CoverageObjective(std::vector<std::vector<int>> neighbors,
                                     int universe_size)
    : Objective(static_cast<int>(neighbors.size())),
      neighbors_(std::move(neighbors)),
      universe_size_(universe_size) {
  for (auto& list : neighbors_) {
    for (int u : list) {
      if (u < 0 || u >= universe_size_) {
        throw std::invalid_argument("coverage: neighbor id out of range");
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

double CoverageObjective::Evaluate(std::span<const ElementId> set) const {
  std::vector<int> covered;
  for (ElementId e : set) {
    covered.insert(covered.end(), neighbors_[e].begin(), neighbors_[e].end());
  }
  std::sort(covered.begin(), covered.end());
  return static_cast<double>(std::unique(covered.begin(), covered.end()) -
                             covered.begin());
}

namespace {

class CoverageState : public ObjectiveState {
 public:
  explicit CoverageState(const CoverageObjective& f)
      : ObjectiveState(f),
        coverage_(f),
        count_(f.universe_size(), 0),
        mark_(f.universe_size(), 0) {}

 protected:
  double DoGain(ElementId e) const override {
    int gain = 0;
    for (int u : coverage_.neighbors(e)) gain += count_[u] == 0;
    return gain;
  }

  double DoSwapGain(ElementId add, ElementId remove) const override {
    ++stamp_;
    for (int u : coverage_.neighbors(add)) mark_[u] = stamp_;
    int loss = 0;
    for (int u : coverage_.neighbors(remove)) {
      loss += count_[u] == 1 && mark_[u] != stamp_;
    }
    int gain = 0;
    for (int u : coverage_.neighbors(add)) gain += count_[u] == 0;
    return gain - loss;
  }

  void OnAdd(ElementId e) override {
    for (int u : coverage_.neighbors(e)) value_ += count_[u]++ == 0;
  }

  void OnRemove(ElementId e) override {
    for (int u : coverage_.neighbors(e)) value_ -= --count_[u] == 0;
  }

  void OnReset() override {
    std::fill(count_.begin(), count_.end(), 0);
    value_ = 0;
    for (ElementId e : members_) OnAdd(e);
  }

 private:
  const CoverageObjective& coverage_;
  std::vector<int> count_;
  mutable std::vector<int> mark_;
  mutable int stamp_ = 0;
};

}  // namespace

std::unique_ptr<ObjectiveState> CoverageObjective::NewState() const {
  return std::make_unique<CoverageState>(*this);
}

// ---------------------------------------------------------------------------
// Facility location.

double FacilityLocationObjective::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (int p = 0; p < num_points(); ++p) {
    const double phantom = PhantomScore(p);
    double best = phantom;
    for (ElementId e : set) best = std::max(best, Score(p, e));
    total += best - phantom;
  }
  total *= coefficient();
  for (ElementId e : set) total += Linear(e);
  return total;
}

namespace {

// Keeps, per point, the best and second-best score over S ∪ {phantom} and
// the element achieving the best (-1 for the phantom).
class FacilityState : public ObjectiveState {
 public:
  explicit FacilityState(const FacilityLocationObjective& f)
      : ObjectiveState(f), facility_(f) {
    OnReset();
  }

 protected:
  double DoGain(ElementId e) const override {
    double gain = 0.0;
    for (int p = 0; p < facility_.num_points(); ++p) {
      const double s = facility_.Score(p, e);
      if (s > best_[p]) gain += s - best_[p];
    }
    return facility_.coefficient() * gain + facility_.Linear(e);
  }

  double DoSwapGain(ElementId add, ElementId remove) const override {
    double delta = 0.0;
    for (int p = 0; p < facility_.num_points(); ++p) {
      const double kept = arg_[p] == remove ? second_[p] : best_[p];
      delta += std::max(kept, facility_.Score(p, add)) - best_[p];
    }
    return facility_.coefficient() * delta + facility_.Linear(add) -
           facility_.Linear(remove);
  }

  void OnAdd(ElementId e) override {
    for (int p = 0; p < facility_.num_points(); ++p) Offer(p, e);
    Recompute();
  }

  void OnRemove(ElementId) override { OnReset(); }

  void OnReset() override {
    const int n = facility_.num_points();
    best_.assign(n, 0.0);
    second_.assign(n, -std::numeric_limits<double>::infinity());
    arg_.assign(n, -1);
    for (int p = 0; p < n; ++p) best_[p] = facility_.PhantomScore(p);
    for (ElementId e : members_) {
      for (int p = 0; p < n; ++p) Offer(p, e);
    }
    Recompute();
  }

 private:
  void Offer(int p, ElementId e) {
    const double s = facility_.Score(p, e);
    if (s > best_[p]) {
      second_[p] = best_[p];
      best_[p] = s;
      arg_[p] = e;
    } else if (s > second_[p]) {
      second_[p] = s;
    }
  }

  void Recompute() {
    double total = 0.0;
    for (int p = 0; p < facility_.num_points(); ++p) {
      total += best_[p] - facility_.PhantomScore(p);
    }
    total *= facility_.coefficient();
    for (ElementId e : members_) total += facility_.Linear(e);
    value_ = total;
  }

  const FacilityLocationObjective& facility_;
  std::vector<double> best_;
  std::vector<double> second_;
  std::vector<ElementId> arg_;
};

void CheckPayload(const std::vector<int>& payload, size_t rows) {
  for (int row : payload) {
    if (row < 0 || static_cast<size_t>(row) >= rows) {
      throw std::invalid_argument("payload " + std::to_string(row) +
                                  " does not resolve to a data row");
    }
  }
}

}  // namespace

std::unique_ptr<ObjectiveState> FacilityLocationObjective::NewState() const {
  return std::make_unique<FacilityState>(*this);
}

ExemplarObjective::ExemplarObjective(std::vector<std::vector<double>> points,
                                     std::vector<int> payload)
    : FacilityLocationObjective(static_cast<int>(payload.size())),
      points_(std::move(points)),
      payload_(std::move(payload)) {
  CheckPayload(payload_, points_.size());
  for (const auto& x : points_) {
    if (x.size() != points_.front().size()) {
      throw std::invalid_argument("exemplar: ragged feature matrix");
    }
    double d = 0.0;
    for (double v : x) d += v * v;
    origin_dist_.push_back(d);
  }
}

double ExemplarObjective::Score(int point, ElementId e) const {
  const auto& a = points_[point];
  const auto& b = points_[payload_[e]];
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    d += diff * diff;
  }
  return -d;
}

RecommendationObjective::RecommendationObjective(
    std::vector<std::vector<double>> movies, std::vector<int> payload,
    std::vector<double> user, double alpha)
    : FacilityLocationObjective(static_cast<int>(payload.size())),
      movies_(std::move(movies)),
      payload_(std::move(payload)),
      user_(std::move(user)),
      alpha_(alpha) {
  CheckPayload(payload_, movies_.size());
  if (alpha_ < 0.0 || alpha_ > 1.0) {
    throw std::invalid_argument("recommendation: alpha outside [0, 1]");
  }
  for (const auto& v : movies_) {
    if (v.size() != user_.size()) {
      throw std::invalid_argument("recommendation: vector dimension mismatch");
    }
  }
}

double RecommendationObjective::Score(int point, ElementId e) const {
  const auto& a = movies_[point];
  const auto& b = movies_[payload_[e]];
  double dot = 0.0;
  for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return dot;
}

double RecommendationObjective::Linear(ElementId e) const {
  const auto& v = movies_[payload_[e]];
  double dot = 0.0;
  for (size_t i = 0; i < v.size(); ++i) dot += user_[i] * v[i];
  return (1.0 - alpha_) * dot;
}

// ---------------------------------------------------------------------------

ModularObjective::ModularObjective(std::vector<double> weights)
    : Objective(static_cast<int>(weights.size())), weights_(std::move(weights)) {}

double ModularObjective::Evaluate(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId e : set) total += weights_[e];
  return total;
}

namespace {

class ModularState : public ObjectiveState {
 public:
  explicit ModularState(const ModularObjective& f)
      : ObjectiveState(f), modular_(f) {}

 protected:
  double DoGain(ElementId e) const override { return modular_.weight(e); }
  double DoSwapGain(ElementId add, ElementId remove) const override {
    return modular_.weight(add) - modular_.weight(remove);
  }
  void OnAdd(ElementId e) override { value_ += modular_.weight(e); }
  void OnRemove(ElementId e) override { value_ -= modular_.weight(e); }
  void OnReset() override { value_ = Evaluate(members_); }

 private:
  const ModularObjective& modular_;
};

}  // namespace

std::unique_ptr<ObjectiveState> ModularObjective::NewState() const {
  return std::make_unique<ModularState>(*this);
}

// ---------------------------------------------------------------------------

SharedBonusObjective::SharedBonusObjective(std::vector<char> shared, double unit,
                                           double bonus)
    : Objective(static_cast<int>(shared.size())),
      shared_(std::move(shared)),
      unit_(unit),
      bonus_(bonus) {}

double SharedBonusObjective::Evaluate(std::span<const ElementId> set) const {
  int plain = 0;
  bool any_shared = false;
  for (ElementId e : set) {
    if (shared_[e]) {
      any_shared = true;
    } else {
      ++plain;
    }
  }
  return unit_ * plain + (any_shared ? bonus_ : 0.0);
}

// ---------------------------------------------------------------------------

ConditionedObjective::ConditionedObjective(const Objective& base,
                                           std::vector<ElementId> fixed)
    : Objective(base.ground_size()),
      base_(base),
      fixed_(std::move(fixed)),
      is_fixed_(base.ground_size(), 0) {
  fixed_value_ = base_.Value(fixed_);
  for (ElementId e : fixed_) is_fixed_[e] = 1;
}

double ConditionedObjective::Evaluate(std::span<const ElementId> set) const {
  std::vector<ElementId> joined(fixed_);
  for (ElementId e : set) {
    if (!is_fixed_[e]) joined.push_back(e);
  }
  return base_.Value(joined) - fixed_value_;
}

// ---------------------------------------------------------------------------

bool CheckSubmodularMonotone(const Objective& objective,
                             std::span<const ElementId> ground, int trials,
                             uint64_t seed, SubmodularityViolation* violation) {
  if (ground.size() < 1) return true;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < trials; ++t) {
    std::vector<ElementId> larger, outside;
    for (ElementId e : ground) (coin(rng) ? larger : outside).push_back(e);
    if (outside.empty()) {
      // Move one element out so that e ∉ X exists.
      outside.push_back(larger.back());
      larger.pop_back();
    }
    std::vector<ElementId> smaller;
    for (ElementId e : larger) {
      if (coin(rng)) smaller.push_back(e);
    }
    std::uniform_int_distribution<size_t> pick(0, outside.size() - 1);
    const ElementId e = outside[pick(rng)];
    const double gain_smaller = objective.Marginal(e, smaller);
    const double gain_larger = objective.Marginal(e, larger);
    if (gain_smaller < gain_larger - kEpsilon || gain_larger < -kEpsilon) {
      if (violation != nullptr) {
        *violation = {smaller, larger, e, gain_smaller, gain_larger};
      }
      return false;
    }
  }
  return true;
}

}  // namespace fairmat
