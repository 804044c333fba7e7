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

#include "fairmat/exponential_search.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fairmat/matroid.h"

namespace fairmat {
namespace {

constexpr double kThetaCap = 1e15;

bool Contains(std::span<const ElementId> set, ElementId e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

double Gain(const Objective& objective, ElementId e,
            std::span<const ElementId> selected) {
  return objective.Marginal(e, selected);
}

}  // namespace

int64_t ThetaBucket(double gain, double width) {
  const double q = std::floor(std::max(gain, 0.0) / width);
  return static_cast<int64_t>(std::min(q, kThetaCap));
}

TruthfulOracles::TruthfulOracles(const Constraints& constraints,
                                 const Objective& objective,
                                 std::vector<ElementId> opt)
    : constraints_(constraints), objective_(objective), opt_(std::move(opt)) {
  std::sort(opt_.begin(), opt_.end());
}

int TruthfulOracles::Cardinality() {
  transcript_.push_back(static_cast<int64_t>(opt_.size()));
  return static_cast<int>(opt_.size());
}

ColorId TruthfulOracles::Color(int i) {
  const ColorId c = constraints_.color(opt_[i - 1]);
  transcript_.push_back(c);
  return c;
}

int64_t TruthfulOracles::Theta(int i, std::span<const ElementId> selected,
                               double width) {
  const ElementId o = opt_[i - 1];
  const double gain = Contains(selected, o) ? 0.0 : Gain(objective_, o, selected);
  const int64_t theta = ThetaBucket(gain, width);
  transcript_.push_back(theta);
  return theta;
}

bool TruthfulOracles::Matroid(int i, std::span<const ElementId> selected,
                              ElementId e) {
  std::vector<ElementId> set(selected.begin(), selected.end());
  for (size_t j = i; j < opt_.size(); ++j) {
    if (!Contains(set, opt_[j])) set.push_back(opt_[j]);
  }
  if (!Contains(set, e)) set.push_back(e);
  const bool answer = constraints_.matroid->IsIndependent(set);
  transcript_.push_back(answer ? 1 : 0);
  return answer;
}

int64_t TranscriptOracles::Next() {
  if (cursor_ >= transcript_.size()) throw TranscriptExhausted();
  return transcript_[cursor_++];
}

ExpRunResult ExpRun(ElementStream& stream, const Constraints& constraints,
                    const Objective& objective, ExpOracles& oracles,
                    double gamma, double eta, ExpTrace* trace) {
  ExpRunResult result;
  try {
    const int ell = oracles.Cardinality();
    if (ell <= 0) {
      result.ok = true;
      return result;
    }
    const double width = eta * gamma / ell;
    std::vector<ElementId>& selected = result.selected;
    std::vector<ElementId> held;  // T
    int i = 1;
    ColorId color = oracles.Color(i);
    int64_t theta = oracles.Theta(i, selected, width);
    std::vector<ElementId> buffer;
    stream.Replay([&](const Element& element) {
      if (i > ell) return;
      const ElementId e = element.id;
      if (Contains(selected, e) || Contains(held, e)) return;
      if (constraints.color(e) != color) return;
      if (ThetaBucket(Gain(objective, e, selected), width) != theta) return;
      buffer = selected;
      buffer.insert(buffer.end(), held.begin(), held.end());
      buffer.push_back(e);
      if (!constraints.matroid->IsIndependent(buffer)) {
        if (trace != nullptr) trace->precheck_rejections.push_back({i, e});
        return;
      }
      if (trace != nullptr) ++trace->matroid_queries;
      if (!oracles.Matroid(i, selected, e)) {
        held.push_back(e);
        return;
      }
      selected.push_back(e);
      held.clear();
      if (++i <= ell) {
        color = oracles.Color(i);
        theta = oracles.Theta(i, selected, width);
      }
    });
    result.ok = i > ell;
  } catch (const TranscriptExhausted&) {
    result.ok = false;
  }
  return result;
}

std::vector<double> GammaGrid(std::span<const double> singleton_values, int k,
                              double eta) {
  double f_min = 0.0;
  double f_max = 0.0;
  for (double v : singleton_values) {
    if (v <= kEpsilon) continue;
    f_min = f_min == 0.0 ? v : std::min(f_min, v);
    f_max = std::max(f_max, v);
  }
  if (f_max == 0.0) return {1.0};
  const double low = f_min / 2.0;
  const double high = f_max * std::max(k, 1) / eta;
  const double base = std::log(1.0 - eta);
  // (1 - eta)^t decreases in t.
  const int64_t t_first = static_cast<int64_t>(std::ceil(std::log(high) / base));
  const int64_t t_last = static_cast<int64_t>(std::floor(std::log(low) / base));
  std::vector<double> grid;
  grid.push_back(low / 2.0);
  for (int64_t t = t_last; t >= t_first; --t) {
    const double gamma = std::pow(1.0 - eta, static_cast<double>(t));
    if (gamma > low && gamma <= high) grid.push_back(gamma);
  }
  grid.push_back(high * 2.0);
  return grid;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::vector<Element> elements, const Constraints& constraints,
             const Objective& objective, double eta)
      : elements_(std::move(elements)),
        constraints_(constraints),
        objective_(objective),
        eta_(eta),
        rank_(constraints.matroid->rank_bound()),
        budget_(rank_ * rank_ + rank_) {}

  void Run(double gamma) {
    for (int ell = 0; ell <= std::min<int>(rank_, elements_.size()); ++ell) {
      State state;
      state.ell = ell;
      state.width = ell > 0 ? eta_ * gamma / ell : 1.0;
      StartIteration(state);
    }
  }

  bool found() const { return found_; }
  const std::vector<ElementId>& best() const { return best_; }
  int64_t copies() const { return copies_; }
  int peak() const { return peak_; }

 private:
  struct State {
    int ell = 0;
    double width = 1.0;
    int i = 1;
    ColorId color = 0;
    int64_t theta = 0;
    size_t pos = 0;
    int queries = 0;
    std::vector<ElementId> selected;
    std::vector<ElementId> held;
    // Bucket of f(e | selected) per remaining position; -1 if in selected.
    std::vector<int64_t> buckets;
  };

  void StartIteration(State state) {
    if (state.i > state.ell) {
      Offer(state.selected);
      return;
    }
    state.buckets.assign(elements_.size(), -1);
    std::vector<std::set<int64_t>> realized(constraints_.num_colors() + 1);
    for (size_t p = state.pos; p < elements_.size(); ++p) {
      const ElementId e = elements_[p].id;
      if (Contains(state.selected, e)) continue;
      state.buckets[p] =
          ThetaBucket(Gain(objective_, e, state.selected), state.width);
      realized[constraints_.color(e)].insert(state.buckets[p]);
    }
    state.held.clear();
    for (ColorId c = 1; c <= constraints_.num_colors(); ++c) {
      for (int64_t theta : realized[c]) {
        State branch = state;
        branch.color = c;
        branch.theta = theta;
        Scan(std::move(branch));
      }
    }
  }

  void Scan(State state) {
    std::vector<ElementId> buffer;
    for (size_t p = state.pos; p < elements_.size(); ++p) {
      const ElementId e = elements_[p].id;
      if (state.buckets[p] < 0 || Contains(state.held, e)) continue;
      if (constraints_.color(e) != state.color) continue;
      if (state.buckets[p] != state.theta) continue;
      buffer = state.selected;
      buffer.insert(buffer.end(), state.held.begin(), state.held.end());
      buffer.push_back(e);
      if (!constraints_.matroid->IsIndependent(buffer)) continue;
      if (++state.queries > budget_) return;
      State taken = state;
      taken.selected.push_back(e);
      taken.pos = p + 1;
      ++taken.i;
      peak_ = std::max(peak_, static_cast<int>(state.selected.size() +
                                               state.held.size() + 1));
      StartIteration(std::move(taken));
      state.held.push_back(e);
    }
    ++copies_;  // this guess sequence runs out of stream
  }

  void Offer(const std::vector<ElementId>& selected) {
    ++copies_;
    std::vector<ElementId> sorted = selected;
    std::sort(sorted.begin(), sorted.end());
    if (!IsFeasible(sorted, constraints_)) return;
    const double value = objective_.Value(sorted);
    if (!found_ || value > best_value_ + kEpsilon) {
      found_ = true;
      best_value_ = value;
      best_ = std::move(sorted);
    }
  }

  std::vector<Element> elements_;
  const Constraints& constraints_;
  const Objective& objective_;
  double eta_;
  int rank_;
  int budget_;
  bool found_ = false;
  double best_value_ = 0.0;
  std::vector<ElementId> best_;
  int64_t copies_ = 0;
  int peak_ = 0;
};

}  // namespace

SolutionReport ExpEnumerate(ElementStream& stream, const Constraints& constraints,
                            const Objective& objective, double eta) {
  if (!(eta > 0.0 && eta < 0.5)) {
    throw std::invalid_argument("exponential search: eta must lie in (0, 1/2)");
  }
  const int rank = constraints.matroid->rank_bound();
  if (rank > kExpMaxRank || constraints.num_colors() > kExpMaxColors) {
    throw std::length_error(
        "exponential search: rank " + std::to_string(rank) + " and " +
        std::to_string(constraints.num_colors()) + " colors exceed the limit of " +
        std::to_string(kExpMaxRank) + " and " + std::to_string(kExpMaxColors));
  }
  const CallMeter meter(*constraints.matroid, objective);
  std::vector<Element> elements;
  std::vector<double> singletons;
  stream.Replay([&](const Element& element) {
    elements.push_back(element);
    const ElementId single[1] = {element.id};
    singletons.push_back(objective.Value(single));
  });

  Enumerator enumerator(std::move(elements), constraints, objective, eta);
  for (double gamma : GammaGrid(singletons, rank, eta)) enumerator.Run(gamma);

  SolutionReport report;
  if (!enumerator.found()) {
    report = InfeasibleReport("no guess sequence produced a feasible set");
  } else {
    report = Summarize(enumerator.best(), constraints, objective);
  }
  report.stored_elements_peak = enumerator.peak();
  report.oracle_calls = meter.Elapsed();
  if (report.note.empty()) {
    report.note = "copies=" + std::to_string(enumerator.copies());
  }
  return report;
}

}  // namespace fairmat
