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

#include "fairmat/streaming_fair.h"

#include <algorithm>
#include <queue>
#include <random>
#include <tuple>

#include "fairmat/matroid.h"
#include "fairmat/matroid_intersection.h"

namespace fairmat {
namespace {

bool IndependentWith(const Matroid& matroid, std::vector<ElementId> set,
                     ElementId add, ElementId remove = -1) {
  if (remove >= 0) set.erase(std::find(set.begin(), set.end(), remove));
  set.push_back(add);
  return matroid.IsIndependent(set);
}

std::vector<char> Mask(std::span<const ElementId> set, int ground_size) {
  std::vector<char> mask(ground_size, 0);
  for (ElementId e : set) mask[e] = 1;
  return mask;
}

int TotalSize(const std::vector<std::vector<ElementId>>& sets) {
  int total = 0;
  for (const auto& s : sets) total += static_cast<int>(s.size());
  return total;
}

SolutionReport Finish(std::vector<ElementId> chosen,
                      const Constraints& constraints,
                      const Objective& objective, int peak,
                      const CallMeter& meter) {
  SolutionReport report = Summarize(std::move(chosen), constraints, objective);
  report.stored_elements_peak = peak;
  report.oracle_calls = meter.Elapsed();
  return report;
}

SolutionReport FailedFirstPass(const FirstPassResult& first,
                               const CallMeter& meter) {
  SolutionReport report = InfeasibleReport(first.note);
  report.stored_elements_peak = first.stored_peak;
  report.oracle_calls = meter.Elapsed();
  return report;
}

SolutionReport SecondPass(ElementStream& stream,
                          std::span<const ElementId> first_pass,
                          const Constraints& constraints,
                          const Objective& objective,
                          const RoutineAFactory& routine, bool plus) {
  const CallMeter meter(*constraints.matroid, objective);
  const int n = constraints.ground_size();
  CheckElementSet(first_pass, n);
  const BalancedSplit split = SplitBalanced(first_pass, constraints);
  const MatroidPtr upper =
      MakeUpperColorMatroid(constraints.color_of, constraints.bounds);
  const std::vector<ElementId>* halves[2] = {&split.first, &split.second};

  std::unique_ptr<RoutineA> runs[2];
  for (int i = 0; i < 2; ++i) {
    runs[i] = routine(upper, Contract(constraints.matroid, *halves[i]), objective);
  }
  const std::vector<char> in_first_pass = Mask(first_pass, n);
  const int kept = static_cast<int>(first_pass.size());
  PeakCounter peak;
  peak.Observe(kept);
  stream.Replay([&](const Element& element) {
    if (in_first_pass[element.id]) return;
    for (auto& run : runs) run->Process(element.id);
    peak.Observe(kept + runs[0]->stored() + runs[1]->stored());
  });

  std::vector<ElementId> outputs[2];
  for (int i = 0; i < 2; ++i) outputs[i] = runs[i]->Finalize();
  peak.Observe(kept + static_cast<int>(outputs[0].size() + outputs[1].size()));

  for (int i = 0; i < 2; ++i) {
    std::vector<ElementId>& out = outputs[i];
    if (!plus) {
      std::vector<int> counts = ColorCounts(out, constraints);
      for (ElementId e : *halves[i]) {
        const ColorId c = constraints.color(e);
        if (std::find(out.begin(), out.end(), e) != out.end()) continue;
        if (counts[c - 1] < constraints.bounds.upper(c)) {
          out.push_back(e);
          ++counts[c - 1];
        }
      }
      continue;
    }
    const ConditionedObjective conditioned(objective, out);
    const MatroidPtr colors = Contract(upper, out);
    const MatroidPtr free = std::make_shared<UniformMatroid>(
        n, static_cast<int>(halves[i]->size()));
    std::unique_ptr<RoutineA> filler = routine(colors, free, conditioned);
    for (ElementId e : *halves[i]) filler->Process(e);
    std::vector<ElementId> extra = filler->Finalize();
    for (ElementId e : *halves[i]) {
      if (std::find(extra.begin(), extra.end(), e) != extra.end()) continue;
      if (IndependentWith(*colors, extra, e)) extra.push_back(e);
    }
    out.insert(out.end(), extra.begin(), extra.end());
  }

  const double v0 = objective.Value(outputs[0]);
  const double v1 = objective.Value(outputs[1]);
  const int winner = v1 > v0 + kEpsilon ? 1 : 0;
  return Finish(std::move(outputs[winner]), constraints, objective, peak.peak(),
                meter);
}

}  // namespace

FirstPassResult SelectFeasibleCore(std::vector<std::vector<ElementId>> reservoirs,
                                   const Constraints& constraints) {
  FirstPassResult result;
  std::vector<ElementId> pool;
  for (const auto& reservoir : reservoirs) {
    pool.insert(pool.end(), reservoir.begin(), reservoir.end());
  }
  const auto lower =
      MakeLowerColorMatroid(constraints.color_of, constraints.bounds);
  result.solution = MaxCardinalityCommon(*constraints.matroid, *lower, pool);
  result.reservoirs = std::move(reservoirs);
  const int need = constraints.bounds.lower_sum();
  if (static_cast<int>(result.solution.size()) < need) {
    result.outcome = Outcome::kInfeasible;
    result.note = "no feasible set: largest fair core has " +
                  std::to_string(result.solution.size()) + " of " +
                  std::to_string(need) + " required elements";
    result.solution.clear();
  }
  return result;
}

FirstPassResult FairReservoir(ElementStream& stream,
                              const Constraints& constraints) {
  const Matroid& matroid = *constraints.matroid;
  std::vector<std::vector<ElementId>> reservoirs(constraints.num_colors());
  PeakCounter peak;
  stream.Replay([&](const Element& element) {
    auto& reservoir = reservoirs[constraints.color(element.id) - 1];
    if (IndependentWith(matroid, reservoir, element.id)) {
      reservoir.push_back(element.id);
    }
    peak.Observe(TotalSize(reservoirs));
  });
  FirstPassResult result = SelectFeasibleCore(std::move(reservoirs), constraints);
  result.stored_peak = peak.peak();
  return result;
}

FirstPassResult GreedyFairReservoir(ElementStream& stream,
                                    const Constraints& constraints,
                                    const Objective& objective) {
  const Matroid& matroid = *constraints.matroid;
  const int num_colors = constraints.num_colors();
  std::vector<std::vector<ElementId>> reservoirs(num_colors);
  std::vector<std::unique_ptr<ObjectiveState>> states;
  for (int c = 0; c < num_colors; ++c) states.push_back(objective.NewState());
  std::vector<double> singleton(constraints.ground_size(), 0.0);
  PeakCounter peak;
  std::vector<ElementId> order;
  stream.Replay([&](const Element& element) {
    const ElementId e = element.id;
    const int c = constraints.color(e) - 1;
    auto& reservoir = reservoirs[c];
    const ElementId single[1] = {e};
    singleton[e] = objective.Value(single);
    if (IndependentWith(matroid, reservoir, e)) {
      reservoir.push_back(e);
      states[c]->Add(e);
    } else {
      order = reservoir;
      std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
        return std::tie(singleton[a], a) < std::tie(singleton[b], b);
      });
      for (ElementId out : order) {
        if (!IndependentWith(matroid, reservoir, e, out)) continue;
        if (states[c]->SwapGain(e, out) < -kEpsilon) continue;
        *std::find(reservoir.begin(), reservoir.end(), out) = e;
        states[c]->Remove(out);
        states[c]->Add(e);
        break;
      }
    }
    peak.Observe(TotalSize(reservoirs));
  });
  FirstPassResult result = SelectFeasibleCore(std::move(reservoirs), constraints);
  result.stored_peak = peak.peak();
  return result;
}

BalancedSplit SplitBalanced(std::span<const ElementId> set,
                            const Constraints& constraints) {
  std::vector<ElementId> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  BalancedSplit split;
  std::vector<int> first(constraints.num_colors(), 0);
  std::vector<int> second(constraints.num_colors(), 0);
  for (ElementId e : sorted) {
    const int c = constraints.color(e) - 1;
    if (first[c] < second[c]) {
      split.first.push_back(e);
      ++first[c];
    } else {
      split.second.push_back(e);
      ++second[c];
    }
  }
  return split;
}

SolutionReport FairStreaming(ElementStream& stream,
                             std::span<const ElementId> first_pass,
                             const Constraints& constraints,
                             const Objective& objective,
                             const RoutineAFactory& routine) {
  return SecondPass(stream, first_pass, constraints, objective, routine, false);
}

SolutionReport FairStreamingPlus(ElementStream& stream,
                                 std::span<const ElementId> first_pass,
                                 const Constraints& constraints,
                                 const Objective& objective,
                                 const RoutineAFactory& routine) {
  return SecondPass(stream, first_pass, constraints, objective, routine, true);
}

namespace {

FirstPassResult RunFirstPass(ElementStream& stream,
                             const Constraints& constraints,
                             const Objective& objective, FirstPassKind kind) {
  return kind == FirstPassKind::kFairReservoir
             ? FairReservoir(stream, constraints)
             : GreedyFairReservoir(stream, constraints, objective);
}

}  // namespace

SolutionReport TwoPass(ElementStream& stream, const Constraints& constraints,
                       const Objective& objective, const RoutineAFactory& routine,
                       FirstPassKind first, SecondPassKind second) {
  const CallMeter meter(*constraints.matroid, objective);
  const FirstPassResult pass = RunFirstPass(stream, constraints, objective, first);
  if (!pass.solved()) return FailedFirstPass(pass, meter);
  SolutionReport report =
      SecondPass(stream, pass.solution, constraints, objective, routine,
                 second == SecondPassKind::kFairStreamingPlus);
  report.stored_elements_peak =
      std::max(report.stored_elements_peak, pass.stored_peak);
  report.oracle_calls = meter.Elapsed();
  return report;
}

SolutionReport FirstPassOnly(ElementStream& stream, const Constraints& constraints,
                             const Objective& objective, FirstPassKind kind) {
  const CallMeter meter(*constraints.matroid, objective);
  const FirstPassResult pass = RunFirstPass(stream, constraints, objective, kind);
  if (!pass.solved()) return FailedFirstPass(pass, meter);
  return Finish(pass.solution, constraints, objective, pass.stored_peak, meter);
}

SolutionReport GreedyFairStreaming(ElementStream& stream,
                                   const Constraints& constraints,
                                   const Objective& objective) {
  const CallMeter meter(*constraints.matroid, objective);
  const FirstPassResult pass = GreedyFairReservoir(stream, constraints, objective);
  if (!pass.solved()) return FailedFirstPass(pass, meter);

  const Matroid& matroid = *constraints.matroid;
  const auto upper = MakeUpperColorMatroid(constraints.color_of, constraints.bounds);
  std::vector<ElementId> chosen = pass.solution;
  auto state = objective.NewState();
  state->Reset(chosen);

  // Lazy greedy: (gain bound, id, version of S the bound was taken at).
  struct Entry {
    double gain;
    ElementId id;
    int version;
  };
  auto after = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(after)> queue(after);
  const std::vector<char> in_core = Mask(chosen, constraints.ground_size());
  for (const auto& reservoir : pass.reservoirs) {
    for (ElementId e : reservoir) {
      if (!in_core[e]) queue.push({state->Gain(e), e, 0});
    }
  }
  int version = 0;
  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (!IndependentWith(matroid, chosen, top.id) ||
        !IndependentWith(*upper, chosen, top.id)) {
      continue;
    }
    if (top.version != version) {
      top.gain = state->Gain(top.id);
      top.version = version;
      if (!queue.empty() && after(top, queue.top())) {
        queue.push(top);
        continue;
      }
    }
    chosen.push_back(top.id);
    state->Add(top.id);
    ++version;
  }
  return Finish(std::move(chosen), constraints, objective, pass.stored_peak,
                meter);
}

SolutionReport RandomBase(ElementStream& stream, const Constraints& constraints,
                          const Objective& objective, uint64_t seed) {
  const CallMeter meter(*constraints.matroid, objective);
  const Matroid& matroid = *constraints.matroid;
  std::mt19937_64 rng(seed);
  std::vector<ElementId> members;
  std::vector<uint64_t> keys;
  PeakCounter peak;
  stream.Replay([&](const Element& element) {
    const ElementId e = element.id;
    const uint64_t key = rng();
    if (IndependentWith(matroid, members, e)) {
      members.push_back(e);
      keys.push_back(key);
    } else {
      int lightest = -1;
      for (size_t i = 0; i < members.size(); ++i) {
        if (lightest >= 0 && keys[i] >= keys[lightest]) continue;
        if (IndependentWith(matroid, members, e, members[i])) {
          lightest = static_cast<int>(i);
        }
      }
      if (lightest >= 0 && key > keys[lightest]) {
        members[lightest] = e;
        keys[lightest] = key;
      }
    }
    peak.Observe(static_cast<int>(members.size()));
  });
  return Finish(std::move(members), constraints, objective, peak.peak(), meter);
}

SolutionReport MatroidIntersectionBaseline(ElementStream& stream,
                                           const Constraints& constraints,
                                           const Objective& objective,
                                           const RoutineAFactory& routine) {
  const CallMeter meter(*constraints.matroid, objective);
  const MatroidPtr upper =
      MakeUpperColorMatroid(constraints.color_of, constraints.bounds);
  std::unique_ptr<RoutineA> run = routine(constraints.matroid, upper, objective);
  PeakCounter peak;
  stream.Replay([&](const Element& element) {
    run->Process(element.id);
    peak.Observe(run->stored());
  });
  return Finish(run->Finalize(), constraints, objective, peak.peak(), meter);
}

}  // namespace fairmat
