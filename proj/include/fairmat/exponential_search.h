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

// A single-pass (1/2 - eta)-approximation whose decisions are driven by
// hidden information about an optimal solution OPT = o_1, ..., o_l (in
// stream order): its size, the color of each o_i, the value bucket of
// f(o_i | S) and whether S ∪ {o_{i+1}, ..., o_l} + e is independent.
// ExpEnumerate replaces the hidden information by every possible guess.

#ifndef FAIRMAT_EXPONENTIAL_SEARCH_H_
#define FAIRMAT_EXPONENTIAL_SEARCH_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/objective.h"
#include "fairmat/stream.h"

namespace fairmat {

// floor(max(gain, 0) / width), saturated.
int64_t ThetaBucket(double gain, double width);

class ExpOracles {
 public:
  virtual ~ExpOracles() = default;
  // l = |OPT|.
  virtual int Cardinality() = 0;
  // Color of o_i, i = 1..l.
  virtual ColorId Color(int i) = 0;
  // Bucket of f(o_i | S) for the given bucket width.
  virtual int64_t Theta(int i, std::span<const ElementId> selected,
                        double width) = 0;
  // Whether selected ∪ {o_{i+1}, ..., o_l} + e is independent.
  virtual bool Matroid(int i, std::span<const ElementId> selected,
                       ElementId e) = 0;
};

// Answers from a known optimal solution and records every answer.
class TruthfulOracles : public ExpOracles {
 public:
  // `opt` is sorted by stream position (element id) internally.
  TruthfulOracles(const Constraints& constraints, const Objective& objective,
                  std::vector<ElementId> opt);
  int Cardinality() override;
  ColorId Color(int i) override;
  int64_t Theta(int i, std::span<const ElementId> selected, double width) override;
  bool Matroid(int i, std::span<const ElementId> selected, ElementId e) override;

  const std::vector<int64_t>& transcript() const { return transcript_; }
  const std::vector<ElementId>& opt() const { return opt_; }

 private:
  const Constraints& constraints_;
  const Objective& objective_;
  std::vector<ElementId> opt_;
  std::vector<int64_t> transcript_;
};

struct TranscriptExhausted : std::runtime_error {
  TranscriptExhausted() : std::runtime_error("transcript exhausted") {}
};

// Replays a recorded answer sequence; throws TranscriptExhausted when it
// runs out.
class TranscriptOracles : public ExpOracles {
 public:
  explicit TranscriptOracles(std::vector<int64_t> transcript)
      : transcript_(std::move(transcript)) {}
  int Cardinality() override { return static_cast<int>(Next()); }
  ColorId Color(int) override { return static_cast<ColorId>(Next()); }
  int64_t Theta(int, std::span<const ElementId>, double) override { return Next(); }
  bool Matroid(int, std::span<const ElementId>, ElementId) override {
    return Next() != 0;
  }

 private:
  int64_t Next();

  std::vector<int64_t> transcript_;
  size_t cursor_ = 0;
};

struct ExpTrace {
  struct Rejection {
    int iteration;  // i
    ElementId element;
  };
  // Elements dropped by the S ∪ T + e precheck.
  std::vector<Rejection> precheck_rejections;
  int matroid_queries = 0;
};

struct ExpRunResult {
  bool ok = false;
  // s_1, ..., s_l in selection order.
  std::vector<ElementId> selected;
};

// One copy for a fixed gamma. Elements already in S ∪ T are skipped.
ExpRunResult ExpRun(ElementStream& stream, const Constraints& constraints,
                    const Objective& objective, ExpOracles& oracles,
                    double gamma, double eta, ExpTrace* trace = nullptr);

// (1 - eta)^t for every t with f_min / 2 < (1 - eta)^t <= f_max * k / eta,
// plus one representative below and one above that window, ascending.
// {1} when every singleton value is zero.
std::vector<double> GammaGrid(std::span<const double> singleton_values, int k,
                              double eta);

inline constexpr int kExpMaxRank = 4;
inline constexpr int kExpMaxColors = 3;

// Every guess sequence for every gamma in the grid, explored depth first
// with choices restricted to values some remaining element can realize.
// Returns the best feasible output. Throws std::length_error when the rank
// exceeds kExpMaxRank or the color count exceeds kExpMaxColors.
SolutionReport ExpEnumerate(ElementStream& stream, const Constraints& constraints,
                            const Objective& objective, double eta);

}  // namespace fairmat

#endif  // FAIRMAT_EXPONENTIAL_SEARCH_H_
