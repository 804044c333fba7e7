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

// Runs (algorithm, k, seed) cells and writes RunRecord CSV.

#ifndef FAIRMAT_HARNESS_EXPERIMENT_H_
#define FAIRMAT_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/harness/config.h"
#include "fairmat/harness/dataset.h"
#include "fairmat/stream.h"

namespace fairmat::harness {

inline constexpr const char* kRunRecordSchema = "# fairmat-runrecord v1";

struct RunRecord {
  std::string algorithm;
  int k = 0;
  uint64_t seed = 0;
  std::string status;  // solved | infeasible | failed | error
  double value = 0.0;
  int err = 0;
  std::vector<int> per_color;
  int peak_stored = 0;
  int64_t objective_calls = 0;
  int64_t independence_calls = 0;
  double wall_ms = 0.0;
  std::optional<double> opt_value;
  std::string error;
};

// Runs one algorithm on `instance`, reading elements from `stream`.
// Throws std::invalid_argument for unknown names or unusable objectives.
SolutionReport RunAlgorithm(const std::string& algorithm, const Instance& instance,
                            ElementStream& stream, const ExperimentConfig& config,
                            uint64_t seed);

// Every cell of the config, ordered by (k, seed, algorithm list order).
// Config problems throw ConfigError before any cell runs; failures inside
// a cell are reported in its row.
std::vector<RunRecord> RunExperiment(const ExperimentConfig& config, int threads);

void WriteRunRecords(const std::vector<RunRecord>& rows, std::ostream& out);

// FAIRMAT_THREADS when set and positive, else the hardware concurrency.
int ThreadLimit();

}  // namespace fairmat::harness

#endif  // FAIRMAT_HARNESS_EXPERIMENT_H_
