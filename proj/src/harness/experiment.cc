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

#include "fairmat/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <memory>
#include <stdexcept>
#include <thread>

#include "fairmat/brute_force.h"
#include "fairmat/exponential_search.h"
#include "fairmat/modular_exact.h"
#include "fairmat/routine_a.h"
#include "fairmat/streaming_fair.h"

namespace fairmat::harness {
namespace {

const ModularObjective& RequireModular(const Objective& objective,
                                       const std::string& algorithm) {
  const auto* modular = dynamic_cast<const ModularObjective*>(&objective);
  if (modular == nullptr) {
    throw std::invalid_argument(algorithm + " needs a modular objective");
  }
  return *modular;
}

struct Cell {
  int k;
  uint64_t seed;
  std::string algorithm;
};

RunRecord RunCell(const Dataset& dataset, const ExperimentConfig& config,
                  const Cell& cell) {
  RunRecord row;
  row.algorithm = cell.algorithm;
  row.k = cell.k;
  row.seed = cell.seed;
  try {
    const Instance instance = BuildInstance(dataset, config, cell.k);
    std::unique_ptr<ElementStream> stream;
    if (config.replay == "file") {
      stream = std::make_unique<FileStream>(dataset);
    } else {
      stream = std::make_unique<VectorStream>(instance.elements);
    }
    const auto start = std::chrono::steady_clock::now();
    const SolutionReport report =
        RunAlgorithm(cell.algorithm, instance, *stream, config, cell.seed);
    const auto stop = std::chrono::steady_clock::now();
    row.status = OutcomeName(report.outcome);
    row.value = report.value;
    row.err = report.violation;
    row.per_color = report.per_color;
    row.peak_stored = report.stored_elements_peak;
    row.objective_calls = report.oracle_calls.objective;
    row.independence_calls = report.oracle_calls.independence;
    if (config.timing) {
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    if (!report.solved()) row.error = report.note;
    if (config.opt && instance.size() <= kOptMaxGround) {
      const Instance fresh = BuildInstance(dataset, config, cell.k);
      const BruteForceResult opt =
          BruteForceOpt(fresh.Ids(), fresh.constraints, *fresh.objective);
      if (opt.feasible) row.opt_value = opt.value;
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return row;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

SolutionReport RunAlgorithm(const std::string& algorithm, const Instance& instance,
                            ElementStream& stream, const ExperimentConfig& config,
                            uint64_t seed) {
  const Constraints& c = instance.constraints;
  const Objective& f = *instance.objective;
  const RoutineAFactory routine =
      config.routine == "exact" ? ExactRoutineFactory() : SwapRoutineFactory(config.beta);
  if (algorithm == "fair-reservoir") {
    return FirstPassOnly(stream, c, f, FirstPassKind::kFairReservoir);
  }
  if (algorithm == "two-pass") {
    return TwoPass(stream, c, f, routine, FirstPassKind::kGreedyFairReservoir,
                   SecondPassKind::kFairStreaming);
  }
  if (algorithm == "two-pass-plus") {
    return TwoPass(stream, c, f, routine, FirstPassKind::kGreedyFairReservoir,
                   SecondPassKind::kFairStreamingPlus);
  }
  if (algorithm == "greedy-one-pass") return GreedyFairStreaming(stream, c, f);
  if (algorithm == "matroid-intersection") {
    return MatroidIntersectionBaseline(stream, c, f, routine);
  }
  if (algorithm == "random") return RandomBase(stream, c, f, seed);
  if (algorithm == "modular-streaming") {
    return GreedyFairStreamingM(stream, c, RequireModular(f, algorithm));
  }
  if (algorithm == "modular-centralized") {
    return SolveF3mCentralized(instance.Ids(), c, RequireModular(f, algorithm));
  }
  if (algorithm == "exponential") return ExpEnumerate(stream, c, f, config.eta);
  if (algorithm == "brute-force") {
    if (instance.size() > kBruteForceMaxGround) {
      throw std::invalid_argument("brute-force is limited to " +
                                  std::to_string(kBruteForceMaxGround) + " elements");
    }
    const CallMeter meter(*c.matroid, f);
    const BruteForceResult result = BruteForceOpt(instance.Ids(), c, f);
    SolutionReport report = result.feasible
                                ? Summarize(result.optimum, c, f)
                                : InfeasibleReport("no feasible set");
    report.stored_elements_peak = instance.size();
    report.oracle_calls = meter.Elapsed();
    return report;
  }
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

std::vector<RunRecord> RunExperiment(const ExperimentConfig& config, int threads) {
  const Dataset dataset = LoadDataset(config);
  const std::vector<int> ks = ResolveKs(config, dataset);
  for (int k : ks) BuildConstraints(dataset, config, k);  // surfaces config errors

  std::vector<Cell> cells;
  for (int k : ks) {
    for (uint64_t seed : config.seeds) {
      for (const auto& algorithm : config.algorithms) cells.push_back({k, seed, algorithm});
    }
  }
  std::vector<RunRecord> rows(cells.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cells.size(); i = next++) {
      rows[i] = RunCell(dataset, config, cells[i]);
    }
  };
  const int count = std::clamp<int>(threads, 1, std::max<int>(1, cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void WriteRunRecords(const std::vector<RunRecord>& rows, std::ostream& out) {
  out << kRunRecordSchema << "\n"
      << "algorithm,k,seed,status,value,err,per_color,peak_stored,objective_calls,"
         "independence_calls,wall_ms,opt_value,error\n";
  out << std::setprecision(12);
  for (const RunRecord& r : rows) {
    const bool solved = r.status == "solved";
    out << r.algorithm << ',' << r.k << ',' << r.seed << ',' << r.status << ',';
    if (solved) {
      out << r.value << ',' << r.err << ',';
      for (size_t c = 0; c < r.per_color.size(); ++c) {
        out << (c ? ";" : "") << r.per_color[c];
      }
    } else {
      out << ",,";
    }
    out << ',' << r.peak_stored << ',' << r.objective_calls << ','
        << r.independence_calls << ',' << std::fixed << std::setprecision(3)
        << r.wall_ms << std::defaultfloat << std::setprecision(12) << ',';
    if (r.opt_value) out << *r.opt_value;
    out << ',' << CsvField(r.error) << '\n';
  }
}

int ThreadLimit() {
  if (const char* env = std::getenv("FAIRMAT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace fairmat::harness
