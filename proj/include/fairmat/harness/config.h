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

// Experiment configuration: `key = value` lines, '#' comments.
//
// Paths are resolved against the directory of the config file. Bound and
// cap values are expressions over k, n, C, n_g (size of the color or
// group) and share (n_g / n).

#ifndef FAIRMAT_HARNESS_CONFIG_H_
#define FAIRMAT_HARNESS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/harness/dataset.h"

namespace fairmat::harness {

enum class Rounding { kFloor, kCeil, kRound };

struct ExperimentConfig {
  std::string name = "experiment";
  std::filesystem::path base_dir = ".";

  std::string dataset = "files";  // files | generated | bank
  std::string generator;
  std::map<std::string, std::string> generator_params;
  uint64_t generator_seed = 1;
  std::filesystem::path instance;
  std::filesystem::path edges;
  bool undirected = true;
  std::filesystem::path features;
  std::filesystem::path user;
  double alpha = 0.85;
  std::filesystem::path weights;
  std::filesystem::path shared;
  double unit = 1.0;
  double bonus = 1.01;
  std::filesystem::path bank_csv;
  std::string objective;

  std::string matroid = "uniform";  // uniform | partition | laminar
  std::string matroid_rank = "k";
  std::string blocks;  // path, or "color"
  std::string block_cap = "k";
  std::map<std::string, std::string> block_cap_overrides;
  std::filesystem::path laminar;

  std::string lower = "0";
  std::string upper = "k";
  std::map<std::string, std::string> lower_overrides;
  std::map<std::string, std::string> upper_overrides;
  Rounding rounding = Rounding::kFloor;

  // Comma list of expressions over n and C, or a:b:step.
  std::string k;
  std::vector<std::string> algorithms;
  std::vector<uint64_t> seeds = {1};
  std::string routine = "swap";  // swap | exact
  double beta = 1.0;
  double eta = 0.1;
  std::string replay = "memory";  // memory | file
  bool shuffle = false;
  uint64_t shuffle_seed = 0;
  bool opt = true;  // brute-force OPT column for n <= kOptMaxGround
  bool timing = true;  // wall_ms column; off writes 0
};

inline constexpr int kOptMaxGround = 12;

// Algorithm names accepted in `algorithms` and by --algorithm.
const std::vector<std::string>& AlgorithmNames();

// Throws ConfigError naming the line on any problem.
ExperimentConfig ParseConfigText(const std::string& text,
                                 const std::filesystem::path& base_dir,
                                 const std::string& source = "config");
ExperimentConfig ParseConfig(const std::filesystem::path& path);

// Loads the dataset named by the config and attaches side files.
Dataset LoadDataset(const ExperimentConfig& config);

// The k sweep, ascending and deduplicated.
std::vector<int> ResolveKs(const ExperimentConfig& config, const Dataset& dataset);

// Matroid and bounds for one k. Throws ConfigError when a bound rule
// yields lower > upper.
Constraints BuildConstraints(const Dataset& dataset,
                             const ExperimentConfig& config, int k);

Instance BuildInstance(const Dataset& dataset, const ExperimentConfig& config,
                       int k);

// Loads everything and builds every instance; returns a short report.
std::string ValidateConfig(const ExperimentConfig& config);

}  // namespace fairmat::harness

#endif  // FAIRMAT_HARNESS_CONFIG_H_
