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

// fairmat: run, validate and generate fair streaming experiments.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairmat/harness/config.h"
#include "fairmat/harness/dataset.h"
#include "fairmat/harness/experiment.h"
#include "fairmat/harness/generators.h"

namespace {

using fairmat::harness::ConfigError;
using fairmat::harness::ExperimentConfig;

struct Overrides {
  std::vector<std::string> algorithms;
  std::string weights;
  double eta = 0.0;
  std::string replay;
};

void AddOverrideFlags(CLI::App* app, Overrides& o) {
  app->add_option("--algorithm", o.algorithms, "Algorithm(s) to run")
      ->check(CLI::IsMember(fairmat::harness::AlgorithmNames()))
      ->delimiter(',');
  app->add_option("--weights", o.weights, "Modular weights CSV (id,weight)")
      ->check(CLI::ExistingFile);
  app->add_option("--eta", o.eta, "Exponential search accuracy, in (0, 1/2)");
  app->add_option("--replay", o.replay, "Stream replay: memory or file")
      ->check(CLI::IsMember({"memory", "file"}));
}

ExperimentConfig Load(const std::string& path, const Overrides& o) {
  ExperimentConfig config = fairmat::harness::ParseConfig(path);
  if (!o.algorithms.empty()) config.algorithms = o.algorithms;
  if (!o.weights.empty()) {
    config.weights = std::filesystem::absolute(o.weights);
    config.objective = "modular";
  }
  if (o.eta != 0.0) {
    if (!(o.eta > 0.0 && o.eta < 0.5)) throw ConfigError("--eta must lie in (0, 1/2)");
    config.eta = o.eta;
  }
  if (!o.replay.empty()) {
    config.replay = o.replay;
    if (config.replay == "file" && (config.dataset != "files" || config.shuffle)) {
      throw ConfigError("file replay needs an unshuffled instance file");
    }
  }
  return config;
}

std::string GeneratedConfig(const std::string& kind, const fairmat::harness::Dataset& d,
                            const std::vector<std::string>& files) {
  std::ostringstream out;
  out << "name = " << d.name << "\n"
      << "dataset = files\n"
      << "instance = instance.csv\n";
  std::map<std::string, std::string> side = {{"edges.txt", "edges"},
                                             {"features.csv", "features"},
                                             {"user.csv", "user"},
                                             {"weights.csv", "weights"},
                                             {"shared.csv", "shared"},
                                             {"blocks.csv", "blocks"},
                                             {"groups.csv", "laminar"}};
  for (const auto& file : files) {
    auto it = side.find(file);
    if (it != side.end()) out << it->second << " = " << file << "\n";
  }
  if (d.objective.kind == "shared_bonus") {
    out << "unit = " << d.objective.unit << "\n"
        << "bonus = " << d.objective.bonus << "\n";
  }
  out << fairmat::harness::GeneratorDefaults(kind);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair submodular maximization under matroid constraints in streams"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  Overrides run_overrides;
  CLI::App* run = app.add_subcommand("run", "Run every (algorithm, k, seed) cell");
  run->add_option("--config", config_path, "Experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "RunRecord CSV ('-' for stdout)")->required();
  AddOverrideFlags(run, run_overrides);

  Overrides validate_overrides;
  CLI::App* validate = app.add_subcommand("validate", "Check a config and its data");
  validate->add_option("--config", config_path, "Experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  AddOverrideFlags(validate, validate_overrides);

  std::string kind;
  uint64_t seed = 1;
  std::vector<std::string> params;
  std::string out_dir;
  CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--kind", kind, "Generator")
      ->required()
      ->check(CLI::IsMember(fairmat::harness::GeneratorKinds()));
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--param", params, "Generator parameter key=value");
  gen->add_option("--out-dir", out_dir,
                  "Write instance, side files and config.cfg here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const ExperimentConfig config = Load(config_path, run_overrides);
      const auto rows =
          fairmat::harness::RunExperiment(config, fairmat::harness::ThreadLimit());
      if (out_path == "-") {
        fairmat::harness::WriteRunRecords(rows, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write " + out_path);
        fairmat::harness::WriteRunRecords(rows, out);
      }
      int failures = 0;
      for (const auto& row : rows) failures += row.status == "error";
      std::cerr << rows.size() << " rows";
      if (failures > 0) std::cerr << ", " << failures << " with errors";
      std::cerr << "\n";
    } else if (*validate) {
      const ExperimentConfig config = Load(config_path, validate_overrides);
      std::cout << fairmat::harness::ValidateConfig(config);
    } else if (*gen) {
      fairmat::harness::GeneratorParams generator_params;
      for (const auto& p : params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw ConfigError("--param expects key=value");
        generator_params[p.substr(0, eq)] = p.substr(eq + 1);
      }
      const auto dataset = fairmat::harness::Generate(kind, generator_params, seed);
      if (out_dir.empty()) {
        fairmat::harness::WriteInstanceCsv(dataset, std::cout);
      } else {
        const auto files = fairmat::harness::WriteDataset(dataset, out_dir);
        std::ofstream config(std::filesystem::path(out_dir) / "config.cfg");
        config << GeneratedConfig(kind, dataset, files);
        std::cerr << "wrote " << files.size() + 1 << " files to " << out_dir << "\n";
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
