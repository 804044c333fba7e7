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

#include "fairmat/harness/generators.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace fairmat::harness {
namespace {

class Params {
 public:
  Params(const std::string& kind, const GeneratorParams& params,
         std::set<std::string> known)
      : kind_(kind), params_(params) {
    for (const auto& [key, value] : params_) {
      if (!known.count(key)) {
        throw ConfigError(kind + ": unknown parameter '" + key + "'");
      }
    }
  }

  int Int(const std::string& key, int fallback, int min_value) const {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      size_t used = 0;
      const int v = std::stoi(it->second, &used);
      if (used == it->second.size() && v >= min_value) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(kind_ + ": parameter '" + key + "' must be an integer >= " +
                      std::to_string(min_value));
  }

  double Real(const std::string& key, double fallback) const {
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used == it->second.size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(kind_ + ": parameter '" + key + "' must be a number");
  }

  std::string String(const std::string& key, const std::string& fallback) const {
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

 private:
  std::string kind_;
  const GeneratorParams& params_;
};

std::vector<std::string> NumberLabels(int count) {
  std::vector<std::string> labels;
  for (int i = 1; i <= count; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void AddElement(Dataset& d, ColorId color) {
  const int id = d.size();
  d.elements.push_back({id, color, id});
  d.raw_ids.push_back(std::to_string(id + 1));
}

Dataset RandomCoverage(const GeneratorParams& raw, uint64_t seed) {
  Params p("random-coverage", raw, {"nodes", "degree", "colors"});
  const int nodes = p.Int("nodes", 40, 1);
  const int degree = p.Int("degree", 4, 0);
  const int colors = p.Int("colors", 3, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_node(0, nodes - 1);
  std::uniform_int_distribution<int> pick_color(1, colors);
  Dataset d;
  d.name = "random-coverage";
  d.color_labels = NumberLabels(colors);
  d.objective.kind = "coverage";
  d.objective.adjacency.resize(nodes);
  for (int v = 0; v < nodes; ++v) {
    AddElement(d, pick_color(rng));
    std::set<int> out = {v};
    for (int j = 0; j < degree; ++j) out.insert(pick_node(rng));
    d.objective.adjacency[v].assign(out.begin(), out.end());
  }
  return d;
}

Dataset Modular(const GeneratorParams& raw, uint64_t seed) {
  Params p("modular", raw, {"n", "colors", "blocks", "min", "max"});
  const int n = p.Int("n", 10, 1);
  const int colors = p.Int("colors", 3, 1);
  const int blocks = p.Int("blocks", 3, 1);
  const int lo = p.Int("min", -5, -1000000);
  const int hi = p.Int("max", 10, lo);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_color(1, colors);
  std::uniform_int_distribution<int> pick_block(0, blocks - 1);
  std::uniform_int_distribution<int> pick_weight(lo, hi);
  Dataset d;
  d.name = "modular";
  d.color_labels = NumberLabels(colors);
  d.group_labels = NumberLabels(blocks);
  d.objective.kind = "modular";
  for (int i = 0; i < n; ++i) {
    AddElement(d, pick_color(rng));
    d.group_of.push_back(pick_block(rng));
    d.objective.weights.push_back(pick_weight(rng));
  }
  return d;
}

// Per color c: e_c (plain) then e'_c (shared), one block per color.
Dataset AdversarialC3(const GeneratorParams& raw, uint64_t) {
  Params p("adversarial-C3", raw, {"colors", "unit", "bonus"});
  const int colors = p.Int("colors", 10, 1);
  Dataset d;
  d.name = "adversarial-C3";
  d.color_labels = NumberLabels(colors);
  d.objective.kind = "shared_bonus";
  d.objective.unit = p.Real("unit", 1.0);
  d.objective.bonus = p.Real("bonus", 1.01);
  for (int c = 1; c <= colors; ++c) {
    for (int shared = 0; shared < 2; ++shared) {
      AddElement(d, c);
      d.objective.shared.push_back(static_cast<char>(shared));
    }
  }
  return d;
}

// Bipartite edges as elements: color = right vertex, block = left vertex.
Dataset MatchingGadget(const GeneratorParams& raw, uint64_t seed) {
  Params p("matching-gadget", raw, {"left", "right", "p", "mode"});
  const int right = p.Int("right", 3, 1);
  const int left = p.Int("left", right, 1);
  const double prob = p.Real("p", 0.5);
  const std::string mode = p.String("mode", "perfect");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;  // (left, right)
  std::set<std::pair<int, int>> seen;
  auto add = [&](int l, int r) {
    if (seen.insert({l, r}).second) edges.push_back({l, r});
  };
  if (mode == "perfect") {
    if (left < right) throw ConfigError("matching-gadget: perfect needs left >= right");
    std::vector<int> perm(left);
    for (int i = 0; i < left; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int r = 0; r < right; ++r) add(perm[r], r);
  } else if (mode == "hall-violation") {
    // Every right vertex sees only left vertex 0.
    if (right < 2) throw ConfigError("matching-gadget: hall-violation needs right >= 2");
    for (int r = 0; r < right; ++r) add(0, r);
  } else if (mode != "random") {
    throw ConfigError("matching-gadget: mode must be perfect, random or hall-violation");
  }
  if (mode != "hall-violation") {
    std::bernoulli_distribution coin(prob);
    for (int l = 0; l < left; ++l) {
      for (int r = 0; r < right; ++r) {
        if (coin(rng)) add(l, r);
      }
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  Dataset d;
  d.name = "matching-gadget";
  d.color_labels = NumberLabels(right);
  d.group_labels = NumberLabels(left);
  d.objective.kind = "modular";
  for (auto [l, r] : edges) {
    AddElement(d, r + 1);
    d.group_of.push_back(l);
    d.objective.weights.push_back(1.0);
  }
  return d;
}

// Seven numeric bank-marketing features with the marginals of the public
// dataset; colors by age decade, blocks by balance.
Dataset BankLike(const GeneratorParams& raw, uint64_t seed) {
  Params p("bank-like", raw, {"rows"});
  const int rows = p.Int("rows", 4521, 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> age_core(40.0, 10.0);
  std::lognormal_distribution<double> balance_pos(6.3, 1.4);
  std::lognormal_distribution<double> duration(5.2, 0.8);
  std::geometric_distribution<int> campaign(1.0 / 2.8);
  std::geometric_distribution<int> previous(0.4);
  std::uniform_int_distribution<int> day(1, 31);
  std::uniform_int_distribution<int> pdays_value(1, 850);
  Dataset d;
  d.name = "bank-like";
  d.objective.kind = "exemplar";
  d.color_labels = {"0-29", "30-39", "40-49", "50-59", "60-69", "70+"};
  d.group_labels = {"negative", "0-1999", "2000-3999", "4000-5999", "6000+"};
  for (int i = 0; i < rows; ++i) {
    double age = unit(rng) < 0.97 ? age_core(rng) : 60.0 + 27.0 * unit(rng);
    age = std::clamp(std::round(age), 19.0, 87.0);
    double balance;
    if (unit(rng) < 0.08) {
      const double u = unit(rng);
      balance = -std::round(u * u * u * 3313.0);
    } else {
      balance = std::round(std::min(balance_pos(rng), 71188.0));
    }
    const int pdays = unit(rng) < 0.82 ? -1 : pdays_value(rng);
    const std::vector<double> row = {
        age,
        balance,
        static_cast<double>(day(rng)),
        std::round(duration(rng)),
        static_cast<double>(1 + campaign(rng)),
        static_cast<double>(pdays),
        static_cast<double>(pdays < 0 ? 0 : 1 + previous(rng))};
    const int a = static_cast<int>(age);
    AddElement(d, a < 30 ? 1 : std::min(6, (a - 30) / 10 + 2));
    d.group_of.push_back(balance < 0 ? 0
                                     : std::min(4, static_cast<int>(balance / 2000) + 1));
    d.objective.features.push_back(row);
  }
  return d;
}

}  // namespace

const std::vector<std::string>& GeneratorKinds() {
  static const std::vector<std::string> kinds = {
      "random-coverage", "modular", "adversarial-C3", "matching-gadget", "bank-like"};
  return kinds;
}

Dataset Generate(const std::string& kind, const GeneratorParams& params,
                 uint64_t seed) {
  if (kind == "random-coverage") return RandomCoverage(params, seed);
  if (kind == "modular") return Modular(params, seed);
  if (kind == "adversarial-C3") return AdversarialC3(params, seed);
  if (kind == "matching-gadget") return MatchingGadget(params, seed);
  if (kind == "bank-like") return BankLike(params, seed);
  throw ConfigError("unknown generator '" + kind + "'");
}

std::string GeneratorDefaults(const std::string& kind) {
  if (kind == "random-coverage") {
    return "objective = coverage\n"
           "matroid = uniform\n"
           "matroid.rank = k\n"
           "lower = floor(0.9 * share * k)\n"
           "upper = ceil(1.5 * share * k)\n"
           "k = 5, 10\n";
  }
  if (kind == "modular") {
    return "objective = modular\n"
           "matroid = partition\n"
           "block_cap = ceil(k / 2)\n"
           "lower = floor(0.5 * share * k)\n"
           "upper = ceil(1.5 * share * k)\n"
           "k = 4\n";
  }
  if (kind == "adversarial-C3") {
    return "objective = shared_bonus\n"
           "matroid = partition\n"
           "blocks = color\n"
           "block_cap = 1\n"
           "lower = 1\n"
           "upper = 1\n"
           "k = C\n";
  }
  if (kind == "matching-gadget") {
    return "objective = modular\n"
           "matroid = partition\n"
           "block_cap = 1\n"
           "lower = 1\n"
           "upper = 1\n"
           "k = C\n";
  }
  if (kind == "bank-like") {
    return "objective = exemplar\n"
           "matroid = partition\n"
           "block_cap = floor(k / 5)\n"
           "lower = 0.1 * k + 2\n"
           "upper = 0.4 * k\n"
           "k = 25:60:5\n";
  }
  throw ConfigError("unknown generator '" + kind + "'");
}

}  // namespace fairmat::harness
