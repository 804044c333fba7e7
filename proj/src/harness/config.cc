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

#include "fairmat/harness/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "fairmat/brute_force.h"
#include "fairmat/harness/expression.h"
#include "fairmat/harness/generators.h"
#include "fairmat/matroid.h"

namespace fairmat::harness {
namespace {

std::string Trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

uint64_t ParseU64(const std::string& s) {
  size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size() || s[0] == '-') throw std::invalid_argument(s);
  return v;
}

double ParseReal(const std::string& s) {
  size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  throw std::invalid_argument(s);
}

std::string OneOf(const std::string& s, std::initializer_list<const char*> options) {
  for (const char* o : options) {
    if (s == o) return s;
  }
  throw std::invalid_argument(s);
}

void CheckExpression(const std::string& s) { Expression::Parse(s); }

class Parser {
 public:
  Parser(ExperimentConfig& config, std::string source)
      : config_(config), source_(std::move(source)) {}

  // Applies every line; `defaults` lines never replace keys already set.
  void Apply(const std::string& text, bool defaults) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = Trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) Fail(number, "expected key = value", defaults);
      const std::string key = Trim(line.substr(0, eq));
      const std::string value = Trim(line.substr(eq + 1));
      if (key.empty()) Fail(number, "empty key", defaults);
      if (set_.count(key)) {
        if (defaults) continue;
        Fail(number, "duplicate key '" + key + "'", defaults);
      }
      set_.insert(key);
      try {
        Set(key, value);
      } catch (const ConfigError& e) {
        Fail(number, e.what(), defaults);
      } catch (const ExpressionError& e) {
        Fail(number, "bad expression for '" + key + "': " + e.what(), defaults);
      } catch (const std::exception&) {
        Fail(number, "bad value '" + value + "' for '" + key + "'", defaults);
      }
    }
  }

  bool was_set(const std::string& key) const { return set_.count(key) > 0; }

 private:
  [[noreturn]] void Fail(int line, const std::string& what, bool defaults) const {
    throw ConfigError((defaults ? "generator defaults" : source_) + ":" +
                      std::to_string(line) + ": " + what);
  }

  std::filesystem::path Path(const std::string& value) const {
    std::filesystem::path p(value);
    return p.is_absolute() ? p : config_.base_dir / p;
  }

  static bool Suffix(const std::string& key, const std::string& prefix,
                     std::string* rest) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) {
      return false;
    }
    *rest = key.substr(prefix.size());
    return true;
  }

  void Set(const std::string& key, const std::string& value) {
    ExperimentConfig& c = config_;
    std::string rest;
    if (key == "name") {
      c.name = value;
    } else if (key == "dataset") {
      c.dataset = OneOf(value, {"files", "generated", "bank"});
    } else if (key == "generator") {
      c.generator = value;
      GeneratorDefaults(value);  // rejects unknown kinds
    } else if (key == "gen.seed") {
      c.generator_seed = ParseU64(value);
    } else if (Suffix(key, "gen.", &rest)) {
      c.generator_params[rest] = value;
    } else if (key == "instance") {
      c.instance = Path(value);
    } else if (key == "edges") {
      c.edges = Path(value);
    } else if (key == "undirected") {
      c.undirected = ParseBool(value);
    } else if (key == "features") {
      c.features = Path(value);
    } else if (key == "user") {
      c.user = Path(value);
    } else if (key == "alpha") {
      c.alpha = ParseReal(value);
    } else if (key == "weights") {
      c.weights = Path(value);
    } else if (key == "shared") {
      c.shared = Path(value);
    } else if (key == "unit") {
      c.unit = ParseReal(value);
    } else if (key == "bonus") {
      c.bonus = ParseReal(value);
    } else if (key == "bank_csv") {
      c.bank_csv = Path(value);
    } else if (key == "objective") {
      c.objective = OneOf(value, {"coverage", "exemplar", "recommendation",
                                  "modular", "shared_bonus"});
    } else if (key == "matroid") {
      c.matroid = OneOf(value, {"uniform", "partition", "laminar"});
    } else if (key == "matroid.rank") {
      CheckExpression(value);
      c.matroid_rank = value;
    } else if (key == "blocks") {
      c.blocks = value == "color" ? value : Path(value).string();
    } else if (key == "block_cap") {
      CheckExpression(value);
      c.block_cap = value;
    } else if (Suffix(key, "block_cap.", &rest)) {
      CheckExpression(value);
      c.block_cap_overrides[rest] = value;
    } else if (key == "laminar") {
      c.laminar = Path(value);
    } else if (key == "lower") {
      CheckExpression(value);
      c.lower = value;
    } else if (key == "upper") {
      CheckExpression(value);
      c.upper = value;
    } else if (Suffix(key, "lower.", &rest)) {
      CheckExpression(value);
      c.lower_overrides[rest] = value;
    } else if (Suffix(key, "upper.", &rest)) {
      CheckExpression(value);
      c.upper_overrides[rest] = value;
    } else if (key == "rounding") {
      const std::string r = OneOf(value, {"floor", "ceil", "round"});
      c.rounding = r == "floor" ? Rounding::kFloor
                   : r == "ceil" ? Rounding::kCeil
                                 : Rounding::kRound;
    } else if (key == "k") {
      if (SplitList(value).empty()) throw std::invalid_argument(value);
      c.k = value;
    } else if (key == "algorithms") {
      c.algorithms = SplitList(value);
      for (const auto& a : c.algorithms) {
        const auto& names = AlgorithmNames();
        if (std::find(names.begin(), names.end(), a) == names.end()) {
          throw ConfigError("unknown algorithm '" + a + "'");
        }
      }
    } else if (key == "seeds" || key == "seed") {
      c.seeds.clear();
      for (const auto& item : SplitList(value)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          c.seeds.push_back(ParseU64(item));
          continue;
        }
        const uint64_t a = ParseU64(item.substr(0, colon));
        const uint64_t b = ParseU64(item.substr(colon + 1));
        if (b < a || b - a > 100000) throw std::invalid_argument(item);
        for (uint64_t s = a; s <= b; ++s) c.seeds.push_back(s);
      }
      if (c.seeds.empty()) throw std::invalid_argument(value);
    } else if (key == "routine") {
      c.routine = OneOf(value, {"swap", "exact"});
    } else if (key == "beta") {
      c.beta = ParseReal(value);
      if (!(c.beta > 0)) throw ConfigError("beta must be positive");
    } else if (key == "eta") {
      c.eta = ParseReal(value);
    } else if (key == "replay") {
      c.replay = OneOf(value, {"memory", "file"});
    } else if (key == "shuffle") {
      if (value == "off" || value == "false") {
        c.shuffle = false;
      } else {
        c.shuffle = true;
        c.shuffle_seed = ParseU64(value);
      }
    } else if (key == "timing") {
      c.timing = ParseBool(value);
    } else if (key == "opt") {
      c.opt = OneOf(value, {"auto", "off"}) == "auto";
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  ExperimentConfig& config_;
  std::string source_;
  std::set<std::string> set_;
};

int RoundValue(double v, Rounding mode) {
  switch (mode) {
    case Rounding::kFloor:
      return static_cast<int>(std::floor(v + 1e-9));
    case Rounding::kCeil:
      return static_cast<int>(std::ceil(v - 1e-9));
    case Rounding::kRound:
      return static_cast<int>(std::round(v));
  }
  return 0;
}

double Eval(const std::string& text, const Variables& vars, const std::string& what) {
  try {
    return Expression::Parse(text).Evaluate(vars);
  } catch (const ExpressionError& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::string FindOverride(const std::map<std::string, std::string>& overrides,
                         const std::string& label, const std::string& fallback) {
  auto it = overrides.find(label);
  return it == overrides.end() ? fallback : it->second;
}

std::vector<std::string> UnknownLabels(const std::map<std::string, std::string>& overrides,
                                       const std::vector<std::string>& labels) {
  std::vector<std::string> unknown;
  for (const auto& [label, value] : overrides) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      unknown.push_back(label);
    }
  }
  return unknown;
}

void AttachBlocks(Dataset& d, const ExperimentConfig& config) {
  if (config.blocks.empty()) return;
  if (config.blocks == "color") {
    d.group_of.clear();
    for (const Element& e : d.elements) d.group_of.push_back(e.color - 1);
    d.group_labels = d.color_labels;
    return;
  }
  const std::vector<std::string> raw = ReadKeyed(config.blocks, d, "block");
  if (!config.laminar.empty()) {
    d.laminar = ReadLaminarGroups(config.laminar);
    d.group_labels.clear();
    for (const auto& node : d.laminar) d.group_labels.push_back(node.name);
  } else {
    d.group_labels = OrderedLabels(raw);
  }
  d.group_of.clear();
  for (size_t i = 0; i < raw.size(); ++i) {
    auto it = std::find(d.group_labels.begin(), d.group_labels.end(), raw[i]);
    if (it == d.group_labels.end()) {
      throw ConfigError(config.blocks + ": unknown group '" + raw[i] +
                        "' for id " + d.raw_ids[i]);
    }
    d.group_of.push_back(static_cast<int>(it - d.group_labels.begin()));
  }
}

std::string InferObjective(const ExperimentConfig& c) {
  if (!c.objective.empty()) return c.objective;
  if (!c.weights.empty()) return "modular";
  if (!c.edges.empty()) return "coverage";
  if (!c.shared.empty()) return "shared_bonus";
  if (!c.user.empty()) return "recommendation";
  if (!c.features.empty()) return "exemplar";
  return "";
}

void AttachObjective(Dataset& d, const ExperimentConfig& c) {
  ObjectiveData& o = d.objective;
  const std::string kind = InferObjective(c);
  if (!kind.empty()) o.kind = kind;
  if (o.kind.empty()) throw ConfigError("no objective given");
  o.alpha = c.alpha;
  o.unit = c.unit;
  o.bonus = c.bonus;
  int max_payload = 0;
  for (const Element& e : d.elements) max_payload = std::max(max_payload, e.payload);
  if (!c.edges.empty()) o.adjacency = ReadEdgeList(c.edges, c.undirected);
  if (!c.features.empty()) o.features = ReadFeatures(c.features);
  if (!c.user.empty()) {
    const auto rows = ReadFeatures(c.user);
    if (rows.size() != 1) throw ConfigError(c.user.string() + ": expected one row");
    o.user = rows[0];
  }
  if (!c.weights.empty()) {
    const auto raw = ReadKeyed(c.weights, d, "weight");
    o.weights.assign(max_payload + 1, 0.0);
    for (const Element& e : d.elements) {
      try {
        o.weights[e.payload] = ParseReal(raw[e.id]);
      } catch (const std::exception&) {
        throw ConfigError(c.weights.string() + ": bad weight '" + raw[e.id] +
                          "' for id " + d.raw_ids[e.id]);
      }
    }
  }
  if (!c.shared.empty()) {
    const auto raw = ReadKeyed(c.shared, d, "shared flag");
    o.shared.assign(max_payload + 1, 0);
    for (const Element& e : d.elements) o.shared[e.payload] = raw[e.id] == "1";
  }
  if (o.kind == "recommendation" && o.user.empty()) {
    throw ConfigError("recommendation objective needs a user vector");
  }
}

void CheckConsistency(const ExperimentConfig& c, const std::string& source) {
  auto fail = [&](const std::string& what) {
    throw ConfigError(source + ": " + what);
  };
  if (c.dataset == "generated" && c.generator.empty()) fail("generated dataset needs 'generator'");
  if (c.dataset == "files" && c.instance.empty()) fail("dataset needs 'instance'");
  if (c.dataset == "bank" && c.bank_csv.empty()) fail("bank dataset needs 'bank_csv'");
  if (c.k.empty()) fail("missing 'k'");
  if (c.algorithms.empty()) fail("missing 'algorithms'");
  if (c.matroid == "laminar" && (c.laminar.empty() || c.blocks.empty())) {
    fail("laminar matroid needs 'laminar' groups and 'blocks' membership");
  }
  if (c.replay == "file" && (c.dataset != "files" || c.shuffle)) {
    fail("file replay needs an unshuffled instance file");
  }
  if (!(c.eta > 0.0 && c.eta < 0.5)) fail("eta must lie in (0, 1/2)");
}

}  // namespace

const std::vector<std::string>& AlgorithmNames() {
  static const std::vector<std::string> names = {
      "fair-reservoir",       "two-pass",          "two-pass-plus",
      "greedy-one-pass",      "matroid-intersection", "random",
      "modular-streaming",    "modular-centralized",  "exponential",
      "brute-force"};
  return names;
}

ExperimentConfig ParseConfigText(const std::string& text,
                                 const std::filesystem::path& base_dir,
                                 const std::string& source) {
  ExperimentConfig config;
  config.base_dir = base_dir;
  Parser parser(config, source);
  parser.Apply(text, false);
  if (!parser.was_set("dataset")) {
    if (!config.generator.empty()) config.dataset = "generated";
    if (!config.bank_csv.empty()) config.dataset = "bank";
  }
  if (config.dataset == "generated" && !config.generator.empty()) {
    parser.Apply(GeneratorDefaults(config.generator), true);
  } else if (config.dataset == "bank") {
    parser.Apply(GeneratorDefaults("bank-like"), true);
  }
  if (!parser.was_set("algorithms")) {
    config.algorithms = {"two-pass", "greedy-one-pass", "matroid-intersection", "random"};
  }
  CheckConsistency(config, source);
  return config;
}

ExperimentConfig ParseConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::stringstream text;
  text << in.rdbuf();
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  return ParseConfigText(text.str(), dir, path.string());
}

Dataset LoadDataset(const ExperimentConfig& config) {
  Dataset d;
  if (config.dataset == "generated") {
    d = Generate(config.generator, config.generator_params, config.generator_seed);
  } else if (config.dataset == "bank") {
    d = ReadBankCsv(config.bank_csv);
  } else {
    d = ReadInstanceCsv(config.instance);
  }
  if (!config.name.empty()) d.name = config.name;
  AttachObjective(d, config);
  AttachBlocks(d, config);
  if (config.shuffle) Shuffle(d, config.shuffle_seed);
  return d;
}

std::vector<int> ResolveKs(const ExperimentConfig& config, const Dataset& dataset) {
  const Variables vars = {{"n", static_cast<double>(dataset.size())},
                          {"C", static_cast<double>(dataset.num_colors())}};
  std::vector<int> ks;
  for (const auto& item : SplitList(config.k)) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(item);
    while (std::getline(in, part, ':')) parts.push_back(Trim(part));
    if (parts.size() == 1) {
      ks.push_back(static_cast<int>(std::lround(Eval(item, vars, "k"))));
    } else if (parts.size() == 3) {
      const int a = static_cast<int>(std::lround(Eval(parts[0], vars, "k")));
      const int b = static_cast<int>(std::lround(Eval(parts[1], vars, "k")));
      const int step = static_cast<int>(std::lround(Eval(parts[2], vars, "k")));
      if (step <= 0) throw ConfigError("k range step must be positive");
      for (int k = a; k <= b; k += step) ks.push_back(k);
    } else {
      throw ConfigError("k: expected a list or a:b:step, got '" + item + "'");
    }
  }
  for (int k : ks) {
    if (k < 1) throw ConfigError("k must be positive");
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

Constraints BuildConstraints(const Dataset& dataset, const ExperimentConfig& config,
                             int k) {
  const int n = dataset.size();
  const int colors = dataset.num_colors();
  const std::string at = "k=" + std::to_string(k) + ": ";
  auto vars_for = [&](int group_size) {
    return Variables{{"k", static_cast<double>(k)},
                     {"n", static_cast<double>(n)},
                     {"C", static_cast<double>(colors)},
                     {"n_g", static_cast<double>(group_size)},
                     {"share", n > 0 ? static_cast<double>(group_size) / n : 0.0}};
  };
  auto value = [&](const std::string& expr, int group_size, const std::string& what) {
    const int v = RoundValue(Eval(expr, vars_for(group_size), at + what), config.rounding);
    if (v < 0) throw ConfigError(at + what + " is negative");
    return v;
  };

  for (const auto& label : UnknownLabels(config.lower_overrides, dataset.color_labels)) {
    throw ConfigError("lower." + label + ": no such color");
  }
  for (const auto& label : UnknownLabels(config.upper_overrides, dataset.color_labels)) {
    throw ConfigError("upper." + label + ": no such color");
  }
  std::vector<int> color_size(colors, 0);
  for (const Element& e : dataset.elements) ++color_size[e.color - 1];
  std::vector<int> lower(colors);
  std::vector<int> upper(colors);
  for (int c = 0; c < colors; ++c) {
    const std::string& label = dataset.color_labels[c];
    lower[c] = value(FindOverride(config.lower_overrides, label, config.lower),
                     color_size[c], "lower bound of color " + label);
    upper[c] = value(FindOverride(config.upper_overrides, label, config.upper),
                     color_size[c], "upper bound of color " + label);
    if (lower[c] > upper[c]) {
      throw ConfigError(at + "color " + label + " has lower bound " +
                        std::to_string(lower[c]) + " > upper bound " +
                        std::to_string(upper[c]));
    }
  }

  Constraints constraints;
  constraints.bounds = FairnessBounds(lower, upper);
  constraints.color_of = ColorsOf(dataset.elements);
  if (config.matroid == "uniform") {
    constraints.matroid = std::make_shared<UniformMatroid>(
        n, value(config.matroid_rank, n, "matroid rank"));
  } else if (config.matroid == "partition") {
    if (dataset.group_of.empty()) {
      throw ConfigError("partition matroid needs 'blocks'");
    }
    for (const auto& label : UnknownLabels(config.block_cap_overrides, dataset.group_labels)) {
      throw ConfigError("block_cap." + label + ": no such block");
    }
    const int blocks = static_cast<int>(dataset.group_labels.size());
    std::vector<int> block_size(blocks, 0);
    for (int g : dataset.group_of) ++block_size[g];
    std::vector<int> caps(blocks);
    for (int b = 0; b < blocks; ++b) {
      const std::string& label = dataset.group_labels[b];
      caps[b] = value(FindOverride(config.block_cap_overrides, label, config.block_cap),
                      block_size[b], "cap of block " + label);
    }
    constraints.matroid = std::make_shared<PartitionMatroid>(dataset.group_of, caps);
  } else {
    const auto& nodes = dataset.laminar;
    std::vector<LaminarGroup> groups(nodes.size());
    for (ElementId e = 0; e < n; ++e) {
      for (int g = dataset.group_of[e]; g >= 0; g = nodes[g].parent) {
        groups[g].members.push_back(e);
      }
    }
    for (size_t g = 0; g < nodes.size(); ++g) {
      const std::string expr =
          FindOverride(config.block_cap_overrides, nodes[g].name, nodes[g].cap);
      groups[g].cap = value(expr, static_cast<int>(groups[g].members.size()),
                            "cap of group " + nodes[g].name);
    }
    constraints.matroid = std::make_shared<LaminarMatroid>(n, std::move(groups));
  }
  constraints.Validate();
  return constraints;
}

Instance BuildInstance(const Dataset& dataset, const ExperimentConfig& config, int k) {
  Instance instance;
  instance.elements = dataset.elements;
  instance.constraints = BuildConstraints(dataset, config, k);
  instance.objective = MakeObjective(dataset.objective, dataset.elements);
  instance.Validate();
  return instance;
}

std::string ValidateConfig(const ExperimentConfig& config) {
  const Dataset dataset = LoadDataset(config);
  std::ostringstream report;
  report << config.name << ": " << dataset.size() << " elements, "
         << dataset.num_colors() << " colors, objective " << dataset.objective.kind
         << ", matroid " << config.matroid << "\n";
  for (int k : ResolveKs(config, dataset)) {
    const Instance instance = BuildInstance(dataset, config, k);
    const std::vector<ElementId> ids = instance.Ids();
    const bool feasible = FeasibleExistsViaReservoirs(ids, instance.constraints);
    report << "  k=" << k << " lower_sum=" << instance.constraints.bounds.lower_sum()
           << " upper_sum=" << instance.constraints.bounds.upper_sum()
           << (feasible ? " feasible" : " infeasible") << "\n";
  }
  return report.str();
}

}  // namespace fairmat::harness
