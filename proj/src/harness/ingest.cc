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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fairmat/harness/dataset.h"

namespace fairmat::harness {
namespace {

std::string Trim(const std::string& s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  std::string out = s.substr(a, b - a);
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

bool ParseInt(const std::string& s, long long* out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, *out);
  return ec == std::errc() && ptr == end && !s.empty();
}

bool ParseDouble(const std::string& s, double* out) {
  if (s.empty()) return false;
  try {
    size_t used = 0;
    *out = std::stod(s, &used);
    return used == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::ifstream Open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

[[noreturn]] void LineError(const std::filesystem::path& path, int line,
                            const std::string& what) {
  throw ConfigError(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool Skippable(const std::string& line) {
  const std::string t = Trim(line);
  return t.empty() || t[0] == '#';
}

struct InstanceRecord {
  std::string id;
  std::string color;
  int payload;
};

}  // namespace

std::vector<std::string> OrderedLabels(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const bool numeric = std::all_of(labels.begin(), labels.end(), [](const auto& l) {
    long long v;
    return ParseInt(l, &v);
  });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](const auto& a, const auto& b) {
      return std::stoll(a) < std::stoll(b);
    });
  }
  return labels;
}

ObjectivePtr MakeObjective(const ObjectiveData& data,
                           std::span<const Element> elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<int> payload(n);
  for (const Element& e : elements) payload[e.id] = e.payload;
  auto check_rows = [&](size_t rows, const std::string& what) {
    for (int p : payload) {
      if (p < 0 || static_cast<size_t>(p) >= rows) {
        throw ConfigError("payload " + std::to_string(p) + " has no " + what);
      }
    }
  };
  if (data.kind == "coverage") {
    std::vector<std::vector<int>> neighbors(n);
    int universe = 0;
    for (const auto& list : data.adjacency) {
      for (int v : list) universe = std::max(universe, v + 1);
    }
    universe = std::max<int>(universe, data.adjacency.size());
    for (int e = 0; e < n; ++e) {
      if (payload[e] < 0) throw ConfigError("negative node id");
      if (static_cast<size_t>(payload[e]) < data.adjacency.size()) {
        neighbors[e] = data.adjacency[payload[e]];
      }
    }
    return std::make_shared<CoverageObjective>(std::move(neighbors), universe);
  }
  if (data.kind == "exemplar") {
    check_rows(data.features.size(), "feature row");
    return std::make_shared<ExemplarObjective>(data.features, payload);
  }
  if (data.kind == "recommendation") {
    check_rows(data.features.size(), "feature row");
    return std::make_shared<RecommendationObjective>(data.features, payload,
                                                     data.user, data.alpha);
  }
  if (data.kind == "modular") {
    check_rows(data.weights.size(), "weight");
    std::vector<double> weights(n);
    for (int e = 0; e < n; ++e) weights[e] = data.weights[payload[e]];
    return std::make_shared<ModularObjective>(std::move(weights));
  }
  if (data.kind == "shared_bonus") {
    check_rows(data.shared.size(), "shared flag");
    std::vector<char> shared(n);
    for (int e = 0; e < n; ++e) shared[e] = data.shared[payload[e]];
    return std::make_shared<SharedBonusObjective>(std::move(shared), data.unit,
                                                  data.bonus);
  }
  throw ConfigError("unknown objective '" + data.kind + "'");
}

Dataset ReadInstanceCsv(const std::filesystem::path& path) {
  std::ifstream in = Open(path);
  std::vector<InstanceRecord> records;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const auto fields = Split(line, ',');
    if (records.empty() && !fields.empty() && fields[0] == "id") continue;
    if (fields.size() < 2) LineError(path, number, "expected id,color[,payload]");
    if (fields[0].empty()) LineError(path, number, "empty id");
    if (fields[1].empty()) LineError(path, number, "empty color");
    InstanceRecord record{fields[0], fields[1], static_cast<int>(records.size())};
    if (fields.size() >= 3 && !fields[2].empty()) {
      long long payload;
      if (!ParseInt(fields[2], &payload) || payload < 0) {
        LineError(path, number, "payload must be a non-negative integer");
      }
      record.payload = static_cast<int>(payload);
    }
    records.push_back(std::move(record));
  }
  Dataset dataset;
  dataset.name = path.stem().string();
  dataset.instance_path = path;
  std::vector<std::string> labels;
  for (const auto& r : records) labels.push_back(r.color);
  dataset.color_labels = OrderedLabels(labels);
  std::map<std::string, int> color_of;
  for (size_t c = 0; c < dataset.color_labels.size(); ++c) {
    color_of[dataset.color_labels[c]] = static_cast<int>(c) + 1;
  }
  std::map<std::string, int> seen;
  for (size_t i = 0; i < records.size(); ++i) {
    if (!seen.emplace(records[i].id, static_cast<int>(i)).second) {
      throw ConfigError(path.string() + ": duplicate id " + records[i].id);
    }
    dataset.elements.push_back(
        {static_cast<ElementId>(i), color_of[records[i].color], records[i].payload});
    dataset.raw_ids.push_back(records[i].id);
  }
  return dataset;
}

std::vector<std::vector<int>> ReadEdgeList(const std::filesystem::path& path,
                                           bool undirected) {
  std::ifstream in = Open(path);
  std::vector<std::vector<int>> adjacency;
  std::string line;
  int number = 0;
  auto add = [&](long long u, long long v) {
    const size_t need = static_cast<size_t>(std::max(u, v)) + 1;
    if (adjacency.size() < need) adjacency.resize(need);
    adjacency[u].push_back(static_cast<int>(v));
  };
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    std::istringstream fields(line);
    std::string a, b, rest;
    long long u, v;
    if (!(fields >> a >> b) || (fields >> rest) || !ParseInt(a, &u) ||
        !ParseInt(b, &v) || u < 0 || v < 0) {
      LineError(path, number, "expected two non-negative node ids");
    }
    add(u, v);
    if (undirected) add(v, u);
  }
  return adjacency;
}

std::vector<std::vector<double>> ReadFeatures(const std::filesystem::path& path) {
  std::ifstream in = Open(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int number = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const auto fields = Split(line, ',');
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!ParseDouble(f, &v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows.empty() && width == 0) {
        width = fields.size();  // header
        continue;
      }
      LineError(path, number, "non-numeric feature");
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      LineError(path, number, "expected " + std::to_string(width) + " features");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> ReadKeyed(const std::filesystem::path& path,
                                   const Dataset& dataset,
                                   const std::string& what) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < dataset.raw_ids.size(); ++i) {
    index[dataset.raw_ids[i]] = static_cast<int>(i);
  }
  std::vector<std::string> values(dataset.size());
  std::vector<char> set(dataset.size(), 0);
  std::ifstream in = Open(path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const auto fields = Split(line, ',');
    if (fields.size() != 2) LineError(path, number, "expected id," + what);
    auto it = index.find(fields[0]);
    if (it == index.end()) {
      if (number == 1) continue;  // header
      LineError(path, number, "unknown id " + fields[0]);
    }
    values[it->second] = fields[1];
    set[it->second] = 1;
  }
  for (int i = 0; i < dataset.size(); ++i) {
    if (!set[i]) {
      throw ConfigError(path.string() + ": no " + what + " for id " +
                        dataset.raw_ids[i]);
    }
  }
  return values;
}

std::vector<LaminarNode> ReadLaminarGroups(const std::filesystem::path& path) {
  std::ifstream in = Open(path);
  std::vector<LaminarNode> nodes;
  std::vector<std::string> parents;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const auto fields = Split(line, ',');
    if (nodes.empty() && !fields.empty() && fields[0] == "name") continue;
    if (fields.size() != 3 || fields[0].empty() || fields[2].empty()) {
      LineError(path, number, "expected name,parent,cap");
    }
    nodes.push_back({fields[0], -1, fields[2]});
    parents.push_back(fields[1]);
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (parents[i].empty()) continue;
    auto it = std::find_if(nodes.begin(), nodes.end(),
                           [&](const LaminarNode& n) { return n.name == parents[i]; });
    if (it == nodes.end()) {
      throw ConfigError(path.string() + ": unknown parent group " + parents[i]);
    }
    nodes[i].parent = static_cast<int>(it - nodes.begin());
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    int steps = 0;
    for (int p = nodes[i].parent; p >= 0; p = nodes[p].parent) {
      if (++steps > static_cast<int>(nodes.size())) {
        throw ConfigError(path.string() + ": group hierarchy has a cycle");
      }
    }
  }
  return nodes;
}

Dataset ReadBankCsv(const std::filesystem::path& path) {
  static const char* kFeatures[] = {"age",      "balance", "day",     "duration",
                                    "campaign", "pdays",   "previous"};
  std::ifstream in = Open(path);
  std::string line;
  int number = 0;
  std::vector<int> columns;
  Dataset dataset;
  dataset.name = "bank";
  dataset.objective.kind = "exemplar";
  dataset.color_labels = {"0-29", "30-39", "40-49", "50-59", "60-69", "70+"};
  dataset.group_labels = {"negative", "0-1999", "2000-3999", "4000-5999", "6000+"};
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const char sep = line.find(';') != std::string::npos ? ';' : ',';
    const auto fields = Split(line, sep);
    if (columns.empty()) {
      for (const char* name : kFeatures) {
        auto it = std::find(fields.begin(), fields.end(), name);
        if (it == fields.end()) {
          LineError(path, number, std::string("missing column ") + name);
        }
        columns.push_back(static_cast<int>(it - fields.begin()));
      }
      continue;
    }
    std::vector<double> row;
    for (int column : columns) {
      double v;
      if (column >= static_cast<int>(fields.size()) || !ParseDouble(fields[column], &v)) {
        LineError(path, number, "non-numeric feature");
      }
      row.push_back(v);
    }
    const int id = dataset.size();
    const int age = static_cast<int>(row[0]);
    const ColorId color = age < 30 ? 1 : std::min(6, (age - 30) / 10 + 2);
    const double balance = row[1];
    const int block = balance < 0 ? 0 : std::min(4, static_cast<int>(balance / 2000) + 1);
    dataset.elements.push_back({id, color, id});
    dataset.raw_ids.push_back(std::to_string(id + 1));
    dataset.group_of.push_back(block);
    dataset.objective.features.push_back(std::move(row));
  }
  return dataset;
}

void WriteInstanceCsv(const Dataset& dataset, std::ostream& out) {
  out << "id,color,payload\n";
  for (const Element& e : dataset.elements) {
    out << dataset.raw_ids[e.id] << ',' << dataset.color_labels[e.color - 1] << ','
        << e.payload << '\n';
  }
}

std::vector<std::string> WriteDataset(const Dataset& dataset,
                                      const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto open = [&](const std::string& name) {
    written.push_back(name);
    std::ofstream out(dir / name);
    if (!out) throw ConfigError("cannot write " + (dir / name).string());
    out.precision(17);
    return out;
  };
  {
    std::ofstream out = open("instance.csv");
    WriteInstanceCsv(dataset, out);
  }
  const ObjectiveData& data = dataset.objective;
  if (data.kind == "coverage") {
    std::ofstream out = open("edges.txt");
    for (size_t u = 0; u < data.adjacency.size(); ++u) {
      for (int v : data.adjacency[u]) out << u << ' ' << v << '\n';
    }
  }
  if (!data.features.empty()) {
    std::ofstream out = open("features.csv");
    for (const auto& row : data.features) {
      for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
      out << '\n';
    }
  }
  if (data.kind == "recommendation") {
    std::ofstream out = open("user.csv");
    for (size_t j = 0; j < data.user.size(); ++j) out << (j ? "," : "") << data.user[j];
    out << '\n';
  }
  // Per-element side files are keyed by raw id and indexed by payload.
  if (data.kind == "modular") {
    std::ofstream out = open("weights.csv");
    for (const Element& e : dataset.elements) {
      out << dataset.raw_ids[e.id] << ',' << data.weights[e.payload] << '\n';
    }
  }
  if (data.kind == "shared_bonus") {
    std::ofstream out = open("shared.csv");
    for (const Element& e : dataset.elements) {
      out << dataset.raw_ids[e.id] << ',' << int(data.shared[e.payload]) << '\n';
    }
  }
  if (!dataset.group_of.empty()) {
    std::ofstream out = open("blocks.csv");
    for (const Element& e : dataset.elements) {
      out << dataset.raw_ids[e.id] << ',' << dataset.group_labels[dataset.group_of[e.id]]
          << '\n';
    }
  }
  if (!dataset.laminar.empty()) {
    std::ofstream out = open("groups.csv");
    for (const LaminarNode& node : dataset.laminar) {
      out << node.name << ','
          << (node.parent >= 0 ? dataset.laminar[node.parent].name : "") << ','
          << node.cap << '\n';
    }
  }
  return written;
}

void Shuffle(Dataset& dataset, uint64_t seed) {
  const int n = dataset.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  Dataset shuffled = dataset;
  for (int i = 0; i < n; ++i) {
    shuffled.elements[i] = dataset.elements[order[i]];
    shuffled.elements[i].id = i;
    shuffled.raw_ids[i] = dataset.raw_ids[order[i]];
    if (!dataset.group_of.empty()) shuffled.group_of[i] = dataset.group_of[order[i]];
  }
  shuffled.instance_path.clear();
  dataset = std::move(shuffled);
}

void FileStream::Run(const Visitor& visit) {
  std::ifstream in = Open(dataset_.instance_path);
  std::string line;
  int number = 0;
  int next = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Skippable(line)) continue;
    const auto fields = Split(line, ',');
    if (next == 0 && !fields.empty() && fields[0] == "id") continue;
    if (next >= dataset_.size() || fields.size() < 2 ||
        fields[0] != dataset_.raw_ids[next] ||
        fields[1] != dataset_.color_labels[dataset_.elements[next].color - 1]) {
      LineError(dataset_.instance_path, number, "instance file changed between passes");
    }
    visit(dataset_.elements[next]);
    ++next;
  }
  if (next != dataset_.size()) {
    throw ConfigError(dataset_.instance_path.string() +
                      ": instance file changed between passes");
  }
}

}  // namespace fairmat::harness
