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

// Raw experiment data: elements in stream order plus everything needed to
// build objectives and matroids for any k. File readers live here too.

#ifndef FAIRMAT_HARNESS_DATASET_H_
#define FAIRMAT_HARNESS_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fairmat/core.h"
#include "fairmat/objective.h"
#include "fairmat/stream.h"

namespace fairmat::harness {

// Parse and configuration failures. The message names file and line.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objective data keyed by payload (row, node id or original index).
struct ObjectiveData {
  std::string kind;  // coverage | exemplar | recommendation | modular | shared_bonus
  std::vector<std::vector<int>> adjacency;  // coverage, by node id
  std::vector<std::vector<double>> features;  // exemplar / recommendation rows
  std::vector<double> user;
  double alpha = 0.85;
  std::vector<double> weights;  // modular
  std::vector<char> shared;     // shared_bonus
  double unit = 1.0;
  double bonus = 1.01;
};

ObjectivePtr MakeObjective(const ObjectiveData& data,
                           std::span<const Element> elements);

struct LaminarNode {
  std::string name;
  int parent = -1;
  std::string cap;  // expression
};

struct Dataset {
  std::string name;
  std::vector<Element> elements;  // ids 0..n-1 in stream order
  std::vector<std::string> raw_ids;
  // color_labels[c - 1] is the raw label behind color c.
  std::vector<std::string> color_labels;
  // Block (partition) or leaf group (laminar) of every element; may be empty.
  std::vector<int> group_of;
  std::vector<std::string> group_labels;
  std::vector<LaminarNode> laminar;  // empty unless laminar groups were given
  ObjectiveData objective;
  // Set when elements came from an instance file; enables file replay.
  std::filesystem::path instance_path;

  int size() const { return static_cast<int>(elements.size()); }
  int num_colors() const { return static_cast<int>(color_labels.size()); }
};

// Distinct labels in sorted order, numeric when every label is an integer.
std::vector<std::string> OrderedLabels(std::vector<std::string> labels);

// Reads `id,color,payload...` records. An optional first line starting with
// "id" is a header. Color labels are mapped to 1..C in sorted order
// (numeric when every label is an integer). A missing payload defaults to
// the record index.
Dataset ReadInstanceCsv(const std::filesystem::path& path);

// `u v` per line; '#' starts a comment. Adds the arc u -> v (and v -> u
// when `undirected`). Returns the adjacency indexed by node id.
std::vector<std::vector<int>> ReadEdgeList(const std::filesystem::path& path,
                                           bool undirected);

// Dense numeric CSV, optional non-numeric header row.
std::vector<std::vector<double>> ReadFeatures(const std::filesystem::path& path);

// `id,value` rows keyed by raw element id; returns values in element order.
std::vector<std::string> ReadKeyed(const std::filesystem::path& path,
                                   const Dataset& dataset,
                                   const std::string& what);

// `name,parent,cap` rows; parent empty for roots.
std::vector<LaminarNode> ReadLaminarGroups(const std::filesystem::path& path);

// The UCI bank marketing CSV (';' separated, quoted header). Keeps seven
// numeric features; colors are age groups and blocks balance groups.
Dataset ReadBankCsv(const std::filesystem::path& path);

// Writes the instance and its side files into `dir`; returns the file
// names written, instance first.
std::vector<std::string> WriteDataset(const Dataset& dataset,
                                      const std::filesystem::path& dir);

// Writes `id,color,payload` rows.
void WriteInstanceCsv(const Dataset& dataset, std::ostream& out);

// Seeded permutation of the stream order. Ids are renumbered.
void Shuffle(Dataset& dataset, uint64_t seed);

// Re-reads the instance file on every pass and checks that each record
// matches the in-memory element.
class FileStream : public ElementStream {
 public:
  explicit FileStream(const Dataset& dataset) : dataset_(dataset) {}

 protected:
  void Run(const Visitor& visit) override;

 private:
  const Dataset& dataset_;
};

}  // namespace fairmat::harness

#endif  // FAIRMAT_HARNESS_DATASET_H_
