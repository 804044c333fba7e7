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

#include "fairmat/matroid_intersection.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace fairmat {
namespace {

// Exchange graph over positions 0..m-1 of the (sorted) ground set.
class ExchangeGraph {
 public:
  ExchangeGraph(const Matroid& first, const Matroid& second,
                std::vector<ElementId> ground)
      : first_(first), second_(second), ground_(std::move(ground)),
        in_set_(ground_.size(), 0) {}

  int size() const { return static_cast<int>(ground_.size()); }
  bool in_set(int p) const { return in_set_[p]; }
  ElementId element(int p) const { return ground_[p]; }

  std::vector<ElementId> Current() const {
    std::vector<ElementId> out;
    for (int p = 0; p < size(); ++p) {
      if (in_set_[p]) out.push_back(ground_[p]);
    }
    return out;
  }

  // Rebuilds sources, sinks and arcs for the current set.
  void Build() {
    const int m = size();
    const std::vector<ElementId> current = Current();
    sources_.assign(m, 0);
    sinks_.assign(m, 0);
    out_.assign(m, {});
    std::vector<ElementId> buffer;
    for (int x = 0; x < m; ++x) {
      if (in_set_[x]) continue;
      buffer = current;
      buffer.push_back(ground_[x]);
      sources_[x] = first_.IsIndependent(buffer);
      sinks_[x] = second_.IsIndependent(buffer);
    }
    for (int y = 0; y < m; ++y) {
      if (!in_set_[y]) continue;
      for (int x = 0; x < m; ++x) {
        if (in_set_[x]) continue;
        buffer.clear();
        for (ElementId e : current) {
          if (e != ground_[y]) buffer.push_back(e);
        }
        buffer.push_back(ground_[x]);
        if (first_.IsIndependent(buffer)) out_[y].push_back(x);
        if (second_.IsIndependent(buffer)) out_[x].push_back(y);
      }
    }
    for (auto& arcs : out_) std::sort(arcs.begin(), arcs.end());
  }

  bool source(int p) const { return sources_[p]; }
  bool sink(int p) const { return sinks_[p]; }
  const std::vector<int>& out(int p) const { return out_[p]; }

  // Adds, in ascending order, every element that keeps the set independent
  // in both matroids.
  void GreedyFill() {
    std::vector<ElementId> current = Current();
    for (int x = 0; x < size(); ++x) {
      if (in_set_[x]) continue;
      current.push_back(ground_[x]);
      if (first_.IsIndependent(current) && second_.IsIndependent(current)) {
        in_set_[x] = 1;
      } else {
        current.pop_back();
      }
    }
  }

  void Flip(const std::vector<int>& path) {
    for (int p : path) in_set_[p] = !in_set_[p];
  }

 private:
  const Matroid& first_;
  const Matroid& second_;
  std::vector<ElementId> ground_;
  std::vector<char> in_set_;
  std::vector<char> sources_;
  std::vector<char> sinks_;
  std::vector<std::vector<int>> out_;
};

std::vector<ElementId> SortedGround(std::span<const ElementId> ground,
                                    int ground_size) {
  CheckElementSet(ground, ground_size);
  std::vector<ElementId> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

void CheckSameGround(const Matroid& first, const Matroid& second) {
  if (first.ground_size() != second.ground_size()) {
    throw std::invalid_argument("matroid intersection: ground sizes differ");
  }
}

}  // namespace

std::vector<ElementId> MaxCardinalityCommon(const Matroid& first,
                                            const Matroid& second,
                                            std::span<const ElementId> ground,
                                            IntersectionStats* stats) {
  CheckSameGround(first, second);
  ExchangeGraph graph(first, second, SortedGround(ground, first.ground_size()));
  const int m = graph.size();
  graph.GreedyFill();
  while (true) {
    graph.Build();
    std::vector<int> parent(m, -2);
    std::deque<int> queue;
    for (int p = 0; p < m; ++p) {
      if (!graph.in_set(p) && graph.source(p)) {
        parent[p] = -1;
        queue.push_back(p);
      }
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int u = queue.front();
      queue.pop_front();
      if (!graph.in_set(u) && graph.sink(u)) {
        end = u;
        break;
      }
      for (int v : graph.out(u)) {
        if (parent[v] != -2) continue;
        parent[v] = u;
        queue.push_back(v);
      }
    }
    if (end < 0) break;
    std::vector<int> path;
    for (int p = end; p >= 0; p = parent[p]) path.push_back(p);
    graph.Flip(path);
    if (stats != nullptr) ++stats->augmentations;
  }
  return graph.Current();
}

std::vector<ElementId> MaxWeightCommon(const Matroid& first,
                                       const Matroid& second,
                                       std::span<const ElementId> ground,
                                       std::span<const double> weights,
                                       IntersectionStats* stats) {
  CheckSameGround(first, second);
  if (static_cast<int>(weights.size()) < first.ground_size()) {
    throw std::invalid_argument("matroid intersection: missing weights");
  }
  ExchangeGraph graph(first, second, SortedGround(ground, first.ground_size()));
  const int m = graph.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<ElementId> best;
  double best_weight = 0.0;
  double current_weight = 0.0;
  while (true) {
    graph.Build();
    // Vertex lengths: w on the current set, -w off it. Bellman-Ford on
    // (length, arcs) pairs compared lexicographically.
    std::vector<double> length(m, kInf);
    std::vector<int> arcs(m, std::numeric_limits<int>::max());
    std::vector<int> parent(m, -1);
    auto vertex_length = [&](int p) {
      const double w = weights[graph.element(p)];
      return graph.in_set(p) ? w : -w;
    };
    auto better = [](double l1, int a1, double l2, int a2) {
      if (l1 < l2 - kEpsilon) return true;
      if (l1 > l2 + kEpsilon) return false;
      return a1 < a2;
    };
    for (int p = 0; p < m; ++p) {
      if (!graph.in_set(p) && graph.source(p)) {
        length[p] = vertex_length(p);
        arcs[p] = 0;
      }
    }
    for (int round = 0; round < m; ++round) {
      bool changed = false;
      for (int u = 0; u < m; ++u) {
        if (length[u] == kInf) continue;
        for (int v : graph.out(u)) {
          const double l = length[u] + vertex_length(v);
          if (better(l, arcs[u] + 1, length[v], arcs[v])) {
            length[v] = l;
            arcs[v] = arcs[u] + 1;
            parent[v] = u;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int end = -1;
    for (int p = 0; p < m; ++p) {
      if (graph.in_set(p) || !graph.sink(p) || length[p] == kInf) continue;
      if (end < 0 || better(length[p], arcs[p], length[end], arcs[end])) end = p;
    }
    if (end < 0) break;
    std::vector<int> path;
    std::vector<char> seen(m, 0);
    for (int p = end; p >= 0 && !seen[p]; p = parent[p]) {
      seen[p] = 1;
      path.push_back(p);
      if (arcs[p] == 0) break;
    }
    graph.Flip(path);
    current_weight -= length[end];
    if (stats != nullptr) ++stats->augmentations;
    if (current_weight >= best_weight - kEpsilon) {
      best = graph.Current();
      best_weight = std::max(best_weight, current_weight);
    }
  }
  return best;
}

}  // namespace fairmat
