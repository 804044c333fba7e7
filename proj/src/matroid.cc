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

#include "fairmat/matroid.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace fairmat {

Matroid::Matroid(int ground_size) : ground_size_(ground_size) {
  if (ground_size < 0) throw std::invalid_argument("negative ground size");
}

bool Matroid::IsIndependent(std::span<const ElementId> set) const {
  CheckElementSet(set, ground_size_);
  calls_.fetch_add(1, std::memory_order_relaxed);
  return Independent(set);
}

int Matroid::ComputeRank() const {
  std::vector<ElementId> current;
  for (ElementId e = 0; e < ground_size_; ++e) {
    current.push_back(e);
    if (!Independent(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

// ---------------------------------------------------------------------------

UniformMatroid::UniformMatroid(int ground_size, int rank)
    : Matroid(ground_size), rank_(rank) {
  if (rank < 0) throw std::invalid_argument("uniform matroid: negative rank");
}

int UniformMatroid::rank_bound() const { return std::min(rank_, ground_size()); }

bool UniformMatroid::Independent(std::span<const ElementId> set) const {
  return static_cast<int>(set.size()) <= rank_;
}

// ---------------------------------------------------------------------------

PartitionMatroid::PartitionMatroid(std::vector<int> block_of,
                                   std::vector<int> caps, std::string kind_name)
    : Matroid(static_cast<int>(block_of.size())),
      block_of_(std::move(block_of)),
      caps_(std::move(caps)),
      kind_name_(std::move(kind_name)) {
  std::vector<int> sizes(caps_.size(), 0);
  for (size_t e = 0; e < block_of_.size(); ++e) {
    const int b = block_of_[e];
    if (b < 0 || b >= num_blocks()) {
      throw std::invalid_argument("partition matroid: element " +
                                  std::to_string(e) + " is not mapped to a block");
    }
    ++sizes[b];
  }
  for (size_t b = 0; b < caps_.size(); ++b) {
    if (caps_[b] < 0) throw std::invalid_argument("partition matroid: negative cap");
    rank_ += std::min(caps_[b], sizes[b]);
  }
}

bool PartitionMatroid::Independent(std::span<const ElementId> set) const {
  if (set.empty()) return true;
  if (set.size() == 1) return caps_[block_of_[set[0]]] >= 1;
  std::vector<int> blocks;
  blocks.reserve(set.size());
  for (ElementId e : set) blocks.push_back(block_of_[e]);
  std::sort(blocks.begin(), blocks.end());
  size_t run_start = 0;
  for (size_t i = 1; i <= blocks.size(); ++i) {
    if (i == blocks.size() || blocks[i] != blocks[run_start]) {
      if (static_cast<int>(i - run_start) > caps_[blocks[run_start]]) return false;
      run_start = i;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LaminarMatroid::LaminarMatroid(int ground_size, std::vector<LaminarGroup> groups)
    : Matroid(ground_size), groups_(std::move(groups)), groups_of_(ground_size) {
  std::vector<std::vector<char>> member(groups_.size(),
                                        std::vector<char>(ground_size, 0));
  for (size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].cap < 0) throw std::invalid_argument("laminar matroid: negative cap");
    CheckElementSet(groups_[g].members, ground_size);
    for (ElementId e : groups_[g].members) {
      member[g][e] = 1;
      groups_of_[e].push_back(static_cast<int>(g));
    }
  }
  for (size_t a = 0; a < groups_.size(); ++a) {
    for (size_t b = a + 1; b < groups_.size(); ++b) {
      int common = 0;
      for (ElementId e : groups_[a].members) common += member[b][e];
      const int size_a = static_cast<int>(groups_[a].members.size());
      const int size_b = static_cast<int>(groups_[b].members.size());
      if (common != 0 && common != size_a && common != size_b) {
        throw std::invalid_argument("laminar matroid: groups " + std::to_string(a) +
                                    " and " + std::to_string(b) +
                                    " are neither nested nor disjoint");
      }
    }
  }
  rank_ = ComputeRank();
}

bool LaminarMatroid::Independent(std::span<const ElementId> set) const {
  std::vector<int> counts(groups_.size(), 0);
  for (ElementId e : set) {
    for (int g : groups_of_[e]) {
      if (++counts[g] > groups_[g].cap) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ContractedMatroid::ContractedMatroid(MatroidPtr base, std::vector<ElementId> pinned)
    : Matroid(base->ground_size()),
      base_(std::move(base)),
      pinned_(std::move(pinned)),
      is_pinned_(ground_size(), 0) {
  if (!base_->IsIndependent(pinned_)) {
    throw std::invalid_argument("contract: pinned set is dependent");
  }
  for (ElementId e : pinned_) is_pinned_[e] = 1;
}

int ContractedMatroid::rank_bound() const {
  return base_->rank_bound() - static_cast<int>(pinned_.size());
}

bool ContractedMatroid::Independent(std::span<const ElementId> set) const {
  std::vector<ElementId> joined(pinned_);
  joined.reserve(pinned_.size() + set.size());
  for (ElementId e : set) {
    if (is_pinned_[e]) return false;
    joined.push_back(e);
  }
  return base_->IsIndependent(joined);
}

// ---------------------------------------------------------------------------

TruncatedMatroid::TruncatedMatroid(MatroidPtr base, int cap)
    : Matroid(base->ground_size()), base_(std::move(base)), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("truncate: negative cap");
}

int TruncatedMatroid::rank_bound() const {
  return std::min(cap_, base_->rank_bound());
}

bool TruncatedMatroid::Independent(std::span<const ElementId> set) const {
  return static_cast<int>(set.size()) <= cap_ && base_->IsIndependent(set);
}

// ---------------------------------------------------------------------------

CloneProjectionMatroid::CloneProjectionMatroid(MatroidPtr base,
                                               std::vector<ElementId> ground)
    : Matroid(2 * static_cast<int>(ground.size())),
      base_(std::move(base)),
      ground_(std::move(ground)) {
  CheckElementSet(ground_, base_->ground_size());
}

int CloneProjectionMatroid::rank_bound() const {
  return GreedyRank(*base_, ground_);
}

std::vector<ElementId> CloneProjectionMatroid::Project(
    std::span<const ElementId> clones) const {
  std::vector<ElementId> out;
  out.reserve(clones.size());
  for (ElementId clone : clones) out.push_back(ground_[clone / 2]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CloneProjectionMatroid::Independent(std::span<const ElementId> set) const {
  std::vector<ElementId> projected;
  projected.reserve(set.size());
  for (ElementId clone : set) projected.push_back(ground_[clone / 2]);
  std::vector<ElementId> sorted(projected);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;  // both copies of one element
  }
  return base_->IsIndependent(projected);
}

// ---------------------------------------------------------------------------

namespace {

uint64_t MaskOf(std::span<const ElementId> set) {
  uint64_t mask = 0;
  for (ElementId e : set) mask |= uint64_t{1} << e;
  return mask;
}

}  // namespace

TableMatroid::TableMatroid(int ground_size,
                           const std::vector<std::vector<ElementId>>& family)
    : Matroid(ground_size) {
  if (ground_size > 62) throw std::length_error("table matroid: ground too large");
  for (const auto& set : family) {
    CheckElementSet(set, ground_size);
    members_.push_back(MaskOf(set));
    rank_ = std::max(rank_, static_cast<int>(set.size()));
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool TableMatroid::Independent(std::span<const ElementId> set) const {
  return std::binary_search(members_.begin(), members_.end(), MaskOf(set));
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<PartitionMatroid> MakeColorMatroid(
    const std::vector<ColorId>& color_of, const std::vector<int>& caps,
    const char* name) {
  std::vector<int> block_of(color_of.size());
  for (size_t e = 0; e < color_of.size(); ++e) {
    if (color_of[e] < 1 || color_of[e] > static_cast<int>(caps.size())) {
      throw std::invalid_argument("color out of range");
    }
    block_of[e] = color_of[e] - 1;
  }
  return std::make_shared<PartitionMatroid>(std::move(block_of), caps, name);
}

}  // namespace

std::shared_ptr<PartitionMatroid> MakeLowerColorMatroid(
    const std::vector<ColorId>& color_of, const FairnessBounds& bounds) {
  return MakeColorMatroid(color_of, bounds.lower_bounds(), "lower_color");
}

std::shared_ptr<PartitionMatroid> MakeUpperColorMatroid(
    const std::vector<ColorId>& color_of, const FairnessBounds& bounds) {
  return MakeColorMatroid(color_of, bounds.upper_bounds(), "upper_color");
}

std::shared_ptr<ContractedMatroid> Contract(MatroidPtr base,
                                            std::vector<ElementId> pinned) {
  return std::make_shared<ContractedMatroid>(std::move(base), std::move(pinned));
}

std::shared_ptr<TruncatedMatroid> Truncate(MatroidPtr base, int cap) {
  return std::make_shared<TruncatedMatroid>(std::move(base), cap);
}

std::vector<ElementId> GreedyMaximalIndependent(
    const Matroid& matroid, std::span<const ElementId> elements) {
  std::vector<ElementId> current;
  for (ElementId e : elements) {
    current.push_back(e);
    if (!matroid.IsIndependent(current)) current.pop_back();
  }
  return current;
}

int GreedyRank(const Matroid& matroid, std::span<const ElementId> elements) {
  return static_cast<int>(GreedyMaximalIndependent(matroid, elements).size());
}

namespace {

std::string DescribeMask(uint32_t mask, std::span<const ElementId> ground) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (mask & (1u << i)) {
      if (!first) out << ',';
      out << ground[i];
      first = false;
    }
  }
  out << '}';
  return out.str();
}

}  // namespace

// A down-closed non-empty family is a matroid iff, for every X, all maximal
// independent subsets of X have the same size. For an independent set I
// that is equivalent to: the largest X in which I is maximal (the ground
// minus the elements that extend I) has no independent subset larger
// than I.
bool VerifyMatroidAxioms(const Matroid& matroid,
                         std::span<const ElementId> ground,
                         std::string* failure) {
  if (ground.size() > 14) {
    throw std::length_error("verify_matroid_axioms: ground larger than 14");
  }
  const int g = static_cast<int>(ground.size());
  const uint32_t full = (1u << g) - 1;
  std::vector<char> independent(full + 1);
  std::vector<ElementId> subset;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    subset.clear();
    for (int i = 0; i < g; ++i) {
      if (mask & (1u << i)) subset.push_back(ground[i]);
    }
    independent[mask] = matroid.IsIndependent(subset);
  }
  auto fail = [&](const std::string& why) {
    if (failure != nullptr) *failure = why;
    return false;
  };
  if (!independent[0]) return fail("empty set is dependent");
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!independent[mask]) continue;
    for (int i = 0; i < g; ++i) {
      const uint32_t smaller = mask & ~(1u << i);
      if (smaller != mask && !independent[smaller]) {
        return fail("not downward closed: " + DescribeMask(mask, ground) +
                    " independent but " + DescribeMask(smaller, ground) + " is not");
      }
    }
  }
  std::vector<int> max_size(full + 1, 0);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (independent[mask]) {
      max_size[mask] = std::popcount(mask);
      continue;
    }
    for (int i = 0; i < g; ++i) {
      if (mask & (1u << i)) {
        max_size[mask] = std::max(max_size[mask], max_size[mask & ~(1u << i)]);
      }
    }
  }
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (!independent[mask]) continue;
    uint32_t extenders = 0;
    for (int i = 0; i < g; ++i) {
      const uint32_t bit = 1u << i;
      if (!(mask & bit) && independent[mask | bit]) extenders |= bit;
    }
    const uint32_t span = full & ~extenders;
    if (max_size[span] != std::popcount(mask)) {
      return fail("augmentation fails: " + DescribeMask(mask, ground) +
                  " cannot be extended from a larger independent subset of " +
                  DescribeMask(span, ground));
    }
  }
  return true;
}

}  // namespace fairmat
