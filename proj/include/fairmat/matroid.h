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

// Matroid independence oracles. The ground set of every oracle is
// {0, ..., ground_size() - 1}. Oracles are immutable after construction;
// the only mutable state is an atomic independence-call counter.

#ifndef FAIRMAT_MATROID_H_
#define FAIRMAT_MATROID_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairmat/core.h"

namespace fairmat {

class Matroid {
 public:
  explicit Matroid(int ground_size);
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  // Validates `set` (in range, no duplicates), bumps the call counter and
  // answers the independence query.
  bool IsIndependent(std::span<const ElementId> set) const;

  int ground_size() const { return ground_size_; }
  // Size of every base of the matroid on its full ground set.
  virtual int rank_bound() const = 0;
  virtual std::string_view kind() const = 0;

  int64_t independence_calls() const {
    return calls_.load(std::memory_order_relaxed);
  }

 protected:
  // `set` is already validated.
  virtual bool Independent(std::span<const ElementId> set) const = 0;
  // Greedy rank over the whole ground set, without touching the counter.
  int ComputeRank() const;

 private:
  int ground_size_;
  mutable std::atomic<int64_t> calls_{0};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank);
  int rank_bound() const override;
  std::string_view kind() const override { return "uniform"; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  int rank_;
};

// |S ∩ B_i| <= cap_i for every block B_i. `kind_name` lets the color
// matroids report themselves as such.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> caps,
                   std::string kind_name = "partition");
  int rank_bound() const override { return rank_; }
  std::string_view kind() const override { return kind_name_; }

  int num_blocks() const { return static_cast<int>(caps_.size()); }
  int block_of(ElementId e) const { return block_of_[e]; }
  int cap(int block) const { return caps_[block]; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> caps_;
  std::string kind_name_;
  int rank_ = 0;
};

struct LaminarGroup {
  std::vector<ElementId> members;
  int cap = 0;
};

// Any two groups are nested or disjoint (checked at construction).
class LaminarMatroid : public Matroid {
 public:
  LaminarMatroid(int ground_size, std::vector<LaminarGroup> groups);
  int rank_bound() const override { return rank_; }
  std::string_view kind() const override { return "laminar"; }
  const std::vector<LaminarGroup>& groups() const { return groups_; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  std::vector<LaminarGroup> groups_;
  std::vector<std::vector<int>> groups_of_;  // element -> containing groups
  int rank_ = 0;
};

// X is independent iff X is disjoint from `pinned` and X ∪ pinned is
// independent in the base. Pinned elements behave as loops.
class ContractedMatroid : public Matroid {
 public:
  // Throws std::invalid_argument when `pinned` is dependent in `base`.
  ContractedMatroid(MatroidPtr base, std::vector<ElementId> pinned);
  int rank_bound() const override;
  std::string_view kind() const override { return "contraction"; }
  const std::vector<ElementId>& pinned() const { return pinned_; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  MatroidPtr base_;
  std::vector<ElementId> pinned_;
  std::vector<char> is_pinned_;
};

// Independent in the base and of size at most `cap`.
class TruncatedMatroid : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr base, int cap);
  int rank_bound() const override;
  std::string_view kind() const override { return "truncation"; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  MatroidPtr base_;
  int cap_;
};

// Every element v of `ground` is cloned into a lower copy (id 2p) and an
// upper copy (id 2p + 1), where p is the position of v in `ground`. A clone
// set is independent iff it never holds both copies of an element and its
// projection is independent in the base.
class CloneProjectionMatroid : public Matroid {
 public:
  CloneProjectionMatroid(MatroidPtr base, std::vector<ElementId> ground);
  int rank_bound() const override;
  std::string_view kind() const override { return "clone_composite"; }

  static ElementId LowerClone(int position) { return 2 * position; }
  static ElementId UpperClone(int position) { return 2 * position + 1; }
  // Original element ids behind a clone set, ascending.
  std::vector<ElementId> Project(std::span<const ElementId> clones) const;

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  MatroidPtr base_;
  std::vector<ElementId> ground_;
};

// Explicit set family given by its members. Used by axiom tests and
// adversarial fixtures; it need not be a matroid. Ground size <= 62.
class TableMatroid : public Matroid {
 public:
  TableMatroid(int ground_size, const std::vector<std::vector<ElementId>>& family);
  int rank_bound() const override { return rank_; }
  std::string_view kind() const override { return "custom_table"; }

 protected:
  bool Independent(std::span<const ElementId> set) const override;

 private:
  std::vector<uint64_t> members_;  // sorted masks
  int rank_ = 0;
};

// Partition matroid over colors with caps l_c.
std::shared_ptr<PartitionMatroid> MakeLowerColorMatroid(
    const std::vector<ColorId>& color_of, const FairnessBounds& bounds);
// Partition matroid over colors with caps u_c.
std::shared_ptr<PartitionMatroid> MakeUpperColorMatroid(
    const std::vector<ColorId>& color_of, const FairnessBounds& bounds);

std::shared_ptr<ContractedMatroid> Contract(MatroidPtr base,
                                            std::vector<ElementId> pinned);
std::shared_ptr<TruncatedMatroid> Truncate(MatroidPtr base, int cap);

// Greedily grows an independent subset of `elements`, scanning them in the
// given order.
std::vector<ElementId> GreedyMaximalIndependent(
    const Matroid& matroid, std::span<const ElementId> elements);
int GreedyRank(const Matroid& matroid, std::span<const ElementId> elements);

// Exhaustive check of non-emptiness, downward-closedness and augmentation
// over all subsets of `ground`. Throws std::length_error if |ground| > 14.
// On failure a human-readable witness is written to `failure` when given.
bool VerifyMatroidAxioms(const Matroid& matroid,
                         std::span<const ElementId> ground,
                         std::string* failure = nullptr);

}  // namespace fairmat

#endif  // FAIRMAT_MATROID_H_
