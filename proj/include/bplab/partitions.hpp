// Copyright 2026 The bplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BPLAB_PARTITIONS_HPP
#define BPLAB_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace bplab {

// Largest ground size accepted by the exhaustive enumerators (Bell(10) = 115975).
inline constexpr int kMaxEnumerationSize = 10;

using Block = std::vector<int>;

// A partition of {1, ..., k}. Stored as a restricted-growth string: labels()[r-1]
// is the zero-based index of the block containing r, with blocks numbered in
// order of their smallest element.
class SetPartition {
 public:
  // Throws std::invalid_argument unless `labels` is a nonempty restricted
  // growth string (labels[0] == 0, labels[i] <= 1 + max(labels[0..i-1])).
  static SetPartition from_labels(std::vector<int> labels);

  // Blocks are 1-based element lists; any order. Throws std::invalid_argument
  // unless they are nonempty, disjoint and cover {1, ..., k} exactly.
  static SetPartition from_blocks(int ground_size, const std::vector<Block>& blocks);

  int ground_size() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return block_count_; }
  const std::vector<int>& labels() const { return labels_; }

  // Zero-based index of the block containing the 1-based element r.
  int block_of(int r) const { return labels_.at(static_cast<std::size_t>(r - 1)); }

  // Blocks in canonical order, elements ascending.
  std::vector<Block> blocks() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  explicit SetPartition(std::vector<int> labels);

  std::vector<int> labels_;
  int block_count_ = 0;
};

// The ground {1, ..., 2k} split into I = {1..k} and J = {k+1..2k}, each with a
// cyclic successor of its own.
class SplitGround {
 public:
  explicit SplitGround(int half_size);

  int half_size() const { return k_; }
  int size() const { return 2 * k_; }
  bool in_first_half(int r) const { return r <= k_; }
  int successor(int r) const;

 private:
  int k_;
};

// Cyclic successor on {1..k}: k + 1 wraps to 1.
int cyclic_successor(int r, int k);

std::vector<SetPartition> enumerate_partitions(int k);
std::vector<SetPartition> enumerate_noncrossing(int k);

bool is_noncrossing(const SetPartition& pi);

// The interval block with the smallest minimum whose removal leaves a
// noncrossing partition, or nullopt when no block qualifies.
std::optional<Block> interval_block(const SetPartition& pi);

// Deletes the elements of `block` and relabels the rest order-preservingly
// onto {1..k-|block|}. Returns nullopt when nothing is left.
std::optional<SetPartition> remove_block(const SetPartition& pi, const Block& block);

// Number of successful interval_block removals before the partition is
// exhausted or no interval block remains.
int peel_count(const SetPartition& pi);

bool is_acceptable(const SetPartition& pi, const SetPartition& tau);
bool is_admissible(const SplitGround& ground, const SetPartition& pi,
                   const SetPartition& tau);

// True if some block of pi meets both halves of the split ground.
bool links_halves(const SplitGround& ground, const SetPartition& pi);

// n (n-1) ... (n-l+1); the number of injections [l] -> [n].
std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t l);

}  // namespace bplab

#endif  // BPLAB_PARTITIONS_HPP
