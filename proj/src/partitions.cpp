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

#include "bplab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace bplab {

namespace {

void check_enumeration_size(int k) {
  if (k < 1 || k > kMaxEnumerationSize) {
    throw std::invalid_argument("partition enumeration needs 1 <= k <= " +
                                std::to_string(kMaxEnumerationSize) + ", got " +
                                std::to_string(k));
  }
}

// Per-block multiset test: the classes of r and of succ(r), r ranging over a
// block, must agree with multiplicity. That is exactly the condition for a
// perfect matching in the bipartite graph joining r to s when
// tau(r) == tau(succ(s)).
bool blocks_balanced(const SetPartition& pi, const SetPartition& tau,
                     const std::function<int(int)>& successor) {
  std::vector<int> balance(static_cast<std::size_t>(tau.block_count()));
  for (const Block& block : pi.blocks()) {
    std::fill(balance.begin(), balance.end(), 0);
    for (int r : block) {
      ++balance[static_cast<std::size_t>(tau.block_of(r))];
      --balance[static_cast<std::size_t>(tau.block_of(successor(r)))];
    }
    if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) {
      return false;
    }
  }
  return true;
}

}  // namespace

SetPartition::SetPartition(std::vector<int> labels) : labels_(std::move(labels)) {
  block_count_ = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

SetPartition SetPartition::from_labels(std::vector<int> labels) {
  if (labels.empty()) throw std::invalid_argument("partition of an empty ground set");
  int next = 0;
  for (int label : labels) {
    if (label < 0 || label > next) {
      throw std::invalid_argument("labels are not a restricted growth string");
    }
    if (label == next) ++next;
  }
  return SetPartition(std::move(labels));
}

SetPartition SetPartition::from_blocks(int ground_size, const std::vector<Block>& blocks) {
  if (ground_size < 1) throw std::invalid_argument("ground size must be positive");
  std::vector<int> owner(static_cast<std::size_t>(ground_size), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int r : blocks[b]) {
      if (r < 1 || r > ground_size) throw std::invalid_argument("element out of range");
      if (owner[static_cast<std::size_t>(r - 1)] != -1) {
        throw std::invalid_argument("blocks are not disjoint");
      }
      owner[static_cast<std::size_t>(r - 1)] = static_cast<int>(b);
    }
  }
  std::vector<int> relabel(blocks.size(), -1);
  std::vector<int> labels(static_cast<std::size_t>(ground_size));
  int next = 0;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] == -1) throw std::invalid_argument("blocks do not cover the ground set");
    int& canonical = relabel[static_cast<std::size_t>(owner[i])];
    if (canonical == -1) canonical = next++;
    labels[i] = canonical;
  }
  return SetPartition(std::move(labels));
}

std::vector<Block> SetPartition::blocks() const {
  std::vector<Block> out(static_cast<std::size_t>(block_count_));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

SplitGround::SplitGround(int half_size) : k_(half_size) {
  if (half_size < 1) throw std::invalid_argument("split ground needs k >= 1");
}

int SplitGround::successor(int r) const {
  if (r < 1 || r > 2 * k_) throw std::invalid_argument("element out of range");
  if (r == k_) return 1;
  if (r == 2 * k_) return k_ + 1;
  return r + 1;
}

int cyclic_successor(int r, int k) { return r == k ? 1 : r + 1; }

std::vector<SetPartition> enumerate_partitions(int k) {
  check_enumeration_size(k);
  std::vector<SetPartition> out;
  std::vector<int> labels(static_cast<std::size_t>(k), 0);
  // prefix_max[i] = max(labels[0..i]).
  std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(SetPartition::from_labels(labels));
    // Advance the restricted growth string in lexicographic order.
    int i = k - 1;
    while (i > 0 && labels[static_cast<std::size_t>(i)] >
                        prefix_max[static_cast<std::size_t>(i - 1)]) {
      --i;
    }
    if (i == 0) break;
    ++labels[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k; ++j) {
      labels[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

bool is_noncrossing(const SetPartition& pi) {
  const auto& l = pi.labels();
  const std::size_t k = l.size();
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t z = x + 2; z < k; ++z) {
      if (l[z] != l[x]) continue;
      for (std::size_t y = x + 1; y < z; ++y) {
        if (l[y] == l[x]) continue;
        for (std::size_t t = z + 1; t < k; ++t) {
          if (l[t] == l[y]) return false;
        }
      }
    }
  }
  return true;
}

std::vector<SetPartition> enumerate_noncrossing(int k) {
  std::vector<SetPartition> all = enumerate_partitions(k);
  std::erase_if(all, [](const SetPartition& p) { return !is_noncrossing(p); });
  return all;
}

std::optional<SetPartition> remove_block(const SetPartition& pi, const Block& block) {
  std::vector<bool> removed(static_cast<std::size_t>(pi.ground_size()), false);
  for (int r : block) removed.at(static_cast<std::size_t>(r - 1)) = true;
  std::vector<Block> rest;
  std::vector<int> new_index(static_cast<std::size_t>(pi.ground_size()), 0);
  int next = 0;
  for (int r = 1; r <= pi.ground_size(); ++r) {
    if (!removed[static_cast<std::size_t>(r - 1)]) new_index[static_cast<std::size_t>(r - 1)] = ++next;
  }
  if (next == 0) return std::nullopt;
  for (const Block& b : pi.blocks()) {
    Block nb;
    for (int r : b) {
      if (!removed[static_cast<std::size_t>(r - 1)]) nb.push_back(new_index[static_cast<std::size_t>(r - 1)]);
    }
    if (!nb.empty()) rest.push_back(std::move(nb));
  }
  return SetPartition::from_blocks(next, rest);
}

std::optional<Block> interval_block(const SetPartition& pi) {
  for (const Block& b : pi.blocks()) {
    // Blocks come sorted by minimum, so the first hit has the smallest one.
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) continue;
    const auto rest = remove_block(pi, b);
    if (!rest || is_noncrossing(*rest)) return b;
  }
  return std::nullopt;
}

int peel_count(const SetPartition& pi) {
  std::optional<SetPartition> current = pi;
  int steps = 0;
  while (current) {
    const auto block = interval_block(*current);
    if (!block) break;
    current = remove_block(*current, *block);
    ++steps;
  }
  return steps;
}

bool is_acceptable(const SetPartition& pi, const SetPartition& tau) {
  if (pi.ground_size() != tau.ground_size()) {
    throw std::invalid_argument("is_acceptable: partitions live on different ground sets");
  }
  const int k = pi.ground_size();
  return blocks_balanced(pi, tau, [k](int r) { return cyclic_successor(r, k); });
}

bool is_admissible(const SplitGround& ground, const SetPartition& pi, const SetPartition& tau) {
  if (pi.ground_size() != ground.size() || tau.ground_size() != ground.size()) {
    throw std::invalid_argument("is_admissible: partitions do not live on the split ground");
  }
  return blocks_balanced(pi, tau, [&ground](int r) { return ground.successor(r); });
}

bool links_halves(const SplitGround& ground, const SetPartition& pi) {
  if (pi.ground_size() != ground.size()) {
    throw std::invalid_argument("links_halves: partition does not live on the split ground");
  }
  for (const Block& b : pi.blocks()) {
    if (ground.in_first_half(b.front()) && !ground.in_first_half(b.back())) return true;
  }
  return false;
}

std::uint64_t falling_factorial(std::uint64_t n, std::uint64_t l) {
  if (l > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < l; ++i) out *= n - i;
  return out;
}

}  // namespace bplab
