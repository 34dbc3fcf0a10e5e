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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "bplab/partitions.hpp"

using namespace bplab;

namespace {

SetPartition blocks(int k, std::vector<Block> b) { return SetPartition::from_blocks(k, b); }

// Bell numbers from the Bell triangle.
std::vector<std::uint64_t> bell_numbers(int n) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

std::uint64_t catalan(int k) {
  std::uint64_t c = 1;  // C(2k, k) / (k + 1) via the product formula
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

bool crosses_brute(const SetPartition& p) {
  const int k = p.ground_size();
  for (int x = 1; x <= k; ++x)
    for (int y = x + 1; y <= k; ++y)
      for (int z = y + 1; z <= k; ++z)
        for (int t = z + 1; t <= k; ++t)
          if (p.block_of(x) == p.block_of(z) && p.block_of(y) == p.block_of(t) &&
              p.block_of(x) != p.block_of(y))
            return true;
  return false;
}

// Searches all bijections phi of each block for tau(r) = tau(succ(phi(r))).
template <typename Succ>
bool matches_by_permutation(const SetPartition& pi, const SetPartition& tau, Succ succ) {
  for (const Block& v : pi.blocks()) {
    std::vector<int> phi = v;
    bool found = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < v.size() && ok; ++i) ok = tau.block_of(v[i]) == tau.block_of(succ(phi[i]));
      found = ok;
    } while (!found && std::next_permutation(phi.begin(), phi.end()));
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("set partition construction") {
  const SetPartition p = blocks(4, {{2, 4}, {1}, {3}});
  CHECK(p.labels() == std::vector<int>{0, 1, 2, 1});
  CHECK(p.block_count() == 3);
  CHECK(p.blocks() == std::vector<Block>{{1}, {2, 4}, {3}});
  CHECK_THROWS_AS(blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks(3, {{1, 2}, {3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(blocks(2, {{1, 2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_labels({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_labels({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_labels({}), std::invalid_argument);
}

TEST_CASE("split ground successor is cyclic per half") {
  const SplitGround g(3);
  CHECK(g.size() == 6);
  CHECK(g.successor(1) == 2);
  CHECK(g.successor(3) == 1);
  CHECK(g.successor(4) == 5);
  CHECK(g.successor(6) == 4);
  CHECK(g.in_first_half(3));
  CHECK_FALSE(g.in_first_half(4));
  CHECK(cyclic_successor(4, 4) == 1);
  CHECK(cyclic_successor(2, 4) == 3);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_partitions(1) == std::vector<SetPartition>{blocks(1, {{1}})});
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  CHECK(enumerate_noncrossing(1).size() == 1);
  CHECK(enumerate_noncrossing(3).size() == 5);
  CHECK(enumerate_noncrossing(4).size() == 14);
  const auto bell = bell_numbers(8);
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const auto all = enumerate_partitions(k);
    CHECK(all.size() == bell[static_cast<std::size_t>(k)]);
    CHECK(enumerate_noncrossing(k).size() == catalan(k));
    std::set<std::vector<int>> distinct;
    for (const auto& p : all) distinct.insert(p.labels());
    CHECK(distinct.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(kMaxEnumerationSize + 1), std::invalid_argument);
}

TEST_CASE("noncrossing predicate") {
  CHECK_FALSE(is_noncrossing(blocks(4, {{1, 3}, {2, 4}})));
  CHECK(is_noncrossing(blocks(3, {{1}, {2}, {3}})));
  CHECK(is_noncrossing(blocks(4, {{1, 4}, {2, 3}})));
  for (int k = 1; k <= 7; ++k) {
    for (const auto& p : enumerate_partitions(k)) CHECK(is_noncrossing(p) == !crosses_brute(p));
  }
}

TEST_CASE("interval blocks and peeling") {
  CHECK(interval_block(blocks(3, {{1, 2}, {3}})) == Block{1, 2});
  CHECK(interval_block(blocks(4, {{1, 4}, {2, 3}})) == Block{2, 3});
  CHECK_FALSE(interval_block(blocks(4, {{1, 3}, {2, 4}})).has_value());
  CHECK(remove_block(blocks(4, {{1, 4}, {2, 3}}), {2, 3}) == blocks(2, {{1, 2}}));
  CHECK_FALSE(remove_block(blocks(2, {{1, 2}}), {1, 2}).has_value());
  for (int k = 1; k <= 7; ++k) {
    for (const auto& p : enumerate_noncrossing(k)) CHECK(peel_count(p) == p.block_count());
  }
}

TEST_CASE("acceptable partitions") {
  const SetPartition crossing = blocks(4, {{1, 3}, {2, 4}});
  CHECK(is_acceptable(crossing, blocks(4, {{1, 2}, {3, 4}})));
  CHECK(is_acceptable(crossing, blocks(4, {{1, 4}, {2, 3}})));
  CHECK_FALSE(is_acceptable(crossing, blocks(4, {{1}, {2}, {3}, {4}})));
  CHECK_THROWS_AS(is_acceptable(crossing, blocks(3, {{1, 2, 3}})), std::invalid_argument);

  std::vector<SetPartition> acc;
  for (const auto& tau : enumerate_partitions(4)) {
    if (is_acceptable(crossing, tau)) acc.push_back(tau);
  }
  CHECK(acc.size() == 3);
  CHECK(std::count(acc.begin(), acc.end(), blocks(4, {{1, 2, 3, 4}})) == 1);

  for (int k = 1; k <= 5; ++k) {
    const auto all = enumerate_partitions(k);
    for (const auto& pi : all) {
      for (const auto& tau : all) {
        CHECK(is_acceptable(pi, tau) ==
              matches_by_permutation(pi, tau, [k](int r) { return cyclic_successor(r, k); }));
      }
    }
  }
}

TEST_CASE("crossing partitions satisfy |pi| + |tau| <= k") {
  for (int k = 1; k <= 6; ++k) {
    const auto all = enumerate_partitions(k);
    for (const auto& pi : all) {
      if (is_noncrossing(pi)) continue;
      for (const auto& tau : all) {
        if (is_acceptable(pi, tau)) CHECK(pi.block_count() + tau.block_count() <= k);
      }
    }
  }
}

TEST_CASE("admissible partitions") {
  const SplitGround g1(1);
  CHECK(is_admissible(g1, blocks(2, {{1, 2}}), blocks(2, {{1, 2}})));
  CHECK(is_admissible(g1, blocks(2, {{1, 2}}), blocks(2, {{1}, {2}})));
  const SplitGround g2(2);
  CHECK_FALSE(is_admissible(g2, blocks(4, {{1, 3}, {2}, {4}}), blocks(4, {{1}, {2}, {3}, {4}})));
  CHECK_THROWS_AS(is_admissible(g2, blocks(2, {{1, 2}}), blocks(2, {{1, 2}})),
                  std::invalid_argument);
  CHECK(links_halves(g2, blocks(4, {{1, 3}, {2}, {4}})));
  CHECK_FALSE(links_halves(g2, blocks(4, {{1, 2}, {3, 4}})));

  for (int k = 1; k <= 3; ++k) {
    const SplitGround g(k);
    const auto all = enumerate_partitions(2 * k);
    for (const auto& pi : all) {
      for (const auto& tau : all) {
        CHECK(is_admissible(g, pi, tau) ==
              matches_by_permutation(pi, tau, [&g](int r) { return g.successor(r); }));
      }
    }
  }
}

TEST_CASE("linking partitions: the two-half block count bound") {
  // The bound |pi| + |tau| <= 2k fails already for k = 1 (pi = {{1,2}},
  // tau = {{1},{2}}); exhaustively the excess is never more than one.
  int violations = 0;
  for (int k = 1; k <= 3; ++k) {
    const SplitGround g(k);
    const auto all = enumerate_partitions(2 * k);
    for (const auto& pi : all) {
      if (!links_halves(g, pi)) continue;
      for (const auto& tau : all) {
        if (!is_admissible(g, pi, tau)) continue;
        CHECK(pi.block_count() + tau.block_count() <= 2 * k + 1);
        if (pi.block_count() + tau.block_count() > 2 * k) ++violations;
      }
    }
  }
  CHECK(violations > 0);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(falling_factorial(3, 3) == 6);
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(falling_factorial(0, 0) == 1);
}
