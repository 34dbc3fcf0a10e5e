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

#ifndef BPLAB_CUMULANTS_HPP
#define BPLAB_CUMULANTS_HPP

#include <cstddef>
#include <vector>

namespace bplab {

// Moments m_1 ... m_kmax of a law on the real line; index from 1.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<double> values);

  std::size_t kmax() const { return values_.size(); }
  double at(std::size_t k) const { return values_.at(k - 1); }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

enum class CumulantKind { kClassical, kFree };

class CumulantSequence {
 public:
  CumulantSequence(CumulantKind kind, std::vector<double> values);

  CumulantKind kind() const { return kind_; }
  std::size_t kmax() const { return values_.size(); }
  double at(std::size_t k) const { return values_.at(k - 1); }
  const std::vector<double>& values() const { return values_; }

  // Componentwise sum; both operands must share kind and length.
  CumulantSequence operator+(const CumulantSequence& other) const;

 private:
  CumulantKind kind_;
  std::vector<double> values_;
};

// Moment-cumulant formula over all partitions (classical) or noncrossing
// partitions (free), evaluated by triangular recursion:
//   classical  m_n = sum_{j=1}^{n} C(n-1, j-1) c_j m_{n-j}
//   free       m_n = sum_{s=1}^{n} k_s [x^{n-s}] (sum_i m_i x^i)^s
MomentSequence moments_from_cumulants(const CumulantSequence& c);

// Exact inverse of moments_from_cumulants for the given kind.
CumulantSequence cumulants_from_moments(const MomentSequence& m, CumulantKind kind);

// Classical cumulants of mu read as the free cumulants of its image under the
// Bercovici-Pata bijection.
CumulantSequence bp_transport(const CumulantSequence& classical);

}  // namespace bplab

#endif  // BPLAB_CUMULANTS_HPP
