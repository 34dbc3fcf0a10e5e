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

#include "bplab/cumulants.hpp"

#include <stdexcept>

namespace bplab {

namespace {

// binomial[n][j] = C(n, j) for n < size.
std::vector<std::vector<double>> binomial_table(std::size_t size) {
  std::vector<std::vector<double>> table(size);
  for (std::size_t n = 0; n < size; ++n) {
    table[n].assign(n + 1, 1.0);
    for (std::size_t j = 1; j < n; ++j) table[n][j] = table[n - 1][j - 1] + table[n - 1][j];
  }
  return table;
}

// Incrementally maintained coefficients of (1 + m_1 x + m_2 x^2 + ...)^s.
// power[s][t] is the x^t coefficient of the s-th power; column t only ever
// needs moments up to m_t, so the table can grow as moments become known.
class MomentPowers {
 public:
  explicit MomentPowers(std::size_t kmax)
      : moments_(kmax + 1, 0.0), power_(kmax + 1, std::vector<double>(kmax + 1, 0.0)) {
    moments_[0] = 1.0;
    for (std::size_t s = 0; s <= kmax; ++s) power_[s][0] = 1.0;
  }

  // Coefficient [x^t] of the s-th power; valid once moments 1..t are set.
  double coefficient(std::size_t s, std::size_t t) const { return power_[s][t]; }

  // Records m_t and fills column t for every power.
  void set_moment(std::size_t t, double value) {
    moments_[t] = value;
    power_[0][t] = 0.0;
    for (std::size_t s = 1; s < power_.size(); ++s) {
      double acc = 0.0;
      for (std::size_t i = 0; i <= t; ++i) acc += moments_[i] * power_[s - 1][t - i];
      power_[s][t] = acc;
    }
  }

 private:
  std::vector<double> moments_;
  std::vector<std::vector<double>> power_;
};

}  // namespace

MomentSequence::MomentSequence(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("moment sequence needs kmax >= 1");
}

CumulantSequence::CumulantSequence(CumulantKind kind, std::vector<double> values)
    : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("cumulant sequence needs kmax >= 1");
}

CumulantSequence CumulantSequence::operator+(const CumulantSequence& other) const {
  if (kind_ != other.kind_ || values_.size() != other.values_.size()) {
    throw std::invalid_argument("cumulant sequences differ in kind or length");
  }
  std::vector<double> sum(values_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.values_[i];
  return {kind_, std::move(sum)};
}

MomentSequence moments_from_cumulants(const CumulantSequence& c) {
  const std::size_t kmax = c.kmax();
  std::vector<double> m(kmax + 1, 0.0);
  m[0] = 1.0;
  if (c.kind() == CumulantKind::kClassical) {
    const auto binom = binomial_table(kmax);
    for (std::size_t n = 1; n <= kmax; ++n) {
      double acc = 0.0;
      for (std::size_t j = 1; j <= n; ++j) acc += binom[n - 1][j - 1] * c.at(j) * m[n - j];
      m[n] = acc;
    }
  } else {
    MomentPowers powers(kmax);
    for (std::size_t n = 1; n <= kmax; ++n) {
      double acc = 0.0;
      for (std::size_t s = 1; s <= n; ++s) acc += c.at(s) * powers.coefficient(s, n - s);
      m[n] = acc;
      powers.set_moment(n, acc);
    }
  }
  m.erase(m.begin());
  return MomentSequence(std::move(m));
}

CumulantSequence cumulants_from_moments(const MomentSequence& m, CumulantKind kind) {
  const std::size_t kmax = m.kmax();
  std::vector<double> c(kmax + 1, 0.0);
  if (kind == CumulantKind::kClassical) {
    const auto binom = binomial_table(kmax);
    auto moment = [&m](std::size_t i) { return i == 0 ? 1.0 : m.at(i); };
    for (std::size_t n = 1; n <= kmax; ++n) {
      double acc = m.at(n);
      for (std::size_t j = 1; j < n; ++j) acc -= binom[n - 1][j - 1] * c[j] * moment(n - j);
      c[n] = acc;
    }
  } else {
    MomentPowers powers(kmax);
    for (std::size_t n = 1; n <= kmax; ++n) {
      // The s = n term is k_n times [x^0] = 1.
      double acc = m.at(n);
      for (std::size_t s = 1; s < n; ++s) acc -= c[s] * powers.coefficient(s, n - s);
      c[n] = acc;
      powers.set_moment(n, m.at(n));
    }
  }
  c.erase(c.begin());
  return {kind, std::move(c)};
}

CumulantSequence bp_transport(const CumulantSequence& classical) {
  if (classical.kind() != CumulantKind::kClassical) {
    throw std::invalid_argument("bp_transport expects classical cumulants");
  }
  return {CumulantKind::kFree, classical.values()};
}

}  // namespace bplab
