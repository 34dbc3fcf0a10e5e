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

#include "bplab/hermitian_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bplab/sphere.hpp"

namespace bplab {

namespace {

// Columns of rank-one terms accumulated per matrix product.
constexpr int kRankOneBatch = 512;

void check_dim(int d) {
  if (d < 1) throw std::invalid_argument("matrix dimension must be positive");
}

}  // namespace

HermitianSample::HermitianSample(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("Hermitian sample needs a nonempty square matrix");
  }
  entries_ = 0.5 * (m + m.adjoint());
}

HermitianSample HermitianSample::operator+(const HermitianSample& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  return HermitianSample(entries_ + other.entries_);
}

Eigen::MatrixXcd sample_haar_unitary(int d, RngStream& rng) {
  check_dim(d);
  Eigen::MatrixXcd g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double modulus = std::abs(r(j, j));
    if (modulus > 0.0) q.col(j) *= r(j, j) / modulus;
  }
  return q;
}

HermitianSample sample_Q(const ScalarSampler& mu, int d, RngStream& rng) {
  check_dim(d);
  Eigen::VectorXd diag(d);
  for (int i = 0; i < d; ++i) diag(i) = mu.draw(rng);
  const Eigen::MatrixXcd u = sample_haar_unitary(d, rng);
  return HermitianSample(u * diag.asDiagonal() * u.adjoint());
}

HermitianSample sample_P_gaussian(double mean, double var, int d, RngStream& rng) {
  check_dim(d);
  if (!(var >= 0.0)) throw std::invalid_argument("gaussian block needs var >= 0");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (var > 0.0) {
    const double sd = std::sqrt(var / (d + 1.0));
    for (int j = 0; j < d; ++j) {
      m(j, j) = sd * rng.normal();
      for (int i = j + 1; i < d; ++i) {
        m(i, j) = sd * rng.complex_normal();
        m(j, i) = std::conj(m(i, j));
      }
    }
    const double shift = std::sqrt(var) * rng.normal() / std::sqrt(d + 1.0);
    m.diagonal().array() += shift;
  }
  m.diagonal().array() += mean;
  return HermitianSample(m);
}

HermitianSample sample_P_compound_poisson(const ScalarSampler& rho, double lambda, int d,
                                          RngStream& rng) {
  check_dim(d);
  if (!(lambda >= 0.0)) throw std::invalid_argument("compound Poisson block needs lambda >= 0");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (lambda == 0.0) return HermitianSample(m);
  std::uint64_t remaining = rng.poisson(d * lambda);
  while (remaining > 0) {
    const int batch = static_cast<int>(std::min<std::uint64_t>(remaining, kRankOneBatch));
    Eigen::MatrixXcd vectors(d, batch);
    Eigen::VectorXd weights(batch);
    for (int k = 0; k < batch; ++k) {
      vectors.col(k) = sample_sphere_vector(d, rng).coords;
      weights(k) = rho.draw(rng);
    }
    m.noalias() += vectors * weights.asDiagonal() * vectors.adjoint();
    remaining -= static_cast<std::uint64_t>(batch);
  }
  return HermitianSample(m);
}

HermitianSample sample_P(const SamplingPlan& plan, int d, RngStream& rng) {
  HermitianSample out = sample_P_gaussian(plan.gaussian_mean, plan.gaussian_variance, d, rng);
  if (plan.tail.lambda > 0.0) {
    const ScalarSampler jumps = ScalarSampler::from_measure(plan.tail.rho);
    out = out + sample_P_compound_poisson(jumps, plan.tail.lambda, d, rng);
  }
  return out;
}

HermitianSample sample_P(const LevyTriple& t, int d, RngStream& rng, const SampleOptions& opts) {
  if (opts.inner_cut && !(*opts.inner_cut > 0.0)) {
    throw std::invalid_argument("inner cut must be positive");
  }
  return sample_P(plan_sampling(t, opts.inner_cut), d, rng);
}

}  // namespace bplab
