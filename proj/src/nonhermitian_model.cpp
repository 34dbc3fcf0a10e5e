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

#include "bplab/nonhermitian_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bplab/sphere.hpp"

namespace bplab {

namespace {

constexpr int kRankOneBatch = 512;
// Eigenvalues of M^* M above -kGramClamp * scale are rounded up to zero.
constexpr double kGramClamp = 1e-10;

void check_dim(int d) {
  if (d < 1) throw std::invalid_argument("matrix dimension must be positive");
}

}  // namespace

ComplexMatrixSample::ComplexMatrixSample(Eigen::MatrixXcd m) : entries_(std::move(m)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("complex matrix sample needs a nonempty square matrix");
  }
}

ComplexMatrixSample ComplexMatrixSample::operator+(const ComplexMatrixSample& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  return ComplexMatrixSample(entries_ + other.entries_);
}

ComplexMatrixSample sample_K(const ScalarSampler& mu, int d, RngStream& rng) {
  check_dim(d);
  Eigen::VectorXd diag(d);
  for (int i = 0; i < d; ++i) diag(i) = mu.draw(rng);
  const Eigen::MatrixXcd u = sample_haar_unitary(d, rng);
  const Eigen::MatrixXcd v = sample_haar_unitary(d, rng);
  return ComplexMatrixSample(u * diag.asDiagonal() * v);
}

ComplexMatrixSample sample_L_gaussian(int d, RngStream& rng, double scale) {
  check_dim(d);
  if (!(scale >= 0.0)) throw std::invalid_argument("Ginibre block needs scale >= 0");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (scale == 0.0) return ComplexMatrixSample(std::move(m));
  const double sd = std::sqrt(scale / d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = sd * rng.complex_normal();
  }
  return ComplexMatrixSample(std::move(m));
}

ComplexMatrixSample sample_L_compound_poisson(const ScalarSampler& rho, double lambda, int d,
                                              RngStream& rng) {
  check_dim(d);
  if (!rho.symmetric()) {
    throw std::invalid_argument("non-Hermitian compound Poisson block needs a symmetric jump law");
  }
  if (!(lambda >= 0.0)) throw std::invalid_argument("compound Poisson block needs lambda >= 0");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (lambda == 0.0) return ComplexMatrixSample(std::move(m));
  std::uint64_t remaining = rng.poisson(d * lambda);
  while (remaining > 0) {
    const int batch = static_cast<int>(std::min<std::uint64_t>(remaining, kRankOneBatch));
    Eigen::MatrixXcd left(d, batch);
    Eigen::MatrixXcd right(d, batch);
    Eigen::VectorXd weights(batch);
    for (int k = 0; k < batch; ++k) {
      left.col(k) = sample_sphere_vector(d, rng).coords;
      right.col(k) = sample_sphere_vector(d, rng).coords;
      weights(k) = rho.draw(rng);
    }
    m.noalias() += left * weights.asDiagonal() * right.adjoint();
    remaining -= static_cast<std::uint64_t>(batch);
  }
  return ComplexMatrixSample(std::move(m));
}

ComplexMatrixSample sample_L(const SamplingPlan& plan, int d, RngStream& rng) {
  if (plan.gaussian_mean != 0.0) {
    throw std::invalid_argument("non-Hermitian model needs a symmetric triple");
  }
  ComplexMatrixSample out = sample_L_gaussian(d, rng, plan.gaussian_variance);
  if (plan.tail.lambda > 0.0) {
    const ScalarSampler jumps = ScalarSampler::from_measure(plan.tail.rho);
    out = out + sample_L_compound_poisson(jumps, plan.tail.lambda, d, rng);
  }
  return out;
}

ComplexMatrixSample sample_L(const LevyTriple& t, int d, RngStream& rng, const SampleOptions& opts) {
  if (!is_symmetric(t)) throw std::invalid_argument("non-Hermitian model needs a symmetric triple");
  if (opts.inner_cut && !(*opts.inner_cut > 0.0)) {
    throw std::invalid_argument("inner cut must be positive");
  }
  SamplingPlan plan = plan_sampling(t, opts.inner_cut);
  // Symmetric triples have zero mean; clear rounding residue from the sum.
  plan.gaussian_mean = 0.0;
  return sample_L(plan, d, rng);
}

EmpiricalDistribution symmetrized_singular_law(const ComplexMatrixSample& m) {
  const Eigen::MatrixXcd gram = m.entries().adjoint() * m.entries();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  const int d = m.dim();
  std::vector<double> points;
  points.reserve(2 * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    double e = solver.eigenvalues()(i);
    if (e < 0.0) {
      if (e < -kGramClamp * scale) throw std::runtime_error("M^* M has a negative eigenvalue");
      e = 0.0;
    }
    const double s = std::sqrt(e);
    points.push_back(s);
    points.push_back(-s);
  }
  return EmpiricalDistribution::uniform(std::move(points));
}

std::vector<double> gram_trace_moments(const ComplexMatrixSample& m, std::size_t jmax) {
  const HermitianSample gram(m.entries().adjoint() * m.entries());
  return trace_moments(gram, jmax).values();
}

}  // namespace bplab
