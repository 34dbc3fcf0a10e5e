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

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "bplab/hermitian_model.hpp"
#include "bplab/sphere.hpp"

using namespace bplab;
using cd = std::complex<double>;

namespace {

bool hermitian(const Eigen::MatrixXcd& m, double tol = 1e-12) {
  return (m - m.adjoint()).norm() <= tol * std::max(1.0, m.norm());
}

}  // namespace

TEST_CASE("Haar unitaries") {
  RngStream rng(7, 0);
  const int d = 6;
  const int n = 4000;
  double first = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXcd u = sample_haar_unitary(d, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(d, d)).norm() < 1e-12);
    first += std::norm(u(0, 0));
  }
  // |U_11|^2 has mean 1/d and variance (d-1)/(d^2 (d+1)).
  const double se = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / n);
  CHECK(std::abs(first / n - 1.0 / d) < 5 * se);
  CHECK_THROWS_AS(sample_haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("unitarily invariant matrices with given eigenvalues") {
  RngStream rng(7, 1);
  const ScalarSampler mu = ScalarSampler::from_measure(FiniteMeasure({{-1.0, 0.5}, {2.0, 0.5}}));
  const HermitianSample q = sample_Q(mu, 8, rng);
  REQUIRE(hermitian(q.entries()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q.entries());
  for (int i = 0; i < 8; ++i) {
    const double e = es.eigenvalues()(i);
    CHECK(std::min(std::abs(e + 1.0), std::abs(e - 2.0)) < 1e-12);
  }
  const HermitianSample c = sample_Q(ScalarSampler::constant(3.0), 5, rng);
  CHECK((c.entries() - 3.0 * Eigen::MatrixXcd::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("Gaussian block") {
  RngStream rng(7, 2);
  const HermitianSample zero = sample_P_gaussian(2.0, 0.0, 4, rng);
  CHECK(zero.entries() == (2.0 * Eigen::MatrixXcd::Identity(4, 4)).eval());
  CHECK_THROWS_AS(sample_P_gaussian(0.0, -1.0, 4, rng), std::invalid_argument);

  // Var((1/d) Tr M) = var / d and E (1/d) Tr M^2 = mean^2 + var.
  const int d = 10;
  const int n = 20000;
  const double mean = 0.5;
  const double var = 2.0;
  double s1 = 0.0, s2 = 0.0, m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const HermitianSample p = sample_P_gaussian(mean, var, d, rng);
    REQUIRE(hermitian(p.entries(), 0.0));
    const double t = p.entries().trace().real() / d;
    s1 += t;
    s2 += t * t;
    m2 += (p.entries() * p.entries()).trace().real() / d;
  }
  const double tm = s1 / n;
  const double tv = s2 / n - tm * tm;
  CHECK(std::abs(tm - mean) < 5 * std::sqrt(var / d / n));
  CHECK(tv == doctest::Approx(var / d).epsilon(0.05));
  CHECK(m2 / n == doctest::Approx(mean * mean + var).epsilon(0.02));
}

TEST_CASE("compound Poisson block") {
  RngStream rng(7, 3);
  const ScalarSampler one = ScalarSampler::constant(1.0);
  CHECK(sample_P_compound_poisson(one, 0.0, 5, rng).entries().isZero(0.0));
  CHECK_THROWS_AS(sample_P_compound_poisson(one, -1.0, 5, rng), std::invalid_argument);

  // With unit jumps the trace counts the rank-one terms.
  const int d = 6;
  const int n = 4000;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const HermitianSample p = sample_P_compound_poisson(one, 0.5, d, rng);
    REQUIRE(hermitian(p.entries()));
    const double tr = p.entries().trace().real();
    CHECK(std::abs(tr - std::round(tr)) < 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.entries());
    int rank = 0;
    for (int j = 0; j < d; ++j) rank += es.eigenvalues()(j) > 1e-9;
    CHECK(rank <= std::lround(tr));
    total += tr;
  }
  CHECK(std::abs(total / n - 0.5 * d) < 5 * std::sqrt(0.5 * d / n));
}

TEST_CASE("Levy triples drive the sampler") {
  RngStream a(7, 4);
  RngStream b(7, 4);
  const HermitianSample p = sample_P(poisson_triple(1.0), 5, a);
  const HermitianSample q =
      sample_P_compound_poisson(ScalarSampler::from_measure(FiniteMeasure::point(1.0)), 1.0, 5, b);
  CHECK((p.entries() - q.entries()).norm() < 1e-12);

  RngStream c(7, 5);
  const HermitianSample dirac = sample_P(dirac_triple(-1.5), 3, c);
  CHECK(dirac.entries() == (-1.5 * Eigen::MatrixXcd::Identity(3, 3)).eval());

  const HermitianSample x(Eigen::MatrixXcd::Identity(2, 2));
  CHECK((x + x).entries() == (2.0 * Eigen::MatrixXcd::Identity(2, 2)).eval());
  CHECK_THROWS_AS(HermitianSample(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
  skew(0, 1) = 2.0;
  const HermitianSample sym{skew};
  CHECK(sym.entries()(0, 1) == cd(1.0, 0.0));
  CHECK(sym.entries()(1, 0) == cd(1.0, 0.0));
  CHECK_THROWS_AS(x + HermitianSample(Eigen::MatrixXcd::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("Fourier transform of a compound Poisson block") {
  // E exp(i Tr(A M)) = exp(d lambda (E_rho E exp(i x <Z, a>) - 1)).
  RngStream rng(7, 6);
  const int d = 3;
  const double lambda = 1.0;
  const std::vector<double> a = {0.3, -0.5, 1.1};
  const FiniteMeasure rho({{-1.0, 0.5}, {2.0, 0.5}});
  cd inner = 0.0;
  for (const Atom& at : rho.atoms()) {
    std::vector<double> scaled = a;
    for (double& v : scaled) v *= at.location;
    inner += at.weight * simplex_fourier(scaled);
  }
  const cd expected = std::exp(d * lambda * (inner - 1.0));

  const ScalarSampler jumps = ScalarSampler::from_measure(rho);
  const int n = 40000;
  cd sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXcd m = sample_P_compound_poisson(jumps, lambda, d, rng).entries();
    double phase = 0.0;
    for (int j = 0; j < d; ++j) phase += a[static_cast<std::size_t>(j)] * m(j, j).real();
    sum += std::exp(cd(0, phase));
  }
  CHECK(std::abs(sum / static_cast<double>(n) - expected) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sums of independent samples add triples") {
  // Second moment of (1/d) Tr M^2 for gaussian(0,1) + poisson(1) against the
  // free cumulants 1 + 1 and 1 + 0.
  RngStream rng(7, 7);
  const int d = 40;
  const int n = 400;
  double m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const HermitianSample s = sample_P(gaussian_triple(0.0, 1.0), d, rng) + sample_P(poisson_triple(1.0), d, rng);
    m2 += (s.entries() * s.entries()).trace().real() / d;
  }
  // kappa_1 = 1, kappa_2 = 2, so m2 = 2 + 1 plus O(1/d).
  CHECK(std::abs(m2 / n - 3.0) < 0.15);
}

TEST_CASE("one-dimensional samples") {
  RngStream rng(7, 8);
  CHECK(sample_P_gaussian(1.0, 0.0, 1, rng).entries()(0, 0) == cd(1.0, 0.0));
  const HermitianSample q = sample_Q(ScalarSampler::constant(-2.0), 1, rng);
  CHECK(std::abs(q.entries()(0, 0) - cd(-2.0, 0.0)) < 1e-15);
  const Eigen::MatrixXcd u = sample_haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-15);
  const Eigen::MatrixXcd big = sample_haar_unitary(50, rng);
  CHECK((big.adjoint() * big - Eigen::MatrixXcd::Identity(50, 50)).norm() < 1e-10);
}

TEST_CASE("unitary invariance of sample_Q") {
  RngStream a(7, 9), b(7, 9), other(7, 10);
  const ScalarSampler mu = ScalarSampler::normal(0.0, 1.0);
  const HermitianSample q = sample_Q(mu, 6, a);
  const Eigen::MatrixXcd v = sample_haar_unitary(6, other);
  const HermitianSample rotated(v * sample_Q(mu, 6, b).entries() * v.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> e1(q.entries()), e2(rotated.entries());
  CHECK((e1.eigenvalues() - e2.eigenvalues()).norm() < 1e-12);
}

TEST_CASE("mean trace equals the first cumulant") {
  RngStream rng(7, 11);
  const LevyTriple t = convolve(gaussian_triple(0.3, 0.5),
                                LevyTriple{0.2, FiniteMeasure({{-1.0, 0.2}, {2.0, 0.4}})});
  const double c1 = cumulants_from_triple(t, 1).at(1);
  const int d = 8;
  const int n = 4000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double tr = sample_P(t, d, rng).entries().trace().real() / d;
    s += tr;
    s2 += tr * tr;
  }
  const double mean = s / n;
  CHECK(std::abs(mean - c1) < 5 * std::sqrt((s2 / n - mean * mean) / n));
}

TEST_CASE("rank of the compound Poisson part") {
  RngStream rng(7, 12);
  const int d = 20;
  const double lambda = 0.3;
  const int n = 500;
  double mean_rank = 0.0;
  int above = 0;
  const double level = 0.5;
  for (int i = 0; i < n; ++i) {
    const HermitianSample p = sample_P_compound_poisson(ScalarSampler::constant(1.0), lambda, d, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.entries(), Eigen::EigenvaluesOnly);
    int rank = 0;
    for (int j = 0; j < d; ++j) rank += std::abs(es.eigenvalues()(j)) > 1e-9;
    mean_rank += rank;
    above += rank > d * level;
  }
  CHECK(mean_rank / n <= d * lambda * 1.1);
  CHECK(static_cast<double>(above) / n <= lambda / level);
}

TEST_CASE("sums of samples match the convolved triple") {
  const LevyTriple t1 = gaussian_triple(0.5, 1.0);
  const LevyTriple t2 = LevyTriple{0.0, FiniteMeasure({{-1.0, 0.25}, {1.5, 0.5}})};
  const int d = 30;
  const int n = 300;
  RngStream rng(7, 13);
  std::vector<double> sum_moments(4, 0.0), joint_moments(4, 0.0);
  std::vector<double> sum_sq(4, 0.0), joint_sq(4, 0.0);
  for (int i = 0; i < n; ++i) {
    const HermitianSample s = sample_P(t1, d, rng) + sample_P(t2, d, rng);
    const HermitianSample j = sample_P(convolve(t1, t2), d, rng);
    Eigen::MatrixXcd ps = s.entries(), pj = j.entries();
    for (int k = 0; k < 4; ++k) {
      const double a = ps.trace().real() / d;
      const double b = pj.trace().real() / d;
      sum_moments[k] += a;
      joint_moments[k] += b;
      sum_sq[k] += a * a;
      joint_sq[k] += b * b;
      ps = ps * s.entries();
      pj = pj * j.entries();
    }
  }
  for (int k = 0; k < 4; ++k) {
    const double ma = sum_moments[k] / n, mb = joint_moments[k] / n;
    const double se = std::sqrt((sum_sq[k] / n - ma * ma + joint_sq[k] / n - mb * mb) / n);
    CAPTURE(k);
    CHECK(std::abs(ma - mb) < 5 * se);
  }
}
