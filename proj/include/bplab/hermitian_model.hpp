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

#ifndef BPLAB_HERMITIAN_MODEL_HPP
#define BPLAB_HERMITIAN_MODEL_HPP

#include <optional>

#include <Eigen/Dense>

#include "bplab/levy.hpp"
#include "bplab/rng.hpp"
#include "bplab/sampler.hpp"

namespace bplab {

// A d x d Hermitian matrix. Construction symmetrises (M + M^*) / 2.
class HermitianSample {
 public:
  explicit HermitianSample(const Eigen::MatrixXcd& m);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  HermitianSample operator+(const HermitianSample& other) const;

 private:
  Eigen::MatrixXcd entries_;
};

struct SampleOptions {
  // Atoms of G with 0 < |u| <= inner_cut are replaced by a Gaussian with the
  // same first two cumulants. Defaults to default_inner_cut(t), which keeps
  // atomic triples exact.
  std::optional<double> inner_cut;
};

// Haar unitary: QR of a complex Ginibre matrix with the phases of diag(R)
// moved into Q.
Eigen::MatrixXcd sample_haar_unitary(int d, RngStream& rng);

// U diag(X_1, ..., X_d) U^* with X_i i.i.d. from mu and U Haar.
HermitianSample sample_Q(const ScalarSampler& mu, int d, RngStream& rng);

// P_d for N(mean, var): mean I + sqrt(var) (N + X / sqrt(d+1) I), N from
// GUE(d, 1/(d+1)) under the trace inner product and X standard normal.
HermitianSample sample_P_gaussian(double mean, double var, int d, RngStream& rng);

// sum_{k=1}^{N} x_k u_k u_k^*, N ~ Poisson(d lambda), x_k i.i.d. from rho, u_k
// uniform on the unit sphere of C^d.
HermitianSample sample_P_compound_poisson(const ScalarSampler& rho, double lambda, int d,
                                          RngStream& rng);

// P_d^mu for an arbitrary triple: the Gaussian block of plan_sampling plus an
// independent compound Poisson block for the large atoms.
HermitianSample sample_P(const LevyTriple& t, int d, RngStream& rng,
                         const SampleOptions& opts = {});

// Same, with a precomputed plan.
HermitianSample sample_P(const SamplingPlan& plan, int d, RngStream& rng);

}  // namespace bplab

#endif  // BPLAB_HERMITIAN_MODEL_HPP
