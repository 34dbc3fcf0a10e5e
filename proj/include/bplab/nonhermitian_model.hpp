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

#ifndef BPLAB_NONHERMITIAN_MODEL_HPP
#define BPLAB_NONHERMITIAN_MODEL_HPP

#include <Eigen/Dense>

#include "bplab/hermitian_model.hpp"
#include "bplab/levy.hpp"
#include "bplab/rng.hpp"
#include "bplab/sampler.hpp"
#include "bplab/spectra.hpp"

namespace bplab {

// A d x d complex matrix with no symmetry constraint.
class ComplexMatrixSample {
 public:
  explicit ComplexMatrixSample(Eigen::MatrixXcd m);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  ComplexMatrixSample operator+(const ComplexMatrixSample& other) const;

 private:
  Eigen::MatrixXcd entries_;
};

// U diag(X_1, ..., X_d) V with U, V independent Haar unitaries.
ComplexMatrixSample sample_K(const ScalarSampler& mu, int d, RngStream& rng);

// Complex Ginibre: real and imaginary parts of each entry N(0, scale / (2d)).
ComplexMatrixSample sample_L_gaussian(int d, RngStream& rng, double scale = 1.0);

// sum_{k=1}^{N} x_k u_k v_k^*, N ~ Poisson(d lambda), u_k and v_k independent
// uniform unit vectors. rho must be declared symmetric.
ComplexMatrixSample sample_L_compound_poisson(const ScalarSampler& rho, double lambda, int d,
                                              RngStream& rng);

// L_d^mu for a symmetric triple: a Ginibre block carrying G({0}) plus the
// small-jump variance, and an independent compound Poisson block for the
// atoms with |u| > inner_cut.
ComplexMatrixSample sample_L(const LevyTriple& t, int d, RngStream& rng,
                             const SampleOptions& opts = {});
ComplexMatrixSample sample_L(const SamplingPlan& plan, int d, RngStream& rng);

// Weight 1/(2d) at each +s_i and -s_i, s_i the singular values of m.
EmpiricalDistribution symmetrized_singular_law(const ComplexMatrixSample& m);

// (1/d) Tr (M^* M)^j for j = 1..jmax: the even moments m_2 ... m_{2 jmax} of
// the symmetrized singular law, from matrix powers.
std::vector<double> gram_trace_moments(const ComplexMatrixSample& m, std::size_t jmax);

}  // namespace bplab

#endif  // BPLAB_NONHERMITIAN_MODEL_HPP
