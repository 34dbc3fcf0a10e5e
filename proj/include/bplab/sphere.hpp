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

#ifndef BPLAB_SPHERE_HPP
#define BPLAB_SPHERE_HPP

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "bplab/levy.hpp"
#include "bplab/rng.hpp"

namespace bplab {

class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A unit vector of C^d.
struct SphereVector {
  Eigen::VectorXcd coords;

  int dim() const { return static_cast<int>(coords.size()); }
  // Z = (|u_1|^2, ..., |u_d|^2), a point of the standard simplex.
  Eigen::VectorXd squared_moduli() const { return coords.cwiseAbs2(); }
};

// Normalised standard complex Gaussian vector; uniform on the unit sphere.
SphereVector sample_sphere_vector(int d, RngStream& rng);

// E |u_1|^{2 alpha_1} ... |u_d|^{2 alpha_d} = (d-1)! prod(alpha_i!) / (s+d-1)!,
// where d = alpha.size() and s = sum(alpha).
double sphere_moment(std::span<const int> alpha);

// The uniform bound (s!)^s (d-1)! / (s+d-1)! on the moments above.
double sphere_moment_bound(int d, int s);

// Minimum pairwise gap accepted by simplex_fourier.
inline constexpr double kSimplexGapTolerance = 1e-8;

// E exp(i <a, Z>) for Z uniform on the simplex, by the partial-fraction
// formula (d-1)! sum_j e^{i a_j} / prod_{k != j} i (a_j - a_k). Written with
// i (a_k - a_j) in the denominator the overall sign is (-1)^d, not -1. Needs
// d >= 2 and pairwise distinct entries; throws DegenerateInputError otherwise.
std::complex<double> simplex_fourier(std::span<const double> a);

struct FourierEstimate {
  std::complex<double> value;           // exp(mean exponent)
  std::complex<double> exponent_mean;   // mean of d psi(<Z, a>)
  double exponent_stderr = 0.0;         // standard error of exponent_mean
  double value_stderr = 0.0;            // |value| * exponent_stderr (delta method)
};

// Monte Carlo estimate of E exp(i Tr(A M)) for M ~ P_d^mu, where A is any
// Hermitian matrix with spectrum eigs_a and d = eigs_a.size(). Only the
// spectrum matters by unitary invariance.
FourierEstimate pd_fourier(const LevyTriple& t, std::span<const double> eigs_a, int n_mc,
                           RngStream& rng);

}  // namespace bplab

#endif  // BPLAB_SPHERE_HPP
