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

#ifndef BPLAB_SPECTRA_HPP
#define BPLAB_SPECTRA_HPP

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "bplab/cumulants.hpp"
#include "bplab/hermitian_model.hpp"
#include "bplab/levy.hpp"

namespace bplab {

// Finitely supported probability measure: sorted support, positive weights
// summing to one. Exactly equal support points are merged.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution(std::vector<double> points, std::vector<double> weights);

  // Uniform weights over the samples, with multiplicity.
  static EmpiricalDistribution uniform(std::vector<double> samples);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return support_.size(); }

 private:
  std::vector<double> support_;
  std::vector<double> weights_;
};

// Semicircle with mean m and variance r^2 (support [m - 2r, m + 2r]).
struct Semicircle {
  double mean = 0.0;
  double radius = 1.0;
};
// Cauchy law a dx / (pi (a^2 + x^2)).
struct CauchyLaw {
  double scale = 1.0;
};
// Free Poisson law with rate lambda and unit jumps.
struct MarchenkoPastur {
  double rate = 1.0;
};
struct PointMass {
  double location = 0.0;
};

using ReferenceLaw = std::variant<Semicircle, CauchyLaw, MarchenkoPastur, PointMass>;
using SpectralLaw = std::variant<EmpiricalDistribution, ReferenceLaw>;

// Throws std::invalid_argument for parameters outside their domains.
void validate(const ReferenceLaw& law);

class NoMomentsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class NoDensityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation grid for the Cauchy-transform distance: real parts from -R to R
// in steps of h, at each listed imaginary level (all >= 1).
struct GridSpec {
  double real_half_width = 8.0;
  double real_step = 0.05;
  std::vector<double> imaginary_levels{1.0, 2.0, 4.0};

  void validate() const;
};

// Eigenvalues with weight 1/d each.
EmpiricalDistribution esd(const HermitianSample& m);
// Throws std::invalid_argument unless m is Hermitian to 1e-10 relative.
EmpiricalDistribution esd(const Eigen::MatrixXcd& m);

MomentSequence empirical_moments(const EmpiricalDistribution& nu, std::size_t kmax);

// (1/d) Re Tr M^k for k = 1..kmax, from matrix powers; equals the moments of
// esd(m) without an eigensolve.
MomentSequence trace_moments(const HermitianSample& m, std::size_t kmax);

std::complex<double> cauchy_transform(const EmpiricalDistribution& nu, std::complex<double> z);
std::complex<double> cauchy_transform(const ReferenceLaw& law, std::complex<double> z);
std::complex<double> cauchy_transform(const SpectralLaw& law, std::complex<double> z);

// Max of |f_1(z) - f_2(z)| over the grid; a lower bound of the sup over Im z >= 1.
double cauchy_sup_distance(const SpectralLaw& a, const SpectralLaw& b, const GridSpec& grid = {});

// Density of the absolutely continuous part. Point masses throw NoDensityError.
double reference_density(const ReferenceLaw& law, double x);

// The atom of a reference law, if any: (location, mass).
std::optional<std::pair<double, double>> reference_atom(const ReferenceLaw& law);

// Moments via free cumulants; the Cauchy law throws NoMomentsError.
MomentSequence reference_moments(const ReferenceLaw& law, std::size_t kmax);

// Moments of the free counterpart of the classical law with triple t.
MomentSequence psi_image_moments(const LevyTriple& t, std::size_t kmax);

struct HistogramBin {
  double center;
  double mass;
};

// `bins` equal bins over `range` (default: the support's range). Points outside
// the range are counted in the nearest edge bin so that total mass is kept.
std::vector<HistogramBin> histogram(const EmpiricalDistribution& nu, int bins,
                                    std::optional<std::pair<double, double>> range = std::nullopt);

// Kolmogorov-Smirnov statistic of a sample against a continuous or discrete CDF.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

}  // namespace bplab

#endif  // BPLAB_SPECTRA_HPP
