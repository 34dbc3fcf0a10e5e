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

#ifndef BPLAB_LEVY_HPP
#define BPLAB_LEVY_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "bplab/cumulants.hpp"

namespace bplab {

struct Atom {
  double location;
  double weight;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A nonnegative measure with finitely many atoms, sorted by location. Atoms
// whose locations agree within kMergeTolerance are merged; zero-weight atoms
// are dropped.
class FiniteMeasure {
 public:
  static constexpr double kMergeTolerance = 1e-12;

  FiniteMeasure() = default;
  // Throws std::invalid_argument on negative or non-finite entries.
  explicit FiniteMeasure(std::vector<Atom> atoms);

  static FiniteMeasure point(double location, double weight = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const { return total_mass_; }
  // Weight of the atom at exactly 0 (after merging).
  double mass_at_zero() const;

  FiniteMeasure operator+(const FiniteMeasure& other) const;
  FiniteMeasure scaled(double factor) const;

 private:
  std::vector<Atom> atoms_;
  double total_mass_ = 0.0;
};

// The pair (gamma, G) of the Levy-Khintchine representation
//   psi(x) = i gamma x + int (e^{ixu} - 1 - ixu/(1+u^2)) (1+u^2)/u^2 dG(u),
// with the integrand equal to -x^2/2 at u = 0. It determines both the
// classical law and its free counterpart.
struct LevyTriple {
  double gamma = 0.0;
  FiniteMeasure measure;

  double gaussian_variance() const { return measure.mass_at_zero(); }
};

// Jump intensity, jump law and the drift a_t produced by truncation.
struct CompoundPoissonParams {
  double lambda = 0.0;
  FiniteMeasure rho;
  double drift_correction = 0.0;
};

struct TruncatedTriple {
  LevyTriple inner;
  CompoundPoissonParams tail;
};

// Integrand of the Levy exponent for a single atom at u.
std::complex<double> levy_integrand(double x, double u);

std::complex<double> levy_exponent(const LevyTriple& t, double x);

// c_1 = gamma + int u dG, c_k = int u^{k-2} (1+u^2) dG for k >= 2.
CumulantSequence cumulants_from_triple(const LevyTriple& t, std::size_t kmax);

// The triple of the compound Poisson law with intensity lambda and jump law rho.
LevyTriple compound_poisson_triple(const FiniteMeasure& rho, double lambda);

// Splits off the atoms with |u| > cut as a compound Poisson part; convolving
// the two pieces back gives the original triple.
TruncatedTriple truncate(const LevyTriple& t, double cut);

LevyTriple convolve(const LevyTriple& a, const LevyTriple& b);

bool is_symmetric(const LevyTriple& t, double tol = 1e-12);
bool is_symmetric(const FiniteMeasure& m, double tol = 1e-12);

// Fourier transform of a probability measure from its atoms.
std::complex<double> fourier_transform(const FiniteMeasure& rho, double x);

LevyTriple gaussian_triple(double mean, double variance);
LevyTriple poisson_triple(double lambda);
LevyTriple dirac_triple(double a);
// Discretised Cauchy law C_a: G = a / (pi (1 + u^2)) du on [-1000a, 1000a]
// with midpoint nodes uniform in atan(u), plus the mass of both tails lumped
// into atoms at the window edges.
LevyTriple cauchy_triple(double a, int nodes);

}  // namespace bplab

#endif  // BPLAB_LEVY_HPP
