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

#include "bplab/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bplab {

SphereVector sample_sphere_vector(int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be positive");
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  v /= v.norm();
  return {std::move(v)};
}

double sphere_moment(std::span<const int> alpha) {
  if (alpha.empty()) throw std::invalid_argument("sphere_moment needs d >= 1");
  const int d = static_cast<int>(alpha.size());
  double numerator = 1.0;
  int s = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("sphere_moment exponents must be nonnegative");
    for (int j = 2; j <= a; ++j) numerator *= j;
    s += a;
  }
  // (s+d-1)! / (d-1)! = d (d+1) ... (d+s-1)
  double rising = 1.0;
  for (int j = 0; j < s; ++j) rising *= d + j;
  return numerator / rising;
}

double sphere_moment_bound(int d, int s) {
  if (d < 1 || s < 0) throw std::invalid_argument("sphere_moment_bound: bad arguments");
  double s_factorial = 1.0;
  for (int j = 2; j <= s; ++j) s_factorial *= j;
  double rising = 1.0;
  for (int j = 0; j < s; ++j) rising *= d + j;
  return std::pow(s_factorial, s) / rising;
}

std::complex<double> simplex_fourier(std::span<const double> a) {
  const std::size_t d = a.size();
  if (d < 2) throw std::invalid_argument("simplex_fourier needs d >= 2");
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      if (std::abs(a[j] - a[k]) < kSimplexGapTolerance) {
        throw DegenerateInputError("simplex_fourier: entries must be pairwise distinct");
      }
    }
  }
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    std::complex<double> denom(1.0, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) denom *= i * (a[j] - a[k]);
    }
    sum += std::polar(1.0, a[j]) / denom;
  }
  double factorial = 1.0;
  for (std::size_t j = 2; j < d; ++j) factorial *= static_cast<double>(j);
  return factorial * sum;
}

FourierEstimate pd_fourier(const LevyTriple& t, std::span<const double> eigs_a, int n_mc,
                           RngStream& rng) {
  if (n_mc < 1) throw std::invalid_argument("pd_fourier needs at least one draw");
  const int d = static_cast<int>(eigs_a.size());
  if (d < 1) throw std::invalid_argument("pd_fourier needs a nonempty spectrum");
  FourierEstimate out;
  if (std::all_of(eigs_a.begin(), eigs_a.end(), [](double x) { return x == 0.0; })) {
    out.value = 1.0;
    return out;
  }
  const Eigen::Map<const Eigen::VectorXd> a(eigs_a.data(), d);
  std::complex<double> sum(0.0, 0.0);
  double sum_sq = 0.0;  // of |sample|^2
  for (int n = 0; n < n_mc; ++n) {
    const Eigen::VectorXd z = sample_sphere_vector(d, rng).squared_moduli();
    const std::complex<double> sample = static_cast<double>(d) * levy_exponent(t, z.dot(a));
    sum += sample;
    sum_sq += std::norm(sample);
  }
  const double n = n_mc;
  out.exponent_mean = sum / n;
  if (n_mc > 1) {
    const double variance = std::max(0.0, (sum_sq - n * std::norm(out.exponent_mean)) / (n - 1.0));
    out.exponent_stderr = std::sqrt(variance / n);
  }
  out.value = std::exp(out.exponent_mean);
  out.value_stderr = std::abs(out.value) * out.exponent_stderr;
  return out;
}

}  // namespace bplab
