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

#include "bplab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace bplab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Trapezoid nodes for the Marchenko-Pastur transform in the angle variable;
// the integrand is smooth and periodic there, so convergence is geometric.
constexpr int kMarchenkoPasturNodes = 4096;

void check_upper_half_plane(std::complex<double> z) {
  if (!(z.imag() > 0.0)) throw std::invalid_argument("Cauchy transform needs Im z > 0");
}

std::complex<double> semicircle_transform(const Semicircle& law, std::complex<double> z) {
  const double r2 = law.radius * law.radius;
  const std::complex<double> shifted = z - law.mean;
  std::complex<double> root = std::sqrt(shifted * shifted - 4.0 * r2);
  std::complex<double> f = (-shifted + root) / (2.0 * r2);
  if (f.imag() < 0.0) f = (-shifted - root) / (2.0 * r2);
  return f;
}

std::complex<double> marchenko_pastur_transform(const MarchenkoPastur& law,
                                                std::complex<double> z) {
  const double lambda = law.rate;
  std::complex<double> acc(0.0, 0.0);
  if (lambda < 1.0) acc += (1.0 - lambda) / (0.0 - z);
  if (lambda == 0.0) return acc;
  // x = c - r cos(theta) on [0, pi]; sqrt((b - x)(x - a)) dx = r^2 sin^2 dtheta.
  const double c = 1.0 + lambda;
  const double r = 2.0 * std::sqrt(lambda);
  const double step = std::numbers::pi / kMarchenkoPasturNodes;
  for (int j = 1; j < kMarchenkoPasturNodes; ++j) {
    const double theta = j * step;
    const double s = std::sin(theta);
    const double x = c - r * std::cos(theta);
    acc += (r * r * s * s / (2.0 * std::numbers::pi * x)) / (x - z) * step;
  }
  return acc;
}

}  // namespace

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> points,
                                             std::vector<double> weights) {
  if (points.empty() || points.size() != weights.size()) {
    throw std::invalid_argument("empirical distribution needs matching nonempty points/weights");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&points](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  double total = 0.0;
  for (std::size_t i : order) {
    if (!std::isfinite(points[i]) || !(weights[i] > 0.0)) {
      throw std::invalid_argument("empirical distribution needs finite points, positive weights");
    }
    total += weights[i];
    if (!support_.empty() && support_.back() == points[i]) {
      weights_.back() += weights[i];
    } else {
      support_.push_back(points[i]);
      weights_.push_back(weights[i]);
    }
  }
  if (std::abs(total - 1.0) > 1e-12 * static_cast<double>(points.size())) {
    throw std::invalid_argument("empirical distribution weights must sum to 1");
  }
}

EmpiricalDistribution EmpiricalDistribution::uniform(std::vector<double> samples) {
  const double w = 1.0 / static_cast<double>(samples.size());
  std::vector<double> weights(samples.size(), w);
  return {std::move(samples), std::move(weights)};
}

void validate(const ReferenceLaw& law) {
  std::visit(Overloaded{
                 [](const Semicircle& s) {
                   if (!(s.radius > 0.0) || !std::isfinite(s.mean)) {
                     throw std::invalid_argument("semicircle needs r > 0");
                   }
                 },
                 [](const CauchyLaw& c) {
                   if (!(c.scale > 0.0)) throw std::invalid_argument("cauchy needs a > 0");
                 },
                 [](const MarchenkoPastur& m) {
                   if (!(m.rate >= 0.0)) throw std::invalid_argument("marchenko-pastur needs lambda >= 0");
                 },
                 [](const PointMass& p) {
                   if (!std::isfinite(p.location)) throw std::invalid_argument("dirac needs a finite location");
                 },
             },
             law);
}

void GridSpec::validate() const {
  if (!(real_half_width >= 0.0) || !(real_step > 0.0) || imaginary_levels.empty()) {
    throw std::invalid_argument("grid needs R >= 0, h > 0 and at least one imaginary level");
  }
  for (double y : imaginary_levels) {
    if (!(y >= 1.0)) throw std::invalid_argument("grid imaginary levels must be >= 1");
  }
}

EmpiricalDistribution esd(const HermitianSample& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return EmpiricalDistribution::uniform(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

EmpiricalDistribution esd(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw std::invalid_argument("esd needs a square matrix");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-10 * scale) {
    throw std::invalid_argument("esd needs a Hermitian matrix");
  }
  return esd(HermitianSample(m));
}

MomentSequence empirical_moments(const EmpiricalDistribution& nu, std::size_t kmax) {
  if (kmax < 1) throw std::invalid_argument("empirical_moments needs kmax >= 1");
  const auto& x = nu.support();
  const auto& w = nu.weights();
  std::vector<double> m(kmax, 0.0);
  // Summing mirrored pairs from both ends keeps odd moments of symmetric
  // laws at exactly zero.
  auto add_point = [&](std::size_t i, std::vector<double>& acc) {
    double power = 1.0;
    for (std::size_t k = 0; k < kmax; ++k) {
      power *= x[i];
      acc[k] = w[i] * power;
    }
  };
  std::vector<double> left(kmax);
  std::vector<double> right(kmax);
  std::size_t lo = 0;
  std::size_t hi = x.size();
  while (lo < hi) {
    add_point(lo, left);
    if (lo + 1 < hi) {
      add_point(hi - 1, right);
      for (std::size_t k = 0; k < kmax; ++k) m[k] += left[k] + right[k];
    } else {
      for (std::size_t k = 0; k < kmax; ++k) m[k] += left[k];
    }
    ++lo;
    --hi;
  }
  return MomentSequence(std::move(m));
}

MomentSequence trace_moments(const HermitianSample& sample, std::size_t kmax) {
  if (kmax < 1) throw std::invalid_argument("trace_moments needs kmax >= 1");
  const Eigen::MatrixXcd& m = sample.entries();
  const double d = sample.dim();
  std::vector<Eigen::MatrixXcd> powers{m};  // powers[j] = M^{j+1}
  const std::size_t needed = (kmax + 1) / 2;
  while (powers.size() < needed) powers.push_back(powers.back() * m);
  std::vector<double> out(kmax);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const std::size_t a = (k + 1) / 2;
    const std::size_t b = k / 2;
    double trace = 0.0;
    if (b == 0) {
      trace = powers[a - 1].trace().real();
    } else {
      // Tr(A B) = sum_ij A_ij B_ji; both powers are Hermitian, so B_ji = conj(B_ij).
      trace = (powers[a - 1].array() * powers[b - 1].conjugate().array()).sum().real();
    }
    out[k - 1] = trace / d;
  }
  return MomentSequence(std::move(out));
}

std::complex<double> cauchy_transform(const EmpiricalDistribution& nu, std::complex<double> z) {
  check_upper_half_plane(z);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < nu.size(); ++i) acc += nu.weights()[i] / (nu.support()[i] - z);
  return acc;
}

std::complex<double> cauchy_transform(const ReferenceLaw& law, std::complex<double> z) {
  check_upper_half_plane(z);
  validate(law);
  return std::visit(Overloaded{
                        [z](const Semicircle& s) { return semicircle_transform(s, z); },
                        [z](const CauchyLaw& c) {
                          return -1.0 / (z + std::complex<double>(0.0, c.scale));
                        },
                        [z](const MarchenkoPastur& m) { return marchenko_pastur_transform(m, z); },
                        [z](const PointMass& p) { return 1.0 / (p.location - z); },
                    },
                    law);
}

std::complex<double> cauchy_transform(const SpectralLaw& law, std::complex<double> z) {
  return std::visit([z](const auto& l) { return cauchy_transform(l, z); }, law);
}

double cauchy_sup_distance(const SpectralLaw& a, const SpectralLaw& b, const GridSpec& grid) {
  grid.validate();
  const int steps = static_cast<int>(std::floor(2.0 * grid.real_half_width / grid.real_step + 1e-9));
  double worst = 0.0;
  for (double y : grid.imaginary_levels) {
    for (int j = 0; j <= steps; ++j) {
      const std::complex<double> z(-grid.real_half_width + j * grid.real_step, y);
      worst = std::max(worst, std::abs(cauchy_transform(a, z) - cauchy_transform(b, z)));
    }
  }
  return worst;
}

double reference_density(const ReferenceLaw& law, double x) {
  validate(law);
  return std::visit(
      Overloaded{
          [x](const Semicircle& s) {
            const double r2 = s.radius * s.radius;
            const double gap = 4.0 * r2 - (x - s.mean) * (x - s.mean);
            return gap > 0.0 ? std::sqrt(gap) / (2.0 * std::numbers::pi * r2) : 0.0;
          },
          [x](const CauchyLaw& c) {
            return c.scale / (std::numbers::pi * (c.scale * c.scale + x * x));
          },
          [x](const MarchenkoPastur& m) {
            const double lo = std::pow(1.0 - std::sqrt(m.rate), 2);
            const double hi = std::pow(1.0 + std::sqrt(m.rate), 2);
            if (m.rate == 0.0 || x <= lo || x >= hi || x <= 0.0) return 0.0;
            return std::sqrt((hi - x) * (x - lo)) / (2.0 * std::numbers::pi * x);
          },
          [](const PointMass&) -> double {
            throw NoDensityError("a point mass has no density");
          },
      },
      law);
}

std::optional<std::pair<double, double>> reference_atom(const ReferenceLaw& law) {
  validate(law);
  if (const auto* p = std::get_if<PointMass>(&law)) return std::pair{p->location, 1.0};
  if (const auto* m = std::get_if<MarchenkoPastur>(&law); m && m->rate < 1.0) {
    return std::pair{0.0, 1.0 - m->rate};
  }
  return std::nullopt;
}

MomentSequence reference_moments(const ReferenceLaw& law, std::size_t kmax) {
  validate(law);
  if (kmax < 1) throw std::invalid_argument("reference_moments needs kmax >= 1");
  std::vector<double> free_cumulants(kmax, 0.0);
  std::visit(Overloaded{
                 [&](const Semicircle& s) {
                   free_cumulants[0] = s.mean;
                   if (kmax > 1) free_cumulants[1] = s.radius * s.radius;
                 },
                 [](const CauchyLaw&) { throw NoMomentsError("the Cauchy law has no moments"); },
                 [&](const MarchenkoPastur& m) {
                   std::fill(free_cumulants.begin(), free_cumulants.end(), m.rate);
                 },
                 [&](const PointMass& p) { free_cumulants[0] = p.location; },
             },
             law);
  return moments_from_cumulants(CumulantSequence(CumulantKind::kFree, std::move(free_cumulants)));
}

MomentSequence psi_image_moments(const LevyTriple& t, std::size_t kmax) {
  return moments_from_cumulants(bp_transport(cumulants_from_triple(t, kmax)));
}

std::vector<HistogramBin> histogram(const EmpiricalDistribution& nu, int bins,
                                    std::optional<std::pair<double, double>> range) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  auto [lo, hi] = range.value_or(std::pair{nu.support().front(), nu.support().back()});
  if (!(hi >= lo)) throw std::invalid_argument("histogram range is empty");
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) out[static_cast<std::size_t>(b)] = {lo + (b + 0.5) * width, 0.0};
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const double pos = (nu.support()[i] - lo) / width;
    const int b = std::clamp(static_cast<int>(std::floor(pos)), 0, bins - 1);
    out[static_cast<std::size_t>(b)].mass += nu.weights()[i];
  }
  return out;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance needs samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double x = samples[i];
    const double below = cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
    worst = std::max(worst, std::abs(static_cast<double>(i) / n - below));
    worst = std::max(worst, std::abs(static_cast<double>(j) / n - cdf(x)));
    i = j;
  }
  return worst;
}

}  // namespace bplab
