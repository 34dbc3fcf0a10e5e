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

#include "bplab/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bplab {

namespace {

constexpr double kSeriesThreshold = 1e-4;

// 2 (e^w - 1 - w) / w^2 for w = i x u, through fourth order in w.
std::complex<double> remainder_series(std::complex<double> w) {
  return 1.0 + w * (1.0 / 3.0 + w * (1.0 / 12.0 + w * (1.0 / 60.0 + w / 360.0)));
}

}  // namespace

FiniteMeasure::FiniteMeasure(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.location) || !std::isfinite(a.weight) || a.weight < 0.0) {
      throw std::invalid_argument("measure atoms need finite locations and nonnegative weights");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (const Atom& a : atoms) {
    if (a.weight == 0.0) continue;
    if (!atoms_.empty() && a.location - atoms_.back().location <= kMergeTolerance) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
  for (const Atom& a : atoms_) total_mass_ += a.weight;
}

FiniteMeasure FiniteMeasure::point(double location, double weight) {
  return FiniteMeasure({{location, weight}});
}

double FiniteMeasure::mass_at_zero() const {
  for (const Atom& a : atoms_) {
    if (a.location == 0.0) return a.weight;
  }
  return 0.0;
}

FiniteMeasure FiniteMeasure::operator+(const FiniteMeasure& other) const {
  std::vector<Atom> all(atoms_);
  all.insert(all.end(), other.atoms_.begin(), other.atoms_.end());
  return FiniteMeasure(std::move(all));
}

FiniteMeasure FiniteMeasure::scaled(double factor) const {
  std::vector<Atom> out(atoms_);
  for (Atom& a : out) a.weight *= factor;
  return FiniteMeasure(std::move(out));
}

std::complex<double> levy_integrand(double x, double u) {
  const double w = x * u;
  if (u == 0.0) return {-0.5 * x * x, 0.0};
  if (std::abs(w) < kSeriesThreshold) {
    return std::complex<double>(0.0, w) -
           0.5 * x * x * (1.0 + u * u) * remainder_series({0.0, w});
  }
  // e^{iw} - 1 - iw with the real part written as -2 sin^2(w/2).
  const double half_sin = std::sin(0.5 * w);
  const std::complex<double> excess(-2.0 * half_sin * half_sin, std::sin(w) - w);
  return std::complex<double>(0.0, w) + excess * ((1.0 + u * u) / (u * u));
}

std::complex<double> levy_exponent(const LevyTriple& t, double x) {
  if (x == 0.0) return {0.0, 0.0};
  std::complex<double> acc(0.0, t.gamma * x);
  for (const Atom& a : t.measure.atoms()) acc += a.weight * levy_integrand(x, a.location);
  return acc;
}

CumulantSequence cumulants_from_triple(const LevyTriple& t, std::size_t kmax) {
  if (kmax < 1) throw std::invalid_argument("cumulants_from_triple needs kmax >= 1");
  std::vector<double> c(kmax, 0.0);
  c[0] = t.gamma;
  for (const Atom& a : t.measure.atoms()) {
    c[0] += a.location * a.weight;
    const double base = (1.0 + a.location * a.location) * a.weight;
    double power = 1.0;  // u^{k-2}
    for (std::size_t k = 2; k <= kmax; ++k) {
      c[k - 1] += power * base;
      power *= a.location;
    }
  }
  return {CumulantKind::kClassical, std::move(c)};
}

LevyTriple compound_poisson_triple(const FiniteMeasure& rho, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("compound Poisson intensity must be finite and nonnegative");
  }
  if (lambda == 0.0) return {};
  if (std::abs(rho.total_mass() - 1.0) > 1e-9) {
    throw std::invalid_argument("compound Poisson jump law must be a probability measure");
  }
  LevyTriple out;
  std::vector<Atom> atoms;
  for (const Atom& a : rho.atoms()) {
    const double u = a.location;
    const double denom = 1.0 + u * u;
    out.gamma += lambda * a.weight * u / denom;
    atoms.push_back({u, lambda * a.weight * u * u / denom});
  }
  out.measure = FiniteMeasure(std::move(atoms));
  return out;
}

TruncatedTriple truncate(const LevyTriple& t, double cut) {
  if (!(cut > 0.0)) throw std::invalid_argument("truncation level must be positive");
  std::vector<Atom> inner_atoms;
  std::vector<Atom> jump_atoms;
  double lambda = 0.0;
  double drift = 0.0;
  for (const Atom& a : t.measure.atoms()) {
    const double u = a.location;
    if (std::abs(u) <= cut) {
      inner_atoms.push_back(a);
      continue;
    }
    const double intensity = (1.0 + u * u) / (u * u) * a.weight;
    lambda += intensity;
    drift -= a.weight / u;
    jump_atoms.push_back({u, intensity});
  }
  TruncatedTriple out;
  out.inner.gamma = t.gamma + drift;
  out.inner.measure = FiniteMeasure(std::move(inner_atoms));
  out.tail.lambda = lambda;
  out.tail.drift_correction = drift;
  if (lambda > 0.0) {
    for (Atom& a : jump_atoms) a.weight /= lambda;
    out.tail.rho = FiniteMeasure(std::move(jump_atoms));
  }
  return out;
}

LevyTriple convolve(const LevyTriple& a, const LevyTriple& b) {
  return {a.gamma + b.gamma, a.measure + b.measure};
}

bool is_symmetric(const FiniteMeasure& m, double tol) {
  const auto& atoms = m.atoms();
  std::size_t lo = 0;
  std::size_t hi = atoms.size();
  while (lo < hi) {
    const Atom& left = atoms[lo];
    const Atom& right = atoms[hi - 1];
    if (lo == hi - 1) return std::abs(left.location) <= tol;
    if (std::abs(left.location + right.location) > tol ||
        std::abs(left.weight - right.weight) > tol) {
      return false;
    }
    ++lo;
    --hi;
  }
  return true;
}

bool is_symmetric(const LevyTriple& t, double tol) {
  if (tol < 0.0) throw std::invalid_argument("symmetry tolerance must be nonnegative");
  return std::abs(t.gamma) <= tol && is_symmetric(t.measure, tol);
}

std::complex<double> fourier_transform(const FiniteMeasure& rho, double x) {
  std::complex<double> acc(0.0, 0.0);
  for (const Atom& a : rho.atoms()) acc += a.weight * std::polar(1.0, x * a.location);
  return acc;
}

LevyTriple gaussian_triple(double mean, double variance) {
  if (!(variance >= 0.0) || !std::isfinite(mean) || !std::isfinite(variance)) {
    throw std::invalid_argument("gaussian needs a finite mean and nonnegative variance");
  }
  return {mean, variance > 0.0 ? FiniteMeasure::point(0.0, variance) : FiniteMeasure()};
}

LevyTriple poisson_triple(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson needs a finite nonnegative intensity");
  }
  return compound_poisson_triple(FiniteMeasure::point(1.0), lambda);
}

LevyTriple dirac_triple(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("dirac location must be finite");
  return {a, FiniteMeasure()};
}

LevyTriple cauchy_triple(double a, int nodes) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("cauchy needs a > 0");
  if (nodes < 8) throw std::invalid_argument("cauchy discretisation needs at least 8 nodes");
  // With u = tan(theta) the measure a/(pi(1+u^2)) du becomes (a/pi) dtheta.
  const double window = 1000.0 * a;
  const double theta_max = std::atan(window);
  const double step = 2.0 * theta_max / nodes;
  const double node_mass = a / std::numbers::pi * step;
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(nodes) + 2);
  for (int j = 0; j < nodes; ++j) {
    const double theta = -theta_max + (j + 0.5) * step;
    // Symmetric nodes are mirrored exactly so the measure stays symmetric.
    const double u = (2 * j + 1 == nodes) ? 0.0 : std::tan(theta);
    atoms.push_back({u, node_mass});
  }
  for (int j = 0; j < nodes / 2; ++j) {
    atoms[static_cast<std::size_t>(nodes - 1 - j)].location = -atoms[static_cast<std::size_t>(j)].location;
  }
  const double tail_mass = a / std::numbers::pi * (std::numbers::pi / 2.0 - theta_max);
  atoms.push_back({-window, tail_mass});
  atoms.push_back({window, tail_mass});
  return {0.0, FiniteMeasure(std::move(atoms))};
}

}  // namespace bplab
