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

#include "bplab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bplab {

ScalarSampler::ScalarSampler(std::string description, bool symmetric, DrawFn draw)
    : description_(std::move(description)), symmetric_(symmetric), draw_(std::move(draw)) {
  if (!draw_) throw std::invalid_argument("scalar sampler needs a draw function");
}

ScalarSampler ScalarSampler::constant(double c) {
  std::ostringstream name;
  name << "constant(" << c << ")";
  return {name.str(), c == 0.0, [c](RngStream&) { return c; }};
}

ScalarSampler ScalarSampler::normal(double mean, double variance) {
  if (!(variance >= 0.0)) throw std::invalid_argument("normal sampler needs variance >= 0");
  std::ostringstream name;
  name << "normal(" << mean << ", " << variance << ")";
  const double sd = std::sqrt(variance);
  return {name.str(), mean == 0.0, [mean, sd](RngStream& rng) { return mean + sd * rng.normal(); }};
}

ScalarSampler ScalarSampler::from_measure(const FiniteMeasure& probability) {
  if (probability.empty() || std::abs(probability.total_mass() - 1.0) > 1e-9) {
    throw std::invalid_argument("from_measure needs a probability measure");
  }
  std::vector<double> locations;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (const Atom& a : probability.atoms()) {
    acc += a.weight;
    locations.push_back(a.location);
    cumulative.push_back(acc);
  }
  const double total = acc;
  std::ostringstream name;
  name << "discrete(" << locations.size() << " atoms)";
  return {name.str(), is_symmetric(probability),
          [locations = std::move(locations), cumulative = std::move(cumulative),
           total](RngStream& rng) {
            const double u = rng.uniform() * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            if (it == cumulative.end()) --it;
            return locations[static_cast<std::size_t>(it - cumulative.begin())];
          }};
}

double default_inner_cut(const LevyTriple& t) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const Atom& a : t.measure.atoms()) {
    if (a.location != 0.0) smallest = std::min(smallest, std::abs(a.location));
  }
  return std::isfinite(smallest) ? 0.5 * smallest : 1.0;
}

SamplingPlan plan_sampling(const LevyTriple& t, std::optional<double> cut) {
  SamplingPlan plan;
  plan.cut = cut.value_or(default_inner_cut(t));
  if (!(plan.cut > 0.0)) throw std::invalid_argument("inner cut must be positive");
  TruncatedTriple split = truncate(t, plan.cut);
  // First two cumulants of the inner triple; the drift a_t is already in
  // split.inner.gamma, so the tail is sampled without a compensator.
  plan.gaussian_mean = split.inner.gamma;
  for (const Atom& a : split.inner.measure.atoms()) {
    const double u = a.location;
    plan.gaussian_mean += u * a.weight;
    const double second = (1.0 + u * u) * a.weight;
    plan.gaussian_variance += second;
    if (u != 0.0) plan.substituted_variance += second;
  }
  plan.tail = std::move(split.tail);
  return plan;
}

}  // namespace bplab
