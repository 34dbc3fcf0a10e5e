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

#ifndef BPLAB_SAMPLER_HPP
#define BPLAB_SAMPLER_HPP

#include <functional>
#include <optional>
#include <string>

#include "bplab/levy.hpp"
#include "bplab/rng.hpp"

namespace bplab {

// A real-valued law that can be drawn from a stream, plus a short description
// and a declared symmetry flag.
class ScalarSampler {
 public:
  using DrawFn = std::function<double(RngStream&)>;

  ScalarSampler(std::string description, bool symmetric, DrawFn draw);

  static ScalarSampler constant(double c);
  static ScalarSampler normal(double mean, double variance);
  // Draws atoms of a probability measure; symmetric iff the measure is.
  static ScalarSampler from_measure(const FiniteMeasure& probability);

  double draw(RngStream& rng) const { return draw_(rng); }
  const std::string& description() const { return description_; }
  bool symmetric() const { return symmetric_; }

 private:
  std::string description_;
  bool symmetric_;
  DrawFn draw_;
};

// How a triple is split for sampling: a Gaussian block carrying the first two
// cumulants of the atoms with |u| <= cut, and a compound Poisson tail for the
// rest. The split is exact when the only atom with |u| <= cut sits at 0;
// otherwise substituted_variance reports how much small-jump variance was
// replaced by a Gaussian.
struct SamplingPlan {
  double cut = 0.0;
  double gaussian_mean = 0.0;
  double gaussian_variance = 0.0;
  double substituted_variance = 0.0;
  CompoundPoissonParams tail;

  bool exact() const { return substituted_variance == 0.0; }
};

// Half the smallest nonzero |atom location|, or 1 when G has no such atom.
double default_inner_cut(const LevyTriple& t);

SamplingPlan plan_sampling(const LevyTriple& t, std::optional<double> cut = std::nullopt);

}  // namespace bplab

#endif  // BPLAB_SAMPLER_HPP
