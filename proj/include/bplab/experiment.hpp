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

#ifndef BPLAB_EXPERIMENT_HPP
#define BPLAB_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bplab/levy.hpp"
#include "bplab/spectra.hpp"
#include "bplab/triple_spec.hpp"

namespace bplab {

inline constexpr const char* kVersion = "0.1.0";

enum class ModelKind { kHermitian, kNonHermitian };

struct MomentsOutput {
  std::size_t kmax = 4;
};

struct HistogramOutput {
  int bins = 50;
  // Defaults to the range of all samples drawn at a given dimension.
  std::optional<std::pair<double, double>> range;
};

struct DistanceOutput {
  ReferenceLaw target;
  GridSpec grid;
};

// A parsed experiment document:
//   {"model": "hermitian" | "nonhermitian",
//    "triple": <triple spec>,
//    "dims": [d1, d2, ...],            strictly ascending
//    "trials_per_dim": n,
//    "seed": s,
//    "inner_cut": eps,                 optional
//    "outputs": {"moments": {"kmax": k},
//                "histogram": {"bins": b, "range": [lo, hi]},
//                "cauchy_distance": {"target": law, "grid": {...}}}}
// A distance target is either {"law": "semicircle", "mean": m, "radius": r},
// {"law": "cauchy", "a": a}, {"law": "marchenko_pastur", "lambda": l},
// {"law": "dirac", "a": a}, or {"triple": preset} naming the free image of a
// gaussian, poisson, cauchy or dirac preset. A grid is
// {"half_width": R, "step": h, "imaginary_levels": [...]}.
struct ExperimentConfig {
  ModelKind model = ModelKind::kHermitian;
  LevyTriple triple;
  std::vector<int> dims;
  int trials_per_dim = 1;
  std::uint64_t seed = 0;
  std::optional<double> inner_cut;
  std::optional<MomentsOutput> moments;
  std::optional<HistogramOutput> histogram;
  std::optional<DistanceOutput> cauchy_distance;
  nlohmann::json source;
};

// Throws ConfigError with the path of the offending field.
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);
// Reads and parses a config file; unreadable files are config errors too.
ExperimentConfig load_experiment_config(const std::string& path);

ReferenceLaw parse_reference_law(const nlohmann::json& spec, const std::string& path);

struct StatRow {
  int dim = 0;
  int trial_count = 0;
  std::string stat_name;
  double mean = 0.0;
  double stderr_of_mean = 0.0;
};

struct Report {
  std::vector<StatRow> rows;
  nlohmann::json metadata;

  // Header "dim,trial_count,stat_name,mean,stderr", one row per statistic.
  std::string to_csv() const;
  nlohmann::json to_json() const;
  // Throws std::out_of_range if absent.
  const StatRow& find(int dim, const std::string& stat_name) const;
};

// BPLAB_THREADS if set to a positive integer, else the hardware concurrency.
int default_worker_count();

// Runs config.trials_per_dim independent trials per dimension. Trial i at
// dimension d draws from RngStream(derive_seed(seed, d), i); results are
// folded in trial order, so the report does not depend on `workers`.
// Statistics: m<k> (moments), hist_<b> (bin masses; centres in metadata),
// cauchy_distance (per trial) and cauchy_distance_pooled (all trials pooled,
// stderr 0). When the free image has moments they are in metadata["targets"].
Report run(const ExperimentConfig& config, int workers = 0);

// Spectral moments of sum_{k=1}^{d'} u_k u_k^* over `trials` draws. The
// Marchenko-Pastur(d'/d) moments are in metadata["targets"].
Report projection_experiment(int d, int d_prime, int trials, std::uint64_t seed,
                             std::size_t kmax = 4, int workers = 0);

// Mean and standard error of the mean, summed in the given order.
std::pair<double, double> mean_and_stderr(const std::vector<double>& values);

}  // namespace bplab

#endif  // BPLAB_EXPERIMENT_HPP
