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

#include "bplab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bplab/hermitian_model.hpp"
#include "bplab/nonhermitian_model.hpp"
#include "bplab/rng.hpp"
#include "bplab/sampler.hpp"
#include "bplab/sphere.hpp"

namespace bplab {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  const std::set<std::string> names(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!names.contains(key)) throw ConfigError(path + "/" + key, "unknown field");
  }
}

const json& required(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path + "/" + key, "missing field");
  return *it;
}

double positive_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(path, "expected a positive number");
  return x;
}

double finite_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
  return x;
}

int positive_int(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 ||
      v.get<std::int64_t>() > std::numeric_limits<int>::max()) {
    throw ConfigError(path, "expected a positive integer");
  }
  return v.get<int>();
}

GridSpec parse_grid(const json& spec, const std::string& path) {
  if (!spec.is_object()) throw ConfigError(path, "expected an object");
  check_keys(spec, path, {"half_width", "step", "imaginary_levels"});
  GridSpec grid;
  if (spec.contains("half_width")) {
    grid.real_half_width = finite_number(spec["half_width"], path + "/half_width");
    if (grid.real_half_width < 0.0) throw ConfigError(path + "/half_width", "must be >= 0");
  }
  if (spec.contains("step")) grid.real_step = positive_number(spec["step"], path + "/step");
  if (spec.contains("imaginary_levels")) {
    const json& levels = spec["imaginary_levels"];
    if (!levels.is_array() || levels.empty()) {
      throw ConfigError(path + "/imaginary_levels", "expected a nonempty array");
    }
    grid.imaginary_levels.clear();
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const std::string where = path + "/imaginary_levels/" + std::to_string(i);
      const double y = finite_number(levels[i], where);
      if (y < 1.0) throw ConfigError(where, "imaginary levels must be >= 1");
      grid.imaginary_levels.push_back(y);
    }
  }
  return grid;
}

// Closed-form free image of a preset triple.
ReferenceLaw free_image_of_preset(const json& spec, const std::string& path) {
  if (!spec.is_object() || !spec.contains("preset") || !spec["preset"].is_string()) {
    throw ConfigError(path, "expected a preset triple");
  }
  parse_triple_spec(spec, path);  // validates parameters
  const auto name = spec["preset"].get<std::string>();
  if (name == "gaussian") {
    const double var = spec["var"].get<double>();
    if (var == 0.0) return PointMass{spec["mean"].get<double>()};
    return Semicircle{spec["mean"].get<double>(), std::sqrt(var)};
  }
  if (name == "poisson") return MarchenkoPastur{spec["lambda"].get<double>()};
  if (name == "cauchy") return CauchyLaw{spec["a"].get<double>()};
  return PointMass{spec["a"].get<double>()};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Runs body(i) for i in [0, n) on up to `workers` threads; rethrows the first
// exception after all workers have stopped.
template <typename F>
void parallel_for(int n, int workers, F&& body) {
  workers = std::clamp(workers, 1, std::max(n, 1));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Trial {
  std::vector<double> stats;
  std::optional<EmpiricalDistribution> law;
};

void append_stat(Report& report, int dim, const std::string& name, const std::vector<Trial>& trials,
                 std::size_t index) {
  std::vector<double> values;
  values.reserve(trials.size());
  for (const Trial& t : trials) values.push_back(t.stats[index]);
  const auto [mean, se] = mean_and_stderr(values);
  report.rows.push_back({dim, static_cast<int>(trials.size()), name, mean, se});
}

EmpiricalDistribution pool_laws(const std::vector<Trial>& trials) {
  std::vector<double> points;
  std::vector<double> weights;
  const double share = 1.0 / static_cast<double>(trials.size());
  for (const Trial& t : trials) {
    points.insert(points.end(), t.law->support().begin(), t.law->support().end());
    for (double w : t.law->weights()) weights.push_back(w * share);
  }
  return {std::move(points), std::move(weights)};
}

json moments_json(const MomentSequence& m) {
  json out = json::object();
  for (std::size_t k = 1; k <= m.kmax(); ++k) out["m" + std::to_string(k)] = m.at(k);
  return out;
}

}  // namespace

ReferenceLaw parse_reference_law(const json& spec, const std::string& path) {
  if (!spec.is_object()) throw ConfigError(path, "expected an object");
  if (spec.contains("triple")) {
    check_keys(spec, path, {"triple"});
    return free_image_of_preset(spec["triple"], path + "/triple");
  }
  const json& law = required(spec, "law", path);
  if (!law.is_string()) throw ConfigError(path + "/law", "expected a string");
  const auto name = law.get<std::string>();
  ReferenceLaw out;
  if (name == "semicircle") {
    check_keys(spec, path, {"law", "mean", "radius"});
    out = Semicircle{finite_number(required(spec, "mean", path), path + "/mean"),
                     positive_number(required(spec, "radius", path), path + "/radius")};
  } else if (name == "cauchy") {
    check_keys(spec, path, {"law", "a"});
    out = CauchyLaw{positive_number(required(spec, "a", path), path + "/a")};
  } else if (name == "marchenko_pastur") {
    check_keys(spec, path, {"law", "lambda"});
    const double lambda = finite_number(required(spec, "lambda", path), path + "/lambda");
    if (lambda < 0.0) throw ConfigError(path + "/lambda", "must be >= 0");
    out = MarchenkoPastur{lambda};
  } else if (name == "dirac") {
    check_keys(spec, path, {"law", "a"});
    out = PointMass{finite_number(required(spec, "a", path), path + "/a")};
  } else {
    throw ConfigError(path + "/law", "unknown law '" + name + "'");
  }
  return out;
}

ExperimentConfig parse_experiment_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be an object");
  check_keys(doc, "", {"model", "triple", "dims", "trials_per_dim", "seed", "inner_cut", "outputs"});
  ExperimentConfig cfg;
  cfg.source = doc;

  const json& model = required(doc, "model", "");
  if (model == "hermitian") {
    cfg.model = ModelKind::kHermitian;
  } else if (model == "nonhermitian") {
    cfg.model = ModelKind::kNonHermitian;
  } else {
    throw ConfigError("/model", "expected \"hermitian\" or \"nonhermitian\"");
  }

  cfg.triple = parse_triple_spec(required(doc, "triple", ""), "/triple");
  if (cfg.model == ModelKind::kNonHermitian && !is_symmetric(cfg.triple)) {
    throw ConfigError("/triple", "the nonhermitian model needs a symmetric triple");
  }

  const json& dims = required(doc, "dims", "");
  if (!dims.is_array() || dims.empty()) throw ConfigError("/dims", "expected a nonempty array");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int d = positive_int(dims[i], "/dims/" + std::to_string(i));
    if (!cfg.dims.empty() && d <= cfg.dims.back()) {
      throw ConfigError("/dims/" + std::to_string(i), "dims must be strictly ascending");
    }
    cfg.dims.push_back(d);
  }

  cfg.trials_per_dim = positive_int(required(doc, "trials_per_dim", ""), "/trials_per_dim");

  const json& seed = required(doc, "seed", "");
  const bool nonnegative =
      seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0);
  if (!nonnegative) throw ConfigError("/seed", "expected a nonnegative integer");
  cfg.seed = seed.get<std::uint64_t>();

  if (doc.contains("inner_cut")) cfg.inner_cut = positive_number(doc["inner_cut"], "/inner_cut");

  const json& outputs = required(doc, "outputs", "");
  if (!outputs.is_object() || outputs.empty()) {
    throw ConfigError("/outputs", "expected an object with at least one output");
  }
  check_keys(outputs, "/outputs", {"moments", "histogram", "cauchy_distance"});
  if (outputs.contains("moments")) {
    const json& m = outputs["moments"];
    if (!m.is_object()) throw ConfigError("/outputs/moments", "expected an object");
    check_keys(m, "/outputs/moments", {"kmax"});
    cfg.moments = MomentsOutput{
        static_cast<std::size_t>(positive_int(required(m, "kmax", "/outputs/moments"),
                                              "/outputs/moments/kmax"))};
  }
  if (outputs.contains("histogram")) {
    const json& h = outputs["histogram"];
    const std::string path = "/outputs/histogram";
    if (!h.is_object()) throw ConfigError(path, "expected an object");
    check_keys(h, path, {"bins", "range"});
    HistogramOutput out;
    out.bins = positive_int(required(h, "bins", path), path + "/bins");
    if (h.contains("range")) {
      const json& r = h["range"];
      if (!r.is_array() || r.size() != 2) throw ConfigError(path + "/range", "expected [lo, hi]");
      const double lo = finite_number(r[0], path + "/range/0");
      const double hi = finite_number(r[1], path + "/range/1");
      if (!(hi > lo)) throw ConfigError(path + "/range", "expected lo < hi");
      out.range = std::pair{lo, hi};
    }
    cfg.histogram = out;
  }
  if (outputs.contains("cauchy_distance")) {
    const json& c = outputs["cauchy_distance"];
    const std::string path = "/outputs/cauchy_distance";
    if (!c.is_object()) throw ConfigError(path, "expected an object");
    check_keys(c, path, {"target", "grid"});
    DistanceOutput out{parse_reference_law(required(c, "target", path), path + "/target"), {}};
    if (c.contains("grid")) out.grid = parse_grid(c["grid"], path + "/grid");
    cfg.cauchy_distance = std::move(out);
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_experiment_config(doc);
}

std::pair<double, double> mean_and_stderr(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("no values to aggregate");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

int default_worker_count() {
  if (const char* env = std::getenv("BPLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "dim,trial_count,stat_name,mean,stderr\n";
  for (const StatRow& r : rows) {
    out << r.dim << ',' << r.trial_count << ',' << r.stat_name << ',' << format_double(r.mean)
        << ',' << format_double(r.stderr_of_mean) << '\n';
  }
  return out.str();
}

json Report::to_json() const {
  json list = json::array();
  for (const StatRow& r : rows) {
    list.push_back({{"dim", r.dim},
                    {"trial_count", r.trial_count},
                    {"stat_name", r.stat_name},
                    {"mean", r.mean},
                    {"stderr", r.stderr_of_mean}});
  }
  return {{"metadata", metadata}, {"rows", list}};
}

const StatRow& Report::find(int dim, const std::string& stat_name) const {
  for (const StatRow& r : rows) {
    if (r.dim == dim && r.stat_name == stat_name) return r;
  }
  throw std::out_of_range("no statistic " + stat_name + " at dim " + std::to_string(dim));
}

Report run(const ExperimentConfig& config, int workers) {
  if (workers <= 0) workers = default_worker_count();
  if (config.model == ModelKind::kNonHermitian && !is_symmetric(config.triple)) {
    throw std::invalid_argument("the nonhermitian model needs a symmetric triple");
  }
  const SamplingPlan plan = plan_sampling(config.triple, config.inner_cut);
  const bool keep_law = config.histogram || config.cauchy_distance;

  Report report;
  report.metadata = {{"version", kVersion},
                     {"seed", config.seed},
                     {"config", config.source},
                     {"sampling", {{"inner_cut", plan.cut},
                                   {"exact", plan.exact()},
                                   {"substituted_variance", plan.substituted_variance}}}};
  if (config.moments) {
    const MomentSequence target = psi_image_moments(config.triple, config.moments->kmax);
    const bool finite = std::all_of(target.values().begin(), target.values().end(),
                                    [](double v) { return std::isfinite(v); });
    if (finite) report.metadata["targets"] = moments_json(target);
  }

  for (int d : config.dims) {
    std::vector<Trial> trials(static_cast<std::size_t>(config.trials_per_dim));
    const std::uint64_t dim_seed = derive_seed(config.seed, static_cast<std::uint64_t>(d));
    parallel_for(config.trials_per_dim, workers, [&](int i) {
      RngStream rng(dim_seed, static_cast<std::uint64_t>(i));
      EmpiricalDistribution law = config.model == ModelKind::kHermitian
                                      ? esd(sample_P(plan, d, rng))
                                      : symmetrized_singular_law(sample_L(plan, d, rng));
      Trial& out = trials[static_cast<std::size_t>(i)];
      if (config.moments) out.stats = empirical_moments(law, config.moments->kmax).values();
      if (config.cauchy_distance) {
        out.stats.push_back(
            cauchy_sup_distance(law, config.cauchy_distance->target, config.cauchy_distance->grid));
      }
      if (keep_law) out.law = std::move(law);
    });

    std::size_t index = 0;
    if (config.moments) {
      for (std::size_t k = 1; k <= config.moments->kmax; ++k) {
        append_stat(report, d, "m" + std::to_string(k), trials, index++);
      }
    }
    if (config.cauchy_distance) {
      append_stat(report, d, "cauchy_distance", trials, index++);
      const EmpiricalDistribution pooled = pool_laws(trials);
      const double dist =
          cauchy_sup_distance(pooled, config.cauchy_distance->target, config.cauchy_distance->grid);
      report.rows.push_back({d, config.trials_per_dim, "cauchy_distance_pooled", dist, 0.0});
    }
    if (config.histogram) {
      auto range = config.histogram->range;
      if (!range) {
        double lo = trials.front().law->support().front();
        double hi = trials.front().law->support().back();
        for (const Trial& t : trials) {
          lo = std::min(lo, t.law->support().front());
          hi = std::max(hi, t.law->support().back());
        }
        range = std::pair{lo, hi};
      }
      const int bins = config.histogram->bins;
      std::vector<std::vector<double>> masses(static_cast<std::size_t>(bins));
      json centers = json::array();
      for (const Trial& t : trials) {
        const auto h = histogram(*t.law, bins, range);
        for (int b = 0; b < bins; ++b) masses[static_cast<std::size_t>(b)].push_back(h[static_cast<std::size_t>(b)].mass);
        if (centers.empty()) {
          for (const HistogramBin& bin : h) centers.push_back(bin.center);
        }
      }
      for (int b = 0; b < bins; ++b) {
        const auto [mean, se] = mean_and_stderr(masses[static_cast<std::size_t>(b)]);
        report.rows.push_back({d, config.trials_per_dim, "hist_" + std::to_string(b), mean, se});
      }
      report.metadata["histogram_bin_centers"][std::to_string(d)] = centers;
    }
  }
  return report;
}

Report projection_experiment(int d, int d_prime, int trials, std::uint64_t seed, std::size_t kmax,
                             int workers) {
  if (d < 1 || d_prime < 0 || trials < 1 || kmax < 1) {
    throw std::invalid_argument("projection experiment needs d >= 1, d' >= 0, trials >= 1, kmax >= 1");
  }
  if (workers <= 0) workers = default_worker_count();
  std::vector<Trial> results(static_cast<std::size_t>(trials));
  const std::uint64_t dim_seed = derive_seed(seed, static_cast<std::uint64_t>(d));
  parallel_for(trials, workers, [&](int i) {
    RngStream rng(dim_seed, static_cast<std::uint64_t>(i));
    Eigen::MatrixXcd w(d, d_prime);
    for (int k = 0; k < d_prime; ++k) w.col(k) = sample_sphere_vector(d, rng).coords;
    const Eigen::MatrixXcd m = d_prime > 0 ? Eigen::MatrixXcd(w * w.adjoint())
                                           : Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(d, d));
    results[static_cast<std::size_t>(i)].stats = trace_moments(HermitianSample(m), kmax).values();
  });
  Report report;
  const double rate = static_cast<double>(d_prime) / d;
  report.metadata = {{"version", kVersion},
                     {"seed", seed},
                     {"experiment", {{"d", d}, {"d_prime", d_prime}, {"trials", trials}}},
                     {"targets", moments_json(reference_moments(MarchenkoPastur{rate}, kmax))}};
  for (std::size_t k = 1; k <= kmax; ++k) {
    append_stat(report, d, "m" + std::to_string(k), results, k - 1);
  }
  return report;
}

}  // namespace bplab
