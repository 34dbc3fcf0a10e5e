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

#include <string>

#include "doctest.h"
#include "json.hpp"

#include "bplab/experiment.hpp"

using namespace bplab;
using nlohmann::json;

namespace {

json base_config() {
  return json::parse(R"({
    "model": "hermitian",
    "triple": {"preset": "gaussian", "mean": 0, "var": 1},
    "dims": [20, 40],
    "trials_per_dim": 3,
    "seed": 42,
    "outputs": {
      "moments": {"kmax": 4},
      "histogram": {"bins": 5},
      "cauchy_distance": {"target": {"law": "semicircle", "mean": 0, "radius": 1},
                          "grid": {"half_width": 3, "step": 0.5, "imaginary_levels": [1, 2]}}
    }
  })");
}

std::string error_path(const json& doc) {
  try {
    parse_experiment_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig cfg = parse_experiment_config(base_config());
  CHECK(cfg.model == ModelKind::kHermitian);
  CHECK(cfg.dims == std::vector<int>{20, 40});
  CHECK(cfg.trials_per_dim == 3);
  CHECK(cfg.seed == 42);
  CHECK(cfg.moments->kmax == 4);
  CHECK(cfg.histogram->bins == 5);
  CHECK(std::holds_alternative<Semicircle>(cfg.cauchy_distance->target));
  CHECK(cfg.cauchy_distance->grid.imaginary_levels == std::vector<double>{1, 2});

  json doc = base_config();
  doc["outputs"]["cauchy_distance"]["target"] = {{"triple", {{"preset", "poisson"}, {"lambda", 0.5}}}};
  const auto target = parse_experiment_config(doc).cauchy_distance->target;
  REQUIRE(std::holds_alternative<MarchenkoPastur>(target));
  CHECK(std::get<MarchenkoPastur>(target).rate == 0.5);
}

TEST_CASE("config errors carry the offending path") {
  auto with = [](const std::string& pointer, const json& value) {
    json doc = base_config();
    doc[json::json_pointer(pointer)] = value;
    return error_path(doc);
  };
  CHECK(with("/dims/1", -3) == "/dims/1");
  CHECK(with("/outputs/moments/kmax", 0) == "/outputs/moments/kmax");
  CHECK(with("/trials_per_dim", "many") == "/trials_per_dim");
  CHECK(with("/model", "other") == "/model");
  CHECK(with("/extra", 1) == "/extra");
  CHECK(with("/triple/preset", "nope") == "/triple/preset");
  CHECK(with("/outputs/histogram/bins", 0) == "/outputs/histogram/bins");
  CHECK(with("/outputs/cauchy_distance/grid/step", 0) == "/outputs/cauchy_distance/grid/step");
  CHECK(with("/outputs/cauchy_distance/target/law", "gamma") ==
        "/outputs/cauchy_distance/target/law");

  json asym = base_config();
  asym["model"] = "nonhermitian";
  asym["triple"] = {{"preset", "poisson"}, {"lambda", 1}};
  CHECK(error_path(asym) == "/triple");

  json missing = base_config();
  missing.erase("dims");
  CHECK(error_path(missing) == "/dims");
  CHECK_THROWS_AS(load_experiment_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("runs are deterministic across worker counts") {
  const ExperimentConfig cfg = parse_experiment_config(base_config());
  const Report one = run(cfg, 1);
  const Report three = run(cfg, 3);
  CHECK(one.to_json().dump() == three.to_json().dump());
  CHECK(one.to_csv() == three.to_csv());
  CHECK(one.to_csv().rfind("dim,trial_count,stat_name,mean,stderr\n", 0) == 0);
  CHECK(one.find(20, "m2").trial_count == 3);
  CHECK(one.metadata["version"] == kVersion);
  CHECK_THROWS_AS(one.find(20, "m9"), std::out_of_range);

  json other = base_config();
  other["seed"] = 43;
  CHECK(run(parse_experiment_config(other), 2).to_csv() != one.to_csv());

  double mass = 0.0;
  for (int b = 0; b < 5; ++b) mass += one.find(40, "hist_" + std::to_string(b)).mean;
  CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("point masses are reproduced exactly") {
  json doc = base_config();
  doc["triple"] = {{"preset", "dirac"}, {"a", 2}};
  doc["outputs"]["cauchy_distance"]["target"] = {{"law", "dirac"}, {"a", 2}};
  const Report r = run(parse_experiment_config(doc), 2);
  for (int d : {20, 40}) {
    CHECK(r.find(d, "m1").mean == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(r.find(d, "m3").mean == doctest::Approx(8.0).epsilon(1e-13));
    CHECK(r.find(d, "m3").stderr_of_mean < 1e-13);
    CHECK(r.find(d, "cauchy_distance").mean < 1e-14);
  }
}

TEST_CASE("Gaussian moments approach the semicircle") {
  json doc = base_config();
  doc["dims"] = {200};
  doc["trials_per_dim"] = 10;
  const Report r = run(parse_experiment_config(doc), 0);
  CHECK(std::abs(r.find(200, "m2").mean - 1.0) < 0.05);
  CHECK(std::abs(r.find(200, "m4").mean - 2.0) < 0.15);
  CHECK(r.find(200, "cauchy_distance").mean < 0.05);
}

TEST_CASE("non-Hermitian runs report symmetrized singular moments") {
  json doc = base_config();
  doc["model"] = "nonhermitian";
  doc["dims"] = {100};
  doc["outputs"].erase("cauchy_distance");
  const Report r = run(parse_experiment_config(doc), 2);
  CHECK(r.find(100, "m1").mean == 0.0);
  CHECK(r.find(100, "m3").mean == 0.0);
  CHECK(std::abs(r.find(100, "m2").mean - 1.0) < 0.1);
}

TEST_CASE("projection experiment") {
  const Report empty = projection_experiment(10, 0, 2, 1);
  CHECK(empty.find(10, "m1").mean == 0.0);
  CHECK(empty.find(10, "m4").mean == 0.0);
  const Report full = projection_experiment(100, 50, 4, 1, 3, 2);
  CHECK(full.metadata["targets"]["m1"].get<double>() == doctest::Approx(0.5));
  CHECK(full.find(100, "m1").mean == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(full.find(100, "m2").mean - 0.75) < 0.05);
  CHECK_THROWS_AS(projection_experiment(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("mean and standard error") {
  const auto [m, se] = mean_and_stderr({1.0, 2.0, 3.0});
  CHECK(m == 2.0);
  CHECK(se == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(mean_and_stderr({4.0}).second == 0.0);
}

TEST_CASE("half-rank projections approach Marchenko-Pastur") {
  const Report r = projection_experiment(400, 200, 2, 5, 4, 2);
  const std::vector<double> target = {0.5, 0.75, 1.375, 2.8125};
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(r.find(400, "m" + std::to_string(k)).mean == doctest::Approx(target[k - 1]).epsilon(0.03));
  }
}
