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

#include "bplab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bplab/experiment.hpp"
#include "bplab/hermitian_model.hpp"
#include "bplab/nonhermitian_model.hpp"
#include "bplab/spectra.hpp"
#include "bplab/triple_spec.hpp"
#include "bplab/verify.hpp"

namespace bplab {

namespace {

using nlohmann::json;

// A triple given inline as JSON, or the name of a file holding it.
LevyTriple read_triple_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() != '{' && std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_triple_spec(buf.str());
  }
  return parse_triple_spec(arg);
}

void write_report(const Report& report, const std::string& out_dir, std::ostream& out) {
  if (out_dir.empty()) {
    out << report.to_csv();
    return;
  }
  std::filesystem::create_directories(out_dir);
  const auto dir = std::filesystem::path(out_dir);
  std::ofstream csv(dir / "report.csv");
  csv << report.to_csv();
  std::ofstream js(dir / "report.json");
  js << report.to_json().dump(2) << '\n';
  if (!csv || !js) throw std::runtime_error("failed to write report under " + out_dir);
  out << "wrote " << (dir / "report.csv").string() << " and " << (dir / "report.json").string()
      << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random matrix models for infinitely divisible laws", "bplab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  std::string out_dir;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config");
  run_cmd->add_option("config", config_path, "JSON experiment config")->required();
  run_cmd->add_option("--out", out_dir, "directory for report.csv and report.json");

  std::string triple_arg;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string model = "hermitian";
  double inner_cut = 0.0;
  auto* sample_cmd = app.add_subcommand("sample", "draw one matrix and print its spectrum");
  sample_cmd->add_option("triple", triple_arg, "triple spec (JSON or file)")->required();
  sample_cmd->add_option("--dim", dim, "matrix dimension")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed, "random seed")->required();
  sample_cmd->add_option("--model", model, "hermitian or nonhermitian")
      ->check(CLI::IsMember({"hermitian", "nonhermitian"}));
  sample_cmd->add_option("--inner-cut", inner_cut, "small-jump cut")->check(CLI::PositiveNumber);

  std::size_t kmax = 4;
  auto* moments_cmd = app.add_subcommand("moments", "print the moments of the free image");
  moments_cmd->add_option("triple", triple_arg, "triple spec (JSON or file)")->required();
  moments_cmd->add_option("--kmax", kmax, "highest moment")->check(CLI::PositiveNumber);

  int d_prime = 0;
  int trials = 10;
  auto* project_cmd = app.add_subcommand("project", "Marchenko-Pastur projection experiment");
  project_cmd->add_option("--dim", dim, "ambient dimension")->required()->check(CLI::PositiveNumber);
  project_cmd->add_option("--dprime", d_prime, "number of projections")->required()->check(CLI::NonNegativeNumber);
  project_cmd->add_option("--trials", trials, "trials")->check(CLI::PositiveNumber);
  project_cmd->add_option("--seed", seed, "random seed");
  project_cmd->add_option("--kmax", kmax, "highest moment")->check(CLI::PositiveNumber);
  project_cmd->add_option("--out", out_dir, "directory for report.csv and report.json");

  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  verify_cmd->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 12));
  verify_cmd->add_option("--seed", seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bplab: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (run_cmd->parsed()) {
      const ExperimentConfig cfg = load_experiment_config(config_path);
      write_report(run(cfg), out_dir, out);
    } else if (sample_cmd->parsed()) {
      const LevyTriple t = read_triple_argument(triple_arg);
      SampleOptions opts;
      if (inner_cut > 0.0) opts.inner_cut = inner_cut;
      RngStream rng(seed, 0);
      json doc = {{"model", model}, {"dim", dim}, {"seed", seed}};
      if (model == "hermitian") {
        doc["eigenvalues"] = esd(sample_P(t, dim, rng, opts)).support();
      } else {
        if (!is_symmetric(t)) throw ConfigError("/triple", "the nonhermitian model needs a symmetric triple");
        const ComplexMatrixSample m = sample_L(t, dim, rng, opts);
        const Eigen::MatrixXcd gram = m.entries().adjoint() * m.entries();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
        std::vector<double> singular;
        for (int i = 0; i < dim; ++i) singular.push_back(std::sqrt(std::max(0.0, solver.eigenvalues()(i))));
        doc["singular_values"] = singular;
      }
      out << doc.dump() << '\n';
    } else if (moments_cmd->parsed()) {
      const MomentSequence m = psi_image_moments(read_triple_argument(triple_arg), kmax);
      for (double v : m.values()) {
        std::ostringstream line;
        line << std::setprecision(15) << v;
        out << line.str() << '\n';
      }
    } else if (project_cmd->parsed()) {
      write_report(projection_experiment(dim, d_prime, trials, seed, kmax), out_dir, out);
    } else if (verify_cmd->parsed()) {
      AcceptanceOptions opts;
      opts.only = only;
      if (verify_cmd->count("--seed") > 0) opts.seed = seed;
      const auto results = run_acceptance(opts, [&out](const CriterionResult& r) {
        out << format_result(r) << std::endl;
      });
      const auto passed = std::count_if(results.begin(), results.end(),
                                        [](const CriterionResult& r) { return r.passed; });
      out << passed << "/" << results.size() << " criteria passed\n";
      return passed == static_cast<long>(results.size()) ? kExitOk : kExitRuntime;
    }
  } catch (const ConfigError& e) {
    err << "bplab: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "bplab: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

}  // namespace bplab
