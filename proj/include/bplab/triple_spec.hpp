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

#ifndef BPLAB_TRIPLE_SPEC_HPP
#define BPLAB_TRIPLE_SPEC_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bplab/levy.hpp"

namespace bplab {

// A malformed configuration or triple document. path() names the offending
// field in JSON-pointer style, e.g. "/triple/convolve/1/lambda".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Accepted forms:
//   {"gamma": g, "atoms": [[location, weight], ...]}
//   {"preset": "gaussian", "mean": m, "var": v}
//   {"preset": "poisson", "lambda": l}
//   {"preset": "cauchy", "a": a, "nodes": n}     (nodes defaults to 401)
//   {"preset": "dirac", "a": a}
//   {"convolve": [spec, spec, ...]}
LevyTriple parse_triple_spec(const nlohmann::json& spec, const std::string& path = "");

// Parses a JSON string; syntax errors become ConfigError.
LevyTriple parse_triple_spec(const std::string& text);

// Explicit atomic form of a triple.
nlohmann::json triple_to_json(const LevyTriple& t);

}  // namespace bplab

#endif  // BPLAB_TRIPLE_SPEC_HPP
