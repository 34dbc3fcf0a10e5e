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

#ifndef BPLAB_VERIFY_HPP
#define BPLAB_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bplab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240917;
  int workers = 0;
  // Criterion ids to run; empty runs all twelve.
  std::vector<int> only;
};

// Runs the built-in acceptance criteria in id order, reporting each result to
// on_result as soon as it is known. A criterion that throws is a failure.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

// One line: "PASS  [ 1] name: detail (1.2 s)".
std::string format_result(const CriterionResult& r);

}  // namespace bplab

#endif  // BPLAB_VERIFY_HPP
