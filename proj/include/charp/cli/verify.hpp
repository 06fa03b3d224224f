// Copyright 2026 The charp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "charp/cli/output.hpp"
#include "charp/enumgeo/curve.hpp"

namespace charp::cli {

/// Criteria 1-9 are computations; 10 (reproducibility) compares two runs
/// and lives with the callers.
inline constexpr unsigned kComputedCriteria = 9;

struct VerifyOptions {
  /// Drives the random sweeps. Curve instances use fixed seeds.
  std::uint64_t seed = 42;
  /// Empty runs everything.
  std::set<unsigned> only;
  unsigned max_attempts = enumgeo::kDefaultMaxAttempts;
  zerodim::SolveOptions solve;
};

struct CriterionResult {
  unsigned id = 0;
  std::string label;
  bool pass = false;
  std::string summary;
  json data;
  double seconds = 0;
};

CriterionResult run_criterion(unsigned id, const VerifyOptions& opts);
std::vector<CriterionResult> verify_paper(const VerifyOptions& opts);

/// Self-describing document without timing fields.
json verify_document(const std::vector<CriterionResult>& results, const VerifyOptions& opts);

const char* tool_version();

}  // namespace charp::cli
