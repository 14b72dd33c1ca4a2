// Copyright 2026 The tadic Authors
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

#include <string>
#include <vector>

#include "tadic/arith.hpp"

namespace tadic {

enum class Verdict { kPass, kFail, kSkipped };
std::string to_string(Verdict v);

struct CriterionResult {
  int id = 0;
  std::string name;
  Verdict verdict = Verdict::kFail;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  /// Point-evaluation budget per brute-force computation; cases that need
  /// more are reported as skipped.
  u64 budget = 100000000;
  unsigned workers = 1;
  u64 seed = 20260101;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "criterion 3 [kloosterman]: PASS (0.21 s / 1 s) ..." on one line.
std::string format_result(const CriterionResult& r);

}  // namespace tadic
