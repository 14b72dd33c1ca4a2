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

// Runs the acceptance criteria and prints one line per criterion.
// Exit status: 0 all passed, 1 some failed, 77 nothing failed but some
// were skipped for budget.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "tadic/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  tadic::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) {
      ids.push_back(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--budget") && i + 1 < argc) {
      opts.budget = std::strtoull(argv[++i], nullptr, 10);
    } else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) {
      opts.workers = static_cast<unsigned>(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: tadic_acceptance [--criterion N]... [--budget B] [--workers W]\n";
      return 2;
    }
  }
  if (ids.empty())
    for (int id = 1; id <= tadic::kCriterionCount; ++id) ids.push_back(id);
  bool failed = false, skipped = false;
  for (int id : ids) {
    tadic::CriterionResult r = tadic::run_criterion(id, opts);
    std::cout << tadic::format_result(r) << std::endl;
    failed = failed || r.verdict == tadic::Verdict::kFail;
    skipped = skipped || r.verdict == tadic::Verdict::kSkipped;
  }
  return failed ? 1 : skipped ? 77 : 0;
}
