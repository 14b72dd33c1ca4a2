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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tadic/exp_sums.hpp"

namespace tadic {

struct SweepSpec {
  Polytope1D delta{0, 1};
  u64 p = 5;
  unsigned a = 1;
  unsigned m = 1;
  /// Exponent -> element index held fixed.
  std::map<i64, u64> fixed;
  /// Exponents to sweep; when empty, every nonzero exponent not fixed.
  std::vector<i64> free;
  /// Draw this many tuples instead of the full product.
  std::optional<u64> sample;
  u64 seed = 0;
  unsigned workers = 1;
  u64 budget = kDefaultBudget;
};

struct SweepRow {
  std::string coeffs;
  u64 hasse_value = 0;
  bool hasse_nonzero = false;
  ConvexPolygon np;
  bool equal = false;
  bool consistent = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t generic = 0;
  std::size_t non_generic = 0;
  std::vector<std::string> non_generic_f;
  bool hypothesis_violated = false;
  /// equal == hasse_nonzero on every row.
  bool iff_holds = true;
};

/// The coefficient tuples of a sweep in their deterministic order.
std::vector<LaurentPolyFq> sweep_tuples(const SweepSpec& spec);

/// Point evaluations of the whole sweep.
u64 sweep_cost(const SweepSpec& spec);

SweepResult run_sweep(const SweepSpec& spec);

}  // namespace tadic
