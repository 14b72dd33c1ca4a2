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


#include <set>

#include "doctest.h"
#include "tadic/census.hpp"
#include "tadic/errors.hpp"

using namespace tadic;

TEST_CASE("tuple enumeration") {
  SweepSpec spec;
  spec.delta = Polytope1D(0, 2);
  spec.p = 5;
  auto all = sweep_tuples(spec);
  // a_2 in 1..4, a_1 in 0..4; axes by increasing exponent, the last fastest.
  REQUIRE(all.size() == 20);
  CHECK(all.front().to_string() == "a(2)=1");
  CHECK(all[1].to_string() == "a(2)=2");
  CHECK(all[4].to_string() == "a(1)=1,a(2)=1");
  spec.fixed[2] = 3;
  CHECK(sweep_tuples(spec).size() == 5);
  spec.fixed.clear();
  spec.free = {2};
  CHECK(sweep_tuples(spec).size() == 4);
}

TEST_CASE("sampling is seeded and without replacement") {
  SweepSpec spec;
  spec.delta = Polytope1D(1, 2);
  spec.p = 7;
  spec.sample = 30;
  spec.seed = 99;
  auto a = sweep_tuples(spec), b = sweep_tuples(spec);
  REQUIRE(a.size() == 30);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_string() == b[i].to_string());
    seen.insert(a[i].to_string());
  }
  CHECK(seen.size() == 30);
  spec.seed = 100;
  auto c = sweep_tuples(spec);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].to_string() != c[i].to_string();
  CHECK(differs);
}

TEST_CASE("sweep results do not depend on the worker count") {
  SweepSpec spec;
  spec.delta = Polytope1D(0, 2);
  spec.p = 7;
  auto one = run_sweep(spec);
  spec.workers = 4;
  auto four = run_sweep(spec);
  REQUIRE(one.rows.size() == 42);
  REQUIRE(four.rows.size() == 42);
  for (std::size_t i = 0; i < 42; ++i) {
    CHECK(one.rows[i].coeffs == four.rows[i].coeffs);
    CHECK(one.rows[i].np == four.rows[i].np);
    CHECK(one.rows[i].equal);
  }
  CHECK(one.generic == 42);
  CHECK(one.iff_holds);
}

TEST_CASE("cubic census at p = 11") {
  SweepSpec spec;
  spec.delta = Polytope1D(0, 3);
  spec.p = 11;
  spec.fixed[3] = 1;
  spec.workers = 2;
  auto r = run_sweep(spec);
  CHECK(r.rows.size() == 121);
  CHECK(r.generic + r.non_generic == r.rows.size());
  // H = 2 a_1 + 3 a_2^2 vanishes once per a_2.
  CHECK(r.non_generic == 11);
  CHECK(r.non_generic_f.size() == 11);
  CHECK(r.iff_holds);
  CHECK_FALSE(r.hypothesis_violated);
  for (const auto& row : r.rows) CHECK(row.consistent);
}

TEST_CASE("sweep budget is checked before any work") {
  SweepSpec spec;
  spec.delta = Polytope1D(0, 3);
  spec.p = 11;
  spec.budget = 1000;
  CHECK(sweep_cost(spec) > 1000);
  CHECK_THROWS_AS(run_sweep(spec), BudgetError);
}
