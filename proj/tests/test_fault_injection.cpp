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


#include "doctest.h"
#include "tadic/acceptance.hpp"
#include "tadic/hasse.hpp"
#include "tadic/series.hpp"

using namespace tadic;

// A wrong Artin-Hasse coefficient must be caught by the criteria that depend
// on it, and must leave the ones that do not untouched.
TEST_CASE("a corrupted Artin-Hasse coefficient is detected") {
  AcceptanceOptions opts;
  const auto clean_hasse = hasse_m(Polytope1D(0, 3), 11, 2).to_string();
  {
    testing::ArtinHasseTamper tamper(2, mpq_class(1));
    CHECK(testing::artin_hasse_tampered());
    CHECK(artin_hasse(11, 4).coeffs[2] == 1);
    CHECK(hasse_m(Polytope1D(0, 3), 11, 2).to_string() != clean_hasse);
    for (int id : {5, 9, 10}) {
      auto r = run_criterion(id, opts);
      CAPTURE(format_result(r));
      CHECK(r.verdict == Verdict::kFail);
    }
    auto two_path = run_criterion(8, opts);
    CAPTURE(format_result(two_path));
    CHECK(two_path.verdict == Verdict::kPass);
  }
  {
    // The Kloosterman Hasse polynomial at p = 5 is lambda_4^2 y1^4 y-1^4.
    testing::ArtinHasseTamper tamper(4, mpq_class(0));
    auto r = run_criterion(3, opts);
    CAPTURE(format_result(r));
    CHECK(r.verdict == Verdict::kFail);
  }
  CHECK_FALSE(testing::artin_hasse_tampered());
  CHECK(artin_hasse(11, 4).coeffs[2] == mpq_class(1, 2));
  CHECK(hasse_m(Polytope1D(0, 3), 11, 2).to_string() == clean_hasse);
  for (int id : {3, 9, 10}) CHECK(run_criterion(id, opts).verdict == Verdict::kPass);
}
