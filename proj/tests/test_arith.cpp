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


#include <gmpxx.h>

#include "doctest.h"
#include "tadic/arith.hpp"
#include "tadic/errors.hpp"

using namespace tadic;

TEST_CASE("modular helpers") {
  CHECK(powmod(3, 4, 7) == 4);
  CHECK(invmod(3, 7) == 5);
  CHECK(mulmod(3, invmod(3, 101), 101) == 1);
  CHECK(reduce_signed(-1, 25) == 24);
  CHECK(submod(2, 5, 7) == 4);
  CHECK(negmod(0, 7) == 0);
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(360) == std::vector<u64>{2, 3, 5});
  CHECK(ipow_checked(5, 3) == 125);
}

TEST_CASE("valuations") {
  CHECK(vp(u64{250}, 5) == 3);
  CHECK(vp(mpz_class(48), 2) == 4);
  // Legendre against a direct count.
  for (u64 p : {2, 3, 5, 7})
    for (u64 k = 0; k < 60; ++k) {
      unsigned direct = 0;
      for (u64 j = 2; j <= k; ++j) direct += vp(j, p);
      CHECK(vp_factorial(k, p) == direct);
    }
}

TEST_CASE("rational helpers") {
  CHECK(floor_q(mpq_class(-7, 3)) == -3);
  CHECK(ceil_q(mpq_class(20, 3)) == 7);
  CHECK(frac_q(mpq_class(5, 3)) == mpq_class(2, 3));
  CHECK(parse_rational("20/3") == mpq_class(20, 3));
  CHECK(to_string(mpq_class(4, 2)) == "2");
  // 1/3 mod 25 is 17.
  CHECK(reduce_rational(mpq_class(1, 3), 5, 25) == 17);
  CHECK_THROWS(reduce_rational(mpq_class(1, 5), 5, 25));
}
