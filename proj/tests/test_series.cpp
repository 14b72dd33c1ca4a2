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


#include <random>

#include "doctest.h"
#include "tadic/errors.hpp"
#include "tadic/series.hpp"

using namespace tadic;

namespace {

// Exact E(t) coefficients from the product of exp(t^{p^i}/p^i) expanded
// term by term, independent of the library's exponentiation routine.
std::vector<mpq_class> ref_artin_hasse(u64 p, std::size_t M) {
  std::vector<mpq_class> acc(M, 0);
  acc[0] = 1;
  for (u64 pi = 1; pi < M; pi *= p) {
    std::vector<mpq_class> factor(M, 0);
    mpq_class term = 1;
    for (std::size_t j = 0; j * pi < M; ++j) {
      factor[j * pi] = term;
      term = term / mpq_class(static_cast<unsigned long>(pi)) / mpq_class(static_cast<unsigned long>(j + 1));
    }
    std::vector<mpq_class> next(M, 0);
    for (std::size_t a = 0; a < M; ++a)
      for (std::size_t b = 0; a + b < M; ++b) next[a + b] += acc[a] * factor[b];
    acc = next;
  }
  return acc;
}

TSeries series_of(u64 p, unsigned N, std::vector<u64> c) { return TSeries(p, N, std::move(c)); }

}  // namespace

TEST_CASE("artin-hasse coefficients") {
  for (u64 p : {2, 3, 5, 7}) {
    auto E = artin_hasse(p, 40);
    auto ref = ref_artin_hasse(p, 40);
    CHECK(E.coeffs == ref);
    CHECK(E.coeffs[0] == 1);
    mpq_class fact = 1;
    for (u64 i = 0; i < p; ++i) {
      if (i) fact *= static_cast<unsigned long>(i);
      CHECK(E.coeffs[i] == 1 / fact);
    }
    REQUIRE(E.min_valuation(p));
    CHECK(*E.min_valuation(p) >= 0);
  }
  CHECK(artin_hasse(5, 6).coeffs[5] == mpq_class(5, 24));
}

TEST_CASE("pi(T) satisfies E(pi) = 1 + T") {
  for (u64 p : {2, 3, 5, 7, 11})
    for (unsigned N : {1u, 2u, 3u}) {
      const std::size_t M = 12;
      TSeries pi = pi_of_T(p, M, N);
      CHECK(pi[0] == 0);
      CHECK(pi[1] == 1);
      // artin_hasse_compose returns E(pi) - 1.
      TSeries back = artin_hasse_compose(pi);
      TSeries T(p, N, M);
      T[1] = 1;
      CHECK(back == T);
    }
  // Below degree p, pi(T) agrees with log(1+T).
  const u64 p = 7;
  const unsigned N = 3;
  TSeries pi = pi_of_T(p, 7, N);
  for (u64 k = 1; k < p; ++k) {
    mpq_class c(k % 2 ? 1 : -1, k);
    CHECK(pi[k] == reduce_rational(c, p, pi.pN()));
  }
}

TEST_CASE("series arithmetic and composition") {
  auto a = series_of(5, 2, {1, 2, 3, 4});
  auto b = series_of(5, 2, {0, 1, 0, 0});
  CHECK((a * b).coeffs() == std::vector<u64>{0, 1, 2, 3});
  CHECK((a - a).is_zero());
  CHECK(compose(a, b) == a);
  // (1 + T)^2 composed with T + T^2.
  auto sq = series_of(5, 2, {1, 2, 1, 0});
  auto in = series_of(5, 2, {0, 1, 1, 0});
  CHECK(compose(sq, in).coeffs() == std::vector<u64>{1, 2, 3, 2});
  CHECK(series_of(5, 2, {7, 24}).digit_strings() == std::vector<std::string>{"12", "44"});
  CHECK(a.truncated(1, 2).coeffs() == std::vector<u64>{1, 2});
  CHECK_THROWS(a + series_of(7, 2, {1, 2, 3, 4}));
}

TEST_CASE("binomial powers of 1 + T") {
  const u64 p = 5;
  const std::size_t M = 8;
  const unsigned N = 2;
  const unsigned Nw = binomial_working_precision(p, M, N);
  CHECK(Nw == N + vp_factorial(M - 1, p));
  const u64 mod = ipow_checked(p, Nw);
  CHECK(one_plus_T_pow(0, Nw, p, M, N).coeffs() == std::vector<u64>{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(one_plus_T_pow(1, Nw, p, M, N).coeffs() == std::vector<u64>{1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(one_plus_T_pow(p, 2, p, 2, 1)[1] == 0);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    u64 z1 = rng() % mod, z2 = rng() % mod;
    auto lhs = one_plus_T_pow(z1, Nw, p, M, N) * one_plus_T_pow(z2, Nw, p, M, N);
    CHECK(lhs == one_plus_T_pow((z1 + z2) % mod, Nw, p, M, N));
    // Against exact binomials of the integer representative.
    for (std::size_t k = 0; k < M; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), z1, k);
      CHECK(one_plus_T_pow(z1, Nw, p, M, N)[k] == mpz_class(b % 25).get_ui());
    }
  }
  CHECK_THROWS_AS(one_plus_T_pow(3, N, p, M, N), PrecisionError);
}
