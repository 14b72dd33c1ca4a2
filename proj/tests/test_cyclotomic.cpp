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
#include "tadic/cyclotomic.hpp"
#include "tadic/errors.hpp"

using namespace tadic;

namespace {

CyclotomicInt random_cyc(const CycField& K, std::mt19937_64& rng) {
  std::vector<mpz_class> c(K.e());
  for (auto& v : c) v = static_cast<long>(rng() % 41) - 20;
  return CyclotomicInt(K, c);
}

CyclotomicInt zeta_minus_one(const CycField& K) { return root_power(K, 1) - CyclotomicInt::constant(K, 1); }

}  // namespace

TEST_CASE("cyclotomic field data") {
  CycField K(5, 2);
  CHECK(K.e() == 20);
  CHECK(K.order() == 25);
  CHECK(K.step() == 5);
  CHECK_THROWS(CycField(4, 1));
}

TEST_CASE("root powers") {
  CycField K(5, 1);
  CHECK(root_power(K, 0) == CyclotomicInt::constant(K, 1));
  CHECK(root_power(K, 3).coeffs() == std::vector<mpz_class>{0, 0, 0, 1});
  CHECK(root_power(K, 4).coeffs() == std::vector<mpz_class>{-1, -1, -1, -1});
  CHECK(root_power(K, -1) == root_power(K, 4));
  CHECK(root_power(K, 9) == root_power(K, 4));
  for (unsigned m : {1u, 2u}) {
    CycField L(3, m);
    for (i64 s = 0; s < 9; ++s)
      for (i64 t = 0; t < 9; ++t) CHECK(root_power(L, s) * root_power(L, t) == root_power(L, s + t));
    // The sum of all p^m-th roots of unity vanishes.
    CyclotomicInt sum(L);
    for (i64 t = 0; t < static_cast<i64>(L.order()); ++t) sum += root_power(L, t);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("pi-adic valuation examples") {
  CycField K(5, 1);
  CHECK(pi_valuation(CyclotomicInt::constant(K, 5)) == ExtendedRational(4));
  CHECK(pi_valuation(zeta_minus_one(K)) == ExtendedRational(1));
  CHECK(pi_valuation(root_power(K, 1) + root_power(K, -1) - CyclotomicInt::constant(K, 2)) == ExtendedRational(2));
  CHECK(pi_valuation(CyclotomicInt(K)).is_infinite());
  CHECK(pi_valuation(CyclotomicInt::constant(K, 1)) == ExtendedRational(0));
}

TEST_CASE("pi-adic valuation is a valuation") {
  std::mt19937_64 rng(13);
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    CycField K(p, m);
    auto pi = zeta_minus_one(K);
    for (int t = 0; t < 60; ++t) {
      auto x = random_cyc(K, rng), y = random_cyc(K, rng);
      // Push some samples deep into the maximal ideal.
      for (u64 j = rng() % 4; j > 0; --j) x = x * pi;
      if (x.is_zero() || y.is_zero()) continue;
      auto vx = pi_valuation(x), vy = pi_valuation(y);
      CHECK(pi_valuation(x * y).value() == vx.value() + vy.value());
      auto vs = pi_valuation(x + y);
      auto lo = std::min(vx.value(), vy.value());
      CHECK_FALSE(vs < ExtendedRational(lo));
      if (vx.value() != vy.value()) CHECK(vs == ExtendedRational(lo));
    }
  }
}

TEST_CASE("norm of zeta - 1") {
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
    CycField K(p, m);
    auto prod = CyclotomicInt::constant(K, 1);
    for (i64 j = 1; j < static_cast<i64>(K.order()); ++j)
      if (j % static_cast<i64>(p) != 0) prod = prod * (root_power(K, j) - CyclotomicInt::constant(K, 1));
    const mpz_class pp(static_cast<unsigned long>(p));
    CHECK((prod == CyclotomicInt::constant(K, pp) || prod == CyclotomicInt::constant(K, -pp)));
    CHECK(pi_valuation(prod) == ExtendedRational(static_cast<long>(K.e())));
  }
}

TEST_CASE("histograms and exact division") {
  CycField K(5, 1);
  CHECK(CyclotomicInt::from_histogram(K, {0, 1, 1, 1, 1}) == CyclotomicInt::constant(K, -1));
  auto x = CyclotomicInt(K, {6, 9, 0, 3});
  CHECK(x.content() == 3);
  CHECK(x.divexact(3).coeffs() == std::vector<mpz_class>{2, 3, 0, 1});
  CHECK_THROWS(x.divexact(2));
  CHECK(x.to_string() == "6 + 9*z + 3*z^3");
  CycRational r(x, 6);
  CHECK(r.num.coeffs() == std::vector<mpz_class>{2, 3, 0, 1});
  CHECK(r.den == 2);
  CHECK_FALSE(r.is_integral());
  CHECK((r + r).is_integral());
}

TEST_CASE("substituting pi into T-series") {
  CycField K(5, 1);
  TSeries one_plus_T(5, 2, std::vector<u64>{1, 1, 0});
  auto s = substitute_pi(one_plus_T, K);
  CHECK(s.value == root_power(K, 1));
  auto z = substitute_pi(TSeries(5, 2, 3), K);
  CHECK(z.value.is_zero());
  CHECK(z.precision == 3);
  CHECK(substitute_pi(TSeries(5, 1, 9), K).precision == 4);
  // Ring homomorphism up to the declared precision.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<u64> a(6), b(6);
    for (auto& v : a) v = rng() % 125;
    for (auto& v : b) v = rng() % 125;
    TSeries A(5, 3, a), B(5, 3, b);
    auto sa = substitute_pi(A, K), sb = substitute_pi(B, K), sab = substitute_pi(A * B, K);
    CHECK(equal_to_precision(sa.value * sb.value, sab.value, sab.precision));
    CHECK(equal_to_precision(sa.value + sb.value, substitute_pi(A + B, K).value, sab.precision));
  }
}

TEST_CASE("equality to a precision") {
  CycField K(5, 1);
  auto pi = zeta_minus_one(K);
  auto one = CyclotomicInt::constant(K, 1);
  CHECK(equal_to_precision(one, one + pi * pi, 2));
  CHECK_FALSE(equal_to_precision(one, one + pi * pi, 3));
}
