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
#include "tadic/galois_ring.hpp"

using namespace tadic;

TEST_CASE("hensel modulus") {
  auto Z25 = hensel_modulus(5, 2, 1);
  CHECK(Z25->pN() == 25);
  CHECK(Z25->modulus() == std::vector<u64>{0, 1});
  auto R = hensel_modulus(3, 2, 2);
  GRElem xi(R, {0, 1});
  CHECK(xi.pow(9) == xi);
  for (auto [p, N, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{{3, 2, 2}, {2, 5, 3}, {5, 3, 2}, {7, 2, 3}}) {
    auto S = hensel_modulus(p, N, n);
    const auto& fm = S->residue_field()->modulus();
    for (unsigned i = 0; i <= n; ++i) CHECK(S->modulus()[i] % p == fm[i]);
    GRElem x(S, std::vector<u64>(n, 0));
    x.coeffs()[1 % n] = 1;
    if (n > 1) CHECK(x.pow(ipow_checked(p, n)) == x);
  }
}

TEST_CASE("teichmuller lifts") {
  auto Z25 = GaloisRing::create(5, 2, 1);
  auto F5 = Z25->residue_field();
  CHECK(teichmuller(FieldElem::constant(F5, 2), Z25) == GRElem::constant(Z25, 7));
  CHECK(teichmuller(FieldElem::constant(F5, 1), Z25) == GRElem::constant(Z25, 1));
  std::mt19937_64 rng(9);
  for (auto [p, N, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{{5, 3, 1}, {3, 3, 2}, {2, 6, 3}, {7, 2, 2}}) {
    auto R = GaloisRing::create(p, N, n);
    auto F = R->residue_field();
    for (int t = 0; t < 25; ++t) {
      auto x = FieldElem::from_index(F, rng() % F->order());
      auto y = FieldElem::from_index(F, rng() % F->order());
      auto wx = teichmuller(x, R), wy = teichmuller(y, R);
      CHECK(wx.reduce() == x);
      CHECK(wx.pow(F->order()) == wx);
      CHECK(wx * wy == teichmuller(x * y, R));
      CHECK(gr_frobenius(wx) == teichmuller(x.pow(p), R));
    }
  }
}

TEST_CASE("galois ring frobenius and trace") {
  auto Zp = GaloisRing::create(7, 3, 1);
  GRElem z = GRElem::constant(Zp, 123);
  CHECK(gr_frobenius(z) == z);
  std::mt19937_64 rng(21);
  for (auto [p, N, n] : std::vector<std::tuple<u64, unsigned, unsigned>>{{3, 3, 2}, {2, 5, 4}, {5, 2, 3}}) {
    auto R = GaloisRing::create(p, N, n);
    CHECK(gr_trace(GRElem::constant(R, 1)) == n % R->pN());
    for (int t = 0; t < 25; ++t) {
      std::vector<u64> c(n), d(n);
      for (auto& v : c) v = rng() % R->pN();
      for (auto& v : d) v = rng() % R->pN();
      GRElem x(R, c), y(R, d);
      auto s = x;
      for (unsigned i = 0; i < n; ++i) s = gr_frobenius(s);
      CHECK(s == x);
      CHECK(gr_frobenius_inverse(gr_frobenius(x)) == x);
      CHECK(gr_frobenius(x * y) == gr_frobenius(x) * gr_frobenius(y));
      CHECK(gr_frobenius(x).reduce() == x.reduce().pow(p));
      CHECK(gr_trace(x) % p == trace_absolute(x.reduce()));
      CHECK(gr_trace(gr_frobenius(x)) == gr_trace(x));
      // Trace as a sum of conjugates.
      GRElem acc(R);
      auto cj = x;
      for (unsigned i = 0; i < n; ++i, cj = gr_frobenius(cj)) acc += cj;
      CHECK(acc == GRElem::constant(R, gr_trace(x)));
      if (x.is_unit()) CHECK(x * x.inverse() == GRElem::constant(R, 1));
    }
  }
}

TEST_CASE("linear solve modulo p^N") {
  // [[1,2],[3,4]] x = [5,6] over Z/25: x = (-4, 9/2).
  auto x = solve_mod({1, 2, 3, 4}, {5, 6}, 2, 5, 25);
  CHECK((x[0] + 2 * x[1]) % 25 == 5);
  CHECK((3 * x[0] + 4 * x[1]) % 25 == 6);
}
