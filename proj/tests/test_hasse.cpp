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


#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "tadic/errors.hpp"
#include "tadic/exp_sums.hpp"
#include "tadic/hasse.hpp"
#include "tadic/polygons.hpp"

using namespace tadic;

namespace {

LaurentPolyFq make_f(unsigned e, unsigned d, u64 p, std::map<i64, u64> idx) {
  auto F = FiniteField::create(p, 1);
  std::map<i64, FieldElem> c;
  for (auto [u, v] : idx) c.emplace(u, FieldElem::constant(F, v));
  return LaurentPolyFq(Polytope1D(e, d), F, c);
}

// E(t) coefficients modulo p from the product of exp(t^{p^i}/p^i).
std::vector<u64> ref_lambda_mod_p(u64 p, std::size_t M) {
  std::vector<mpq_class> acc(M, 0);
  acc[0] = 1;
  for (u64 pi = 1; pi < M; pi *= p) {
    std::vector<mpq_class> factor(M, 0), next(M, 0);
    mpq_class term = 1;
    for (std::size_t j = 0; j * pi < M; ++j) {
      factor[j * pi] = term;
      term /= mpq_class(static_cast<unsigned long>(pi * (j + 1)));
    }
    for (std::size_t a = 0; a < M; ++a)
      for (std::size_t b = 0; a + b < M; ++b) next[a + b] += acc[a] * factor[b];
    acc = next;
  }
  std::vector<u64> out;
  const mpz_class P(static_cast<unsigned long>(p));
  for (auto& x : acc) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), P.get_mpz_t());
    mpz_class r = x.get_num() * inv % P;
    if (r < 0) r += P;
    out.push_back(r.get_ui());
  }
  return out;
}

// The value of H_m at f when the permutation class has one element, from an
// explicit enumeration of (n_j) solving sum j n_j = r, sum n_j = c.
u64 ref_single_term(const Polytope1D& delta, u64 p, const std::vector<i64>& A, const std::vector<i64>& tau,
                    const LaurentPolyFq& f) {
  auto lam = ref_lambda_mod_p(p, 64);
  const i64 lo = -static_cast<i64>(delta.e()), hi = delta.d();
  u64 total = 1;
  for (std::size_t k = 0; k < A.size(); ++k) {
    const i64 r = static_cast<i64>(p) * A[k] - tau[k];
    const mpq_class dg = delta.deg(r).value();
    const i64 c = ceil_q(dg).get_si();
    u64 sum = 0;
    std::vector<i64> n(hi - lo + 1, 0);
    std::function<void(i64, i64, i64)> rec = [&](i64 j, i64 left, i64 rem) {
      if (j > hi) {
        if (left != 0 || rem != 0) return;
        u64 t = 1;
        for (i64 jj = lo; jj <= hi; ++jj) {
          const i64 nj = n[jj - lo];
          if (!nj) continue;
          t = t * lam[nj] % p;
          t = t * powmod(f.coeff(jj).index(), nj, p) % p;
        }
        sum = (sum + t) % p;
        return;
      }
      for (i64 k = 0; k <= left; ++k) {
        n[j - lo] = k;
        rec(j + 1, left - k, rem - j * k);
      }
      n[j - lo] = 0;
    };
    rec(lo, c, r);
    total = total * sum % p;
  }
  return total;
}

std::vector<i64> V(std::initializer_list<i64> xs) { return xs; }

}  // namespace

TEST_CASE("slope sets") {
  auto s = slope_set(Polytope1D(0, 3), 11, 2);
  CHECK(s.members == V({0, 1}));
  CHECK(s.threshold == 4);
  CHECK(s.turning);
  CHECK(slope_set(Polytope1D(0, 2), 7, 1).members == V({0}));
  CHECK(slope_set(Polytope1D(1, 1), 5, 3).members == V({0, 1, -1}));
}

TEST_CASE("slope sets have m members at turning points") {
  for (unsigned e = 0; e <= 4; ++e)
    for (unsigned d = 0; d <= 4; ++d) {
      if (e + d == 0) continue;
      Polytope1D delta(e, d);
      for (u64 p : {5, 7, 11, 13, 17, 19, 23})
        for (unsigned m : hasse_turning_points(delta, p)) CHECK(slope_set(delta, p, m).members.size() == m);
    }
}

TEST_CASE("permutation classes") {
  auto id2 = s_m0(Polytope1D(0, 3), 11, 2);
  REQUIRE(id2.size() == 1);
  CHECK(id2[0].images == V({0, 1}));
  CHECK(id2[0].sign == 1);
  auto id3 = s_m0(Polytope1D(1, 1), 5, 3);
  REQUIRE(id3.size() == 1);
  CHECK(id3[0].images == V({0, 1, -1}));
  auto one = s_m0(Polytope1D(2, 3), 13, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].images == V({0}));
  CHECK_THROWS_AS(s_m0(Polytope1D(1, 1), 5, 2), PreconditionError);
}

TEST_CASE("permutation class is the minimizing set of the ceiling sum") {
  // Every permutation of A_m satisfies sum ceil(deg(p a - tau(a))) >= p_Delta(m),
  // with equality exactly on the permutation class.
  for (unsigned e = 0; e <= 3; ++e)
    for (unsigned d = 0; d <= 3; ++d) {
      if (e + d == 0) continue;
      Polytope1D delta(e, d);
      for (u64 p = 2; p <= 40; ++p) {
        if (!is_prime(p) || p <= 3 * delta.D()) continue;
        for (unsigned m : hasse_turning_points(delta, p)) {
          if (m >= delta.volume()) continue;
          CAPTURE(e);
          CAPTURE(d);
          CAPTURE(p);
          CAPTURE(m);
          auto A = slope_set(delta, p, m).members;
          const mpq_class target = arithmetic_polygon(delta, p, m).value(m);
          std::set<std::vector<i64>> cls;
          for (auto& t : s_m0(delta, p, m)) cls.insert(t.images);
          std::vector<i64> sorted = A;
          std::sort(sorted.begin(), sorted.end());
          auto perm = sorted;
          std::set<std::vector<i64>> minimizers;
          do {
            mpq_class sum = 0;
            bool all_finite = true;
            // perm lists tau(A[k]) in sorted-A order; rebuild in member order.
            std::vector<i64> images(A.size());
            for (std::size_t k = 0; k < A.size(); ++k) {
              const auto pos = std::find(sorted.begin(), sorted.end(), A[k]) - sorted.begin();
              images[k] = perm[pos];
              auto dg = delta.deg(static_cast<i64>(p) * A[k] - images[k]);
              all_finite = all_finite && dg.is_finite();
              if (all_finite) sum += mpq_class(ceil_q(dg.value()));
            }
            if (!all_finite) continue;
            CHECK(sum >= target);
            if (sum == target && images[0] == 0) minimizers.insert(images);
          } while (std::next_permutation(perm.begin(), perm.end()));
          CHECK(minimizers == cls);
        }
      }
    }
}

TEST_CASE("the identity need not lie in the permutation class") {
  // For [-1,3] at p = 11 the transposition of 1 and 2 gives the smaller sum.
  auto S = s_m0(Polytope1D(1, 3), 11, 3);
  REQUIRE(S.size() == 1);
  CHECK(S[0].images == V({0, 2, 1}));
  CHECK(S[0].sign == -1);
}

TEST_CASE("tau readings differ only on sign-changing permutations") {
  for (unsigned e = 1; e <= 3; ++e)
    for (unsigned d = 1; d <= 3; ++d) {
      Polytope1D delta(e, d);
      for (u64 p : {11, 13, 17, 19, 23, 29, 31, 37}) {
        if (p <= 3 * delta.D()) continue;
        for (unsigned m : hasse_turning_points(delta, p)) {
          if (m >= delta.volume()) continue;
          auto A = slope_set(delta, p, m).members;
          for (auto& t : s_m0_reading_differences(delta, p, m)) {
            bool flips = false;
            for (std::size_t k = 0; k < A.size(); ++k) flips = flips || (A[k] > 0 && t.images[k] < 0) || (A[k] < 0 && t.images[k] > 0);
            CHECK(flips);
          }
        }
      }
    }
}

TEST_CASE("hasse polynomial examples") {
  CHECK(hasse_m(Polytope1D(0, 3), 11, 2).to_string() == "2*y1*y3^3 + 3*y2^2*y3^2");
  CHECK(hasse_m(Polytope1D(1, 1), 5, 3).to_string() == "y1^4*y-1^4");
  CHECK(hasse_m(Polytope1D(0, 3), 11, 1).to_string() == "1");
  CHECK(hasse_m(Polytope1D(2, 3), 31, 1).to_string() == "1");
  CHECK(hasse_turning_points(Polytope1D(0, 3), 11) == std::vector<unsigned>{1, 2});
}

TEST_CASE("hasse evaluation examples") {
  Polytope1D a(0, 3);
  auto bad = hasse_product_eval(a, 11, make_f(0, 3, 11, {{1, 4}, {2, 1}, {3, 1}}));
  CHECK(bad.value.is_zero());
  CHECK_FALSE(bad.nonzero);
  auto good = hasse_product_eval(a, 11, make_f(0, 3, 11, {{1, 1}, {3, 1}}));
  CHECK(good.value == FieldElem::constant(good.value.field(), 2));
  CHECK(good.nonzero);
  for (u64 x = 1; x < 5; ++x)
    for (u64 y = 1; y < 5; ++y) CHECK(hasse_product_eval(Polytope1D(1, 1), 5, make_f(1, 1, 5, {{-1, x}, {1, y}})).nonzero);
}

TEST_CASE("hasse polynomials are nonzero above 3D") {
  for (unsigned e = 0; e <= 4; ++e)
    for (unsigned d = 0; d <= 4; ++d) {
      if (e + d == 0) continue;
      Polytope1D delta(e, d);
      for (u64 p = 2; p <= 50; ++p) {
        if (!is_prime(p) || p <= 3 * delta.D() || delta.D() > 6) continue;
        for (unsigned m : hasse_turning_points(delta, p)) {
          if (m >= delta.volume()) continue;
          CAPTURE(e);
          CAPTURE(d);
          CAPTURE(p);
          CAPTURE(m);
          CHECK_FALSE(hasse_m(delta, p, m).is_zero());
        }
      }
    }
}

TEST_CASE("hasse polynomials agree with an explicit enumeration") {
  std::mt19937_64 rng(19);
  struct Case {
    unsigned e, d;
    u64 p;
  };
  for (Case c : {Case{0, 3, 11}, Case{0, 3, 13}, Case{1, 1, 5}, Case{1, 2, 7}, Case{0, 4, 13}, Case{1, 3, 11},
                 Case{2, 2, 7}}) {
    Polytope1D delta(c.e, c.d);
    for (unsigned m : hasse_turning_points(delta, c.p)) {
      if (m >= delta.volume()) continue;
      auto S = s_m0(delta, c.p, m);
      if (S.size() != 1) continue;
      auto H = hasse_m(delta, c.p, m);
      auto A = slope_set(delta, c.p, m).members;
      for (int t = 0; t < 20; ++t) {
        std::map<i64, u64> coeffs;
        for (i64 u = -static_cast<i64>(c.e); u <= static_cast<i64>(c.d); ++u)
          coeffs[u] = (u == -static_cast<i64>(c.e) || u == static_cast<i64>(c.d)) ? 1 + rng() % (c.p - 1) : rng() % c.p;
        auto f = make_f(c.e, c.d, c.p, coeffs);
        CAPTURE(c.e);
        CAPTURE(c.d);
        CAPTURE(c.p);
        CAPTURE(m);
        const u64 ref = ref_single_term(delta, c.p, A, S[0].images, f);
        CHECK(H.evaluate(f).index() == (S[0].sign > 0 ? ref : (c.p - ref) % c.p));
      }
    }
  }
}

TEST_CASE("weighted degree lower bound") {
  for (unsigned e = 0; e <= 3; ++e)
    for (unsigned d = 1; d <= 3; ++d) {
      Polytope1D delta(e, d);
      for (u64 p : {7, 11, 13, 17, 19}) {
        if (p <= 3 * delta.D()) continue;
        for (unsigned m : hasse_turning_points(delta, p)) {
          if (m >= delta.volume()) continue;
          u64 base = 0;
          for (i64 i : slope_set(delta, p, m).members) base += (p - 1) * static_cast<u64>(std::llabs(i));
          for (u64 w : hasse_m(delta, p, m).weighted_degrees()) CHECK(w >= base);
        }
      }
    }
  for (u64 w : hasse_m(Polytope1D(0, 3), 11, 2).weighted_degrees()) CHECK(w == 10);
}

TEST_CASE("hasse polynomial algebra") {
  Polytope1D delta(1, 2);
  HassePolynomial x(7, 1, delta), y(7, 1, delta);
  HassePolynomial::Exponents e1(x.variable_count(), 0), e2 = e1;
  e1[HassePolynomial::slot(1)] = 1;
  e2[HassePolynomial::slot(-1)] = 2;
  x.add_term(e1, 3);
  y.add_term(e2, 5);
  CHECK((x * y).to_string() == "y1*y-1^2");
  CHECK((x + x).to_string() == "6*y1");
  CHECK(x.scaled(5).to_string() == "y1");
  CHECK(HassePolynomial::one(7, 1, delta).to_string() == "1");
  CHECK(HassePolynomial(7, 1, delta).to_string() == "0");
  for (i64 j = -3; j <= 3; ++j) CHECK(HassePolynomial::variable(HassePolynomial::slot(j)) == j);
}
