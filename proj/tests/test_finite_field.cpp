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
#include <set>

#include "doctest.h"
#include "tadic/errors.hpp"
#include "tadic/finite_field.hpp"

using namespace tadic;

namespace {

FieldElem random_elem(const FieldPtr& F, std::mt19937_64& rng) { return FieldElem::from_index(F, rng() % F->order()); }

}  // namespace

TEST_CASE("field moduli") {
  CHECK(FiniteField::create(3, 2)->modulus() == std::vector<u64>{1, 0, 1});
  CHECK(FiniteField::create(7, 1)->modulus() == std::vector<u64>{0, 1});
  auto F16 = FiniteField::create(2, 4);
  // No roots in F_2 and no quadratic factor, so no roots in F_4.
  const auto& m = F16->modulus();
  CHECK(m.size() == 5);
  CHECK(m[0] != 0);
  u64 at_one = 0;
  for (u64 c : m) at_one ^= c;
  CHECK(at_one == 1);
  CHECK(poly_fp::gcd(m, {1, 1, 1}, 2).size() == 1);
  CHECK(poly_fp::is_irreducible(m, 2));
  CHECK_THROWS_AS(FiniteField::create(6, 1), PreconditionError);
  // Determinism.
  CHECK(FiniteField::create(5, 3)->modulus() == FiniteField::create(5, 3)->modulus());
}

TEST_CASE("field arithmetic against x^(q-1) = 1") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 3}, {13, 1}}) {
    auto F = FiniteField::create(p, n);
    for (int t = 0; t < 30; ++t) {
      auto x = random_elem(F, rng), y = random_elem(F, rng), z = random_elem(F, rng);
      CHECK((x * (y + z)) == (x * y + x * z));
      CHECK((x - x).is_zero());
      if (!x.is_zero()) {
        CHECK(x.pow(F->order() - 1).is_one());
        CHECK((x * x.inverse()).is_one());
      }
      CHECK(FieldElem::from_index(F, x.index()) == x);
    }
  }
}

TEST_CASE("frobenius and trace") {
  auto F4 = FiniteField::create(2, 2);
  auto w = FieldElem::generator(F4);
  CHECK((w * w + w + FieldElem::constant(F4, 1)).is_zero());
  CHECK(trace_absolute(w) == 1);
  auto F7 = FiniteField::create(7, 1);
  for (u64 c = 0; c < 7; ++c) {
    CHECK(trace_absolute(FieldElem::constant(F7, c)) == c);
    CHECK(frobenius(FieldElem::constant(F7, c)) == FieldElem::constant(F7, c));
  }
  std::mt19937_64 rng(5);
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    auto F = FiniteField::create(p, n);
    for (int t = 0; t < 30; ++t) {
      auto x = random_elem(F, rng), y = random_elem(F, rng);
      CHECK(frobenius(x) == x.pow(p));
      auto fx = x;
      for (unsigned i = 0; i < n; ++i) fx = frobenius(fx);
      CHECK(fx == x);
      CHECK(trace_absolute(frobenius(x)) == trace_absolute(x));
      CHECK(trace_absolute(x + y) == (trace_absolute(x) + trace_absolute(y)) % p);
      // Trace as a sum of conjugates.
      auto s = FieldElem(F);
      auto c = x;
      for (unsigned i = 0; i < n; ++i, c = frobenius(c)) s += c;
      CHECK(s == FieldElem::constant(F, trace_absolute(x)));
    }
  }
}

TEST_CASE("relative trace lands in the subfield") {
  std::mt19937_64 rng(3);
  auto F = FiniteField::create(3, 4);
  for (int t = 0; t < 20; ++t) {
    auto x = random_elem(F, rng);
    auto tr = trace_relative(x, 2);
    CHECK(tr.pow(9) == tr);
  }
}

TEST_CASE("mixed-field operands are rejected") {
  auto a = FieldElem::constant(FiniteField::create(5, 1), 1);
  auto b = FieldElem::constant(FiniteField::create(5, 2), 1);
  CHECK_THROWS(a + b);
}

TEST_CASE("embeddings") {
  std::mt19937_64 rng(17);
  for (auto [p, a, k] : std::vector<std::tuple<u64, unsigned, unsigned>>{{2, 2, 2}, {3, 1, 3}, {5, 2, 2}, {2, 3, 2}}) {
    auto S = FiniteField::create(p, a);
    auto T = FiniteField::create(p, a * k);
    FieldEmbedding emb(S, T);
    CHECK(emb(FieldElem::constant(S, 1)).is_one());
    for (int t = 0; t < 100; ++t) {
      auto x = random_elem(S, rng), y = random_elem(S, rng);
      CHECK(emb(x + y) == emb(x) + emb(y));
      CHECK(emb(x * y) == emb(x) * emb(y));
    }
    auto w = FieldElem::generator(S);
    u64 qa = 1;
    for (unsigned i = 0; i < a; ++i) qa *= p;
    CHECK(emb(w).pow(qa) == emb(w.pow(qa)));
  }
  // Composite embeddings agree with the direct one up to a Frobenius power.
  auto F4 = FiniteField::create(2, 2), F16 = FiniteField::create(2, 4), F256 = FiniteField::create(2, 8);
  FieldEmbedding e1(F4, F16), e2(F16, F256), e12(F4, F256);
  auto w = FieldElem::generator(F4);
  auto img = e2(e1(w));
  bool matched = false;
  auto c = e12(w);
  for (int i = 0; i < 8; ++i, c = frobenius(c)) matched = matched || (c == img);
  CHECK(matched);
}

TEST_CASE("unit enumeration") {
  for (auto [p, n, count] : std::vector<std::tuple<u64, unsigned, u64>>{{5, 1, 4}, {2, 2, 3}, {7, 2, 48}}) {
    auto F = FiniteField::create(p, n);
    std::set<u64> seen;
    u64 c = 0;
    for (const auto& x : units_iter(F)) {
      CHECK_FALSE(x.is_zero());
      seen.insert(x.index());
      ++c;
    }
    CHECK(c == count);
    CHECK(seen.size() == count);
  }
}

TEST_CASE("primitive element has full order") {
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 3}, {7, 2}, {11, 1}}) {
    auto F = FiniteField::create(p, n);
    auto g = primitive_element(F);
    const u64 ord = F->order() - 1;
    for (u64 r : prime_factors(ord)) CHECK_FALSE(g.pow(ord / r).is_one());
    CHECK(g.pow(ord).is_one());
  }
}
