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

#include "tadic/arith.hpp"

#include <limits>

namespace tadic {

u64 powmod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 mod) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(mod), new_r = static_cast<i64>(a % mod);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw PreconditionError("invmod: " + std::to_string(a) + " is not a unit mod " + std::to_string(mod));
  return reduce_signed(t, mod);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 ipow_checked(u64 p, unsigned k) {
  u64 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > (u64{1} << 62) / p) throw PreconditionError("p^k exceeds 2^62");
    r *= p;
  }
  return r;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned vp(u64 n, u64 p) {
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

unsigned vp(const mpz_class& n, u64 p) {
  if (n == 0) throw PreconditionError("vp of zero");
  mpz_class r = abs(n);
  mpz_class pp(static_cast<unsigned long>(p));
  return static_cast<unsigned>(mpz_remove(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t()));
}

unsigned vp_factorial(u64 k, u64 p) {
  unsigned v = 0;
  for (u64 pk = p; pk <= k; pk *= p) {
    v += static_cast<unsigned>(k / pk);
    if (pk > k / p) break;
  }
  return v;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

mpq_class frac_q(const mpq_class& x) { return x - mpq_class(floor_q(x)); }

std::string to_string(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const mpz_class& x) { return x.get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw PreconditionError("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

u64 reduce_rational(const mpq_class& x, u64 p, u64 pN) {
  mpz_class den = x.get_den();
  if (den % static_cast<unsigned long>(p) == 0)
    throw PrecisionError("rational " + to_string(x) + " is not p-integral");
  mpz_class modz(static_cast<unsigned long>(pN));
  mpz_class num = x.get_num() % modz;
  if (num < 0) num += modz;
  mpz_class d = den % modz;
  u64 n64 = num.get_ui();
  u64 d64 = d.get_ui();
  return mulmod(n64, invmod(d64, pN), pN);
}

}  // namespace tadic
