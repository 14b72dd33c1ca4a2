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

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tadic/errors.hpp"

namespace tadic {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Residues modulo a modulus below 2^62; products go through 128 bits.
inline u64 mulmod(u64 a, u64 b, u64 mod) { return static_cast<u64>((u128)a * b % mod); }
inline u64 addmod(u64 a, u64 b, u64 mod) {
  u64 s = a + b;
  return s >= mod ? s - mod : s;
}
inline u64 submod(u64 a, u64 b, u64 mod) { return a >= b ? a - b : a + mod - b; }
inline u64 negmod(u64 a, u64 mod) { return a == 0 ? 0 : mod - a; }

u64 powmod(u64 base, u64 exp, u64 mod);

/// Inverse of a unit modulo `mod`; throws PreconditionError if not a unit.
u64 invmod(u64 a, u64 mod);

/// Reduce a signed integer into [0, mod).
inline u64 reduce_signed(i64 a, u64 mod) {
  i64 m = static_cast<i64>(mod);
  i64 r = a % m;
  return static_cast<u64>(r < 0 ? r + m : r);
}

bool is_prime(u64 n);

/// p^k, throwing PreconditionError when the result would not fit below 2^62.
u64 ipow_checked(u64 p, unsigned k);

/// Distinct prime factors by trial division.
std::vector<u64> prime_factors(u64 n);

/// p-adic valuation of a nonzero integer.
unsigned vp(u64 n, u64 p);
unsigned vp(const mpz_class& n, u64 p);

/// v_p(k!) by Legendre's formula.
unsigned vp_factorial(u64 k, u64 p);

/// Rational helpers: exact floor/ceil and the fractional part {x} = x - floor(x).
mpz_class floor_q(const mpq_class& x);
mpz_class ceil_q(const mpq_class& x);
mpq_class frac_q(const mpq_class& x);

/// "a/b" (or "a" when b == 1).
std::string to_string(const mpq_class& x);
std::string to_string(const mpz_class& x);
mpq_class parse_rational(const std::string& s);

/// Reduce a p-integral rational into Z/p^N; throws PrecisionError when the
/// denominator is divisible by p.
u64 reduce_rational(const mpq_class& x, u64 p, u64 pN);

}  // namespace tadic
