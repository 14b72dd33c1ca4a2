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

#include <string>
#include <vector>

#include <gmpxx.h>

#include "tadic/arith.hpp"
#include "tadic/polygons.hpp"
#include "tadic/series.hpp"

namespace tadic {

/// Q(zeta) for zeta a primitive p^m-th root of unity, with ring of integers
/// Z[zeta] presented in the basis zeta^0 .. zeta^(e_m - 1).
class CycField {
 public:
  CycField(u64 p, unsigned m);
  u64 p() const { return p_; }
  unsigned level() const { return m_; }
  /// p^m.
  u64 order() const { return pm_; }
  /// p^(m-1) (p - 1), the ramification index of pi = zeta - 1.
  std::size_t e() const { return e_; }
  /// p^(m-1).
  u64 step() const { return step_; }
  bool operator==(const CycField& o) const { return p_ == o.p_ && m_ == o.m_; }
  bool operator!=(const CycField& o) const { return !(*this == o); }

 private:
  u64 p_;
  unsigned m_;
  u64 pm_;
  std::size_t e_;
  u64 step_;
};

class CyclotomicInt {
 public:
  explicit CyclotomicInt(const CycField& field);
  CyclotomicInt(const CycField& field, std::vector<mpz_class> coeffs);
  static CyclotomicInt constant(const CycField& field, const mpz_class& c);
  /// sum_t counts[t] zeta^t for t in [0, p^m).
  static CyclotomicInt from_histogram(const CycField& field, const std::vector<u64>& counts);

  const CycField& field() const { return field_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const mpz_class& c) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
  bool operator==(const CyclotomicInt& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  /// gcd of the coefficients (0 for zero).
  mpz_class content() const;
  /// Exact division of every coefficient; throws if some is not divisible.
  CyclotomicInt divexact(const mpz_class& c) const;
  /// "c0 + c1*z + ..." with zero terms omitted.
  std::string to_string() const;

 private:
  void check_same(const CyclotomicInt& o) const;
  CycField field_;
  std::vector<mpz_class> c_;
};

/// zeta^t in the standard basis; t is taken modulo p^m.
CyclotomicInt root_power(const CycField& field, i64 t);

/// Valuation normalised by v(zeta - 1) = 1; infinity for 0.
ExtendedRational pi_valuation(const CyclotomicInt& x);

/// x / den with den > 0.
struct CycRational {
  CyclotomicInt num;
  mpz_class den;
  explicit CycRational(CyclotomicInt n, mpz_class d = 1);
  CycRational operator+(const CycRational& o) const;
  CycRational operator*(const CycRational& o) const;
  CycRational divided(const mpz_class& c) const;
  bool is_integral() const { return den == 1; }
};

struct PiSubstitution {
  CyclotomicInt value;
  /// The value is correct modulo pi^precision.
  u64 precision;
};

/// sum_k S_k (zeta - 1)^k with the series' residues as integer coefficients.
PiSubstitution substitute_pi(const TSeries& S, const CycField& field);

/// True when v(x - y) >= precision.
bool equal_to_precision(const CyclotomicInt& x, const CyclotomicInt& y, u64 precision);

}  // namespace tadic
