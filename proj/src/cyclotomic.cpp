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

#include "tadic/cyclotomic.hpp"

#include <algorithm>

namespace tadic {

CycField::CycField(u64 p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (m < 1) throw PreconditionError("cyclotomic level must be >= 1");
  pm_ = ipow_checked(p, m);
  step_ = pm_ / p;
  e_ = static_cast<std::size_t>(step_ * (p - 1));
  if (pm_ > (u64{1} << 20)) throw PreconditionError("cyclotomic level too large");
}

namespace {

// Folds exponents in [e, p^m) back onto the basis using
// zeta^k = -sum_{j<p-1} zeta^(k - e + j p^(m-1)).
std::vector<mpz_class> fold(const CycField& K, std::vector<mpz_class> full) {
  const std::size_t e = K.e();
  const u64 step = K.step();
  for (std::size_t k = full.size(); k-- > e;) {
    if (full[k] == 0) continue;
    const mpz_class c = full[k];
    for (u64 j = 0; j + 1 < K.p(); ++j) full[k - e + j * step] -= c;
  }
  full.resize(e);
  return full;
}

}  // namespace

CyclotomicInt::CyclotomicInt(const CycField& field) : field_(field), c_(field.e()) {}

CyclotomicInt::CyclotomicInt(const CycField& field, std::vector<mpz_class> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (c_.size() != field_.e()) throw PreconditionError("cyclotomic coefficient vector has wrong length");
}

CyclotomicInt CyclotomicInt::constant(const CycField& field, const mpz_class& c) {
  CyclotomicInt r(field);
  r.c_[0] = c;
  return r;
}

CyclotomicInt CyclotomicInt::from_histogram(const CycField& field, const std::vector<u64>& counts) {
  if (counts.size() != field.order()) throw PreconditionError("histogram length must be p^m");
  std::vector<mpz_class> full(field.order());
  for (std::size_t t = 0; t < counts.size(); ++t) full[t] = static_cast<unsigned long>(counts[t]);
  return CyclotomicInt(field, fold(field, std::move(full)));
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& x) { return x == 0; });
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
  if (field_ != o.field_) throw PreconditionError("cyclotomic operands live in different fields");
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  check_same(o);
  CyclotomicInt r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  check_same(o);
  CyclotomicInt r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check_same(o);
  const u64 pm = field_.order();
  std::vector<mpz_class> full(pm);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      full[(i + j) % pm] += c_[i] * o.c_[j];
    }
  }
  return CyclotomicInt(field_, fold(field_, std::move(full)));
}

CyclotomicInt CyclotomicInt::operator*(const mpz_class& c) const {
  CyclotomicInt r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * c;
  return r;
}

mpz_class CyclotomicInt::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) g = gcd(g, x);
  return g;
}

CyclotomicInt CyclotomicInt::divexact(const mpz_class& c) const {
  CyclotomicInt r(field_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), c.get_mpz_t()))
      throw PropertyViolation("cyclotomic coefficient not divisible by " + c.get_str());
    mpz_divexact(r.c_[i].get_mpz_t(), c_[i].get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::string CyclotomicInt::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    if (s.empty()) {
      s = c_[i] < 0 ? "-" : "";
    } else {
      s += c_[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

CyclotomicInt root_power(const CycField& field, i64 t) {
  const u64 k = reduce_signed(t, field.order());
  std::vector<mpz_class> full(field.order());
  full[k] = 1;
  return CyclotomicInt(field, fold(field, std::move(full)));
}

ExtendedRational pi_valuation(const CyclotomicInt& x) {
  if (x.is_zero()) return ExtendedRational::infinity();
  const auto& a = x.coeffs();
  const std::size_t e = a.size();
  const u64 p = x.field().p();
  // zeta = 1 + pi: b_j = sum_{i >= j} a_i C(i, j).
  long best = -1;
  mpz_class binom;
  for (std::size_t j = 0; j < e; ++j) {
    mpz_class b = 0;
    for (std::size_t i = j; i < e; ++i) {
      if (a[i] == 0) continue;
      mpz_bin_uiui(binom.get_mpz_t(), i, j);
      b += a[i] * binom;
    }
    if (b == 0) continue;
    long v = static_cast<long>(j) + static_cast<long>(e) * static_cast<long>(vp(b, p));
    if (best < 0 || v < best) best = v;
  }
  return ExtendedRational(best);
}

CycRational::CycRational(CyclotomicInt n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw PreconditionError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpz_class g = gcd(num.content(), den);
  if (g == 0) {
    den = 1;
  } else if (g != 1) {
    num = num.divexact(g);
    den /= g;
  }
}

CycRational CycRational::operator+(const CycRational& o) const {
  return CycRational(num * o.den + o.num * den, den * o.den);
}

CycRational CycRational::operator*(const CycRational& o) const { return CycRational(num * o.num, den * o.den); }

CycRational CycRational::divided(const mpz_class& c) const { return CycRational(num, den * c); }

PiSubstitution substitute_pi(const TSeries& S, const CycField& field) {
  if (S.p() != field.p()) throw PreconditionError("series and cyclotomic field have different primes");
  CyclotomicInt pi = root_power(field, 1) - CyclotomicInt::constant(field, 1);
  CyclotomicInt acc(field);
  for (std::size_t k = S.length(); k-- > 0;) {
    acc = acc * pi;
    acc += CyclotomicInt::constant(field, mpz_class(static_cast<unsigned long>(S[k])));
  }
  const u64 prec = std::min<u64>(S.length(), static_cast<u64>(field.e()) * S.precision());
  return PiSubstitution{acc, prec};
}

bool equal_to_precision(const CyclotomicInt& x, const CyclotomicInt& y, u64 precision) {
  ExtendedRational v = pi_valuation(x - y);
  return v.is_infinite() || v.value() >= mpq_class(static_cast<unsigned long>(precision));
}

}  // namespace tadic
