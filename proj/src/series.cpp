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

#include "tadic/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace tadic {

TSeries::TSeries(u64 p, unsigned N, std::size_t M) : p_(p), N_(N), pN_(ipow_checked(p, N)), c_(M, 0) {}

TSeries::TSeries(u64 p, unsigned N, std::vector<u64> coeffs)
    : p_(p), N_(N), pN_(ipow_checked(p, N)), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= pN_;
}

void TSeries::check_same(const TSeries& o) const {
  if (p_ != o.p_ || N_ != o.N_ || c_.size() != o.c_.size())
    throw PreconditionError("series operands have different precision");
}

TSeries TSeries::operator+(const TSeries& o) const {
  check_same(o);
  TSeries r(p_, N_, c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = addmod(c_[k], o.c_[k], pN_);
  return r;
}

TSeries TSeries::operator-(const TSeries& o) const {
  check_same(o);
  TSeries r(p_, N_, c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = submod(c_[k], o.c_[k], pN_);
  return r;
}

TSeries TSeries::operator*(const TSeries& o) const {
  check_same(o);
  const std::size_t M = c_.size();
  TSeries r(p_, N_, M);
  for (std::size_t i = 0; i < M; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; i + j < M; ++j) r.c_[i + j] = addmod(r.c_[i + j], mulmod(c_[i], o.c_[j], pN_), pN_);
  }
  return r;
}

TSeries TSeries::scaled(u64 c) const {
  TSeries r = *this;
  for (auto& x : r.c_) x = mulmod(x, c % pN_, pN_);
  return r;
}

TSeries TSeries::truncated(unsigned N, std::size_t M) const {
  if (N > N_ || M > c_.size()) throw PrecisionError("cannot refine a truncated series");
  return TSeries(p_, N, std::vector<u64>(c_.begin(), c_.begin() + static_cast<long>(M)));
}

bool TSeries::operator==(const TSeries& o) const { return p_ == o.p_ && N_ == o.N_ && c_ == o.c_; }

bool TSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

std::vector<std::string> TSeries::digit_strings() const {
  std::vector<std::string> out;
  for (u64 c : c_) {
    std::string s;
    for (unsigned i = 0; i < N_; ++i) {
      u64 digit = c % p_;
      c /= p_;
      std::string d = std::to_string(digit);
      // Digits of p > 10 are separated so the string stays unambiguous.
      s = (p_ > 10 && i > 0 ? d + "." : d) + s;
    }
    out.push_back(s);
  }
  return out;
}

TSeries compose(const TSeries& outer, const TSeries& inner) {
  if (inner.length() > 0 && inner[0] != 0) throw PreconditionError("inner series must have zero constant term");
  if (outer.p() != inner.p() || outer.precision() != inner.precision())
    throw PreconditionError("composition of series with different precision");
  const std::size_t M = inner.length();
  TSeries acc(inner.p(), inner.precision(), M);
  for (std::size_t k = std::min(outer.length(), M); k-- > 0;) {
    acc = acc * inner;
    acc[0] = addmod(acc[0], outer[k], acc.pN());
  }
  return acc;
}

std::optional<long> RationalSeries::min_valuation(u64 p) const {
  std::optional<long> best;
  for (const auto& c : coeffs) {
    if (c == 0) continue;
    long v = static_cast<long>(vp(c.get_num(), p)) - static_cast<long>(vp(c.get_den(), p));
    if (!best || v < *best) best = v;
  }
  return best;
}

namespace {

std::mutex g_ah_mu;
std::map<u64, std::vector<mpq_class>> g_ah_cache;
std::optional<std::pair<std::size_t, mpq_class>> g_tamper;

std::vector<mpq_class> compute_artin_hasse(u64 p, std::size_t M) {
  // g(t) = sum_i t^(p^i)/p^i; E = exp(g) via n E_n = sum_k k g_k E_{n-k}.
  std::vector<mpq_class> g(M, 0);
  for (u64 pk = 1; pk < M; pk *= p) {
    g[pk] = mpq_class(1, pk);
    g[pk].canonicalize();
    if (pk > M / p) break;
  }
  std::vector<mpq_class> E(M, 0);
  if (M > 0) E[0] = 1;
  for (std::size_t n = 1; n < M; ++n) {
    mpq_class s = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (g[k] != 0) s += mpq_class(static_cast<long>(k)) * g[k] * E[n - k];
    E[n] = s / mpq_class(static_cast<long>(n));
    E[n].canonicalize();
  }
  return E;
}

}  // namespace

RationalSeries artin_hasse(u64 p, std::size_t M) {
  if (M < 1) throw PreconditionError("artin_hasse needs M >= 1");
  std::vector<mpq_class> coeffs;
  {
    std::lock_guard<std::mutex> lock(g_ah_mu);
    auto& cached = g_ah_cache[p];
    if (cached.size() < M) cached = compute_artin_hasse(p, std::max(M, 2 * cached.size()));
    coeffs.assign(cached.begin(), cached.begin() + static_cast<long>(M));
    if (g_tamper && g_tamper->first < M) coeffs[g_tamper->first] = g_tamper->second;
  }
  for (std::size_t i = 0; i < M; ++i)
    if (coeffs[i] != 0 && vp(coeffs[i].get_den(), p) > 0)
      throw PropertyViolation("Artin–Hasse coefficient " + std::to_string(i) + " is not p-integral");
  return RationalSeries{std::move(coeffs)};
}

std::vector<u64> artin_hasse_mod(u64 p, std::size_t M, unsigned N) {
  const u64 pN = ipow_checked(p, N);
  RationalSeries E = artin_hasse(p, M);
  std::vector<u64> out(M);
  for (std::size_t i = 0; i < M; ++i) out[i] = reduce_rational(E.coeffs[i], p, pN);
  return out;
}

TSeries artin_hasse_compose(const TSeries& s) {
  const std::size_t M = s.length();
  std::vector<u64> lambda = artin_hasse_mod(s.p(), std::max<std::size_t>(M, 1), s.precision());
  TSeries lam(s.p(), s.precision(), lambda);
  TSeries r = compose(lam, s);
  r[0] = submod(r[0], 1, r.pN());
  return r;
}

TSeries pi_of_T(u64 p, std::size_t M, unsigned N) {
  if (M < 1) throw PreconditionError("pi_of_T needs M >= 1");
  std::vector<u64> lambda = artin_hasse_mod(p, M, N);
  TSeries T(p, N, M);
  if (M > 1) T[1] = 1;
  // pi = T - sum_{j>=2} lambda_j pi^j; each pass fixes one more coefficient.
  TSeries pi = T;
  for (std::size_t pass = 1; pass < M; ++pass) {
    TSeries tail(p, N, M);
    for (std::size_t j = M; j-- > 2;) {
      tail = tail * pi;
      tail[0] = addmod(tail[0], lambda[j], tail.pN());
    }
    tail = tail * pi * pi;
    pi = T - tail;
  }
  TSeries check = artin_hasse_compose(pi);
  if (!(check == T)) throw PropertyViolation("E(pi(T)) != 1 + T");
  return pi;
}

unsigned binomial_working_precision(u64 p, std::size_t M, unsigned N) {
  return N + (M > 1 ? vp_factorial(M - 1, p) : 0);
}

TSeries one_plus_T_pow(u64 z, unsigned z_precision, u64 p, std::size_t M, unsigned N) {
  const unsigned need = binomial_working_precision(p, M, N);
  if (z_precision < need)
    throw PrecisionError("(1+T)^z needs z modulo p^" + std::to_string(need) + ", got p^" +
                         std::to_string(z_precision));
  const u64 pz = ipow_checked(p, z_precision);
  const mpz_class modN(static_cast<unsigned long>(ipow_checked(p, N)));
  mpz_class zz(static_cast<unsigned long>(z % pz));
  TSeries out(p, N, M);
  mpz_class b;
  for (std::size_t k = 0; k < M; ++k) {
    mpz_bin_ui(b.get_mpz_t(), zz.get_mpz_t(), k);
    mpz_class r = b % modN;
    out[k] = r.get_ui();
  }
  return out;
}

namespace testing {

ArtinHasseTamper::ArtinHasseTamper(std::size_t index, mpq_class value) {
  std::lock_guard<std::mutex> lock(g_ah_mu);
  g_tamper = std::make_pair(index, std::move(value));
}

ArtinHasseTamper::~ArtinHasseTamper() {
  std::lock_guard<std::mutex> lock(g_ah_mu);
  g_tamper.reset();
}

bool artin_hasse_tampered() {
  std::lock_guard<std::mutex> lock(g_ah_mu);
  return g_tamper.has_value();
}

}  // namespace testing

}  // namespace tadic
