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

#include "tadic/galois_ring.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <mutex>
#include <sstream>

namespace tadic {

namespace {

// Multiplication in Z/pN[x]/(F) for a monic F of degree n.
void ring_mul(const std::vector<u64>& F, unsigned n, u64 pN, const u64* x, const u64* y, u64* out) {
  if (n == 1) {
    out[0] = mulmod(x[0], y[0], pN);
    return;
  }
  u64 buf[64];
  std::vector<u64> big;
  u64* r = buf;
  if (2 * n - 1 > 64) {
    big.assign(2 * n - 1, 0);
    r = big.data();
  } else {
    std::fill(buf, buf + 2 * n - 1, 0);
  }
  if (static_cast<u128>(2 * n) * pN * pN < (static_cast<u128>(1) << 64)) {
    // Every entry stays below 2 n pN^2: reduce only when a value is used.
    for (unsigned i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < n; ++j) r[i + j] += x[i] * y[j];
    }
    for (unsigned i = 2 * n - 1; i-- > n;) {
      const u64 c = r[i] % pN;
      if (!c) continue;
      const u64 nc = pN - c;
      for (unsigned j = 0; j < n; ++j) r[i - n + j] += nc * F[j];
    }
    for (unsigned i = 0; i < n; ++i) r[i] %= pN;
  } else if (pN < (u64{1} << 31)) {
    // Products fit in 62 bits; reduce once per product.
    for (unsigned i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < n; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % pN;
    }
    for (unsigned i = 2 * n - 1; i-- > n;) {
      const u64 c = r[i];
      if (!c) continue;
      const u64 nc = pN - c;
      for (unsigned j = 0; j < n; ++j) r[i - n + j] = (r[i - n + j] + nc * F[j]) % pN;
    }
  } else {
    for (unsigned i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (unsigned j = 0; j < n; ++j) r[i + j] = addmod(r[i + j], mulmod(x[i], y[j], pN), pN);
    }
    for (unsigned i = 2 * n - 1; i-- > n;) {
      const u64 c = r[i];
      if (!c) continue;
      for (unsigned j = 0; j < n; ++j) r[i - n + j] = submod(r[i - n + j], mulmod(c, F[j], pN), pN);
    }
  }
  std::copy(r, r + n, out);
}

std::vector<u64> ring_pow(const std::vector<u64>& F, unsigned n, u64 pN, std::vector<u64> base, u64 e) {
  std::vector<u64> result(n, 0), tmp(n);
  result[0] = 1 % pN;
  while (e) {
    if (e & 1) {
      ring_mul(F, n, pN, result.data(), base.data(), tmp.data());
      result.swap(tmp);
    }
    e >>= 1;
    if (e) {
      ring_mul(F, n, pN, base.data(), base.data(), tmp.data());
      base.swap(tmp);
    }
  }
  return result;
}

}  // namespace

std::vector<u64> solve_mod(std::vector<u64> A, std::vector<u64> b, unsigned n, u64 p, u64 pN) {
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = n;
    for (unsigned r = col; r < n; ++r)
      if (A[r * n + col] % p) {
        piv = r;
        break;
      }
    if (piv == n) throw PreconditionError("matrix is singular modulo p");
    if (piv != col) {
      for (unsigned k = 0; k < n; ++k) std::swap(A[piv * n + k], A[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    u64 inv = invmod(A[col * n + col], pN);
    for (unsigned k = 0; k < n; ++k) A[col * n + k] = mulmod(A[col * n + k], inv, pN);
    b[col] = mulmod(b[col], inv, pN);
    for (unsigned r = 0; r < n; ++r) {
      if (r == col) continue;
      u64 f = A[r * n + col];
      if (!f) continue;
      for (unsigned k = 0; k < n; ++k) A[r * n + k] = submod(A[r * n + k], mulmod(f, A[col * n + k], pN), pN);
      b[r] = submod(b[r], mulmod(f, b[col], pN), pN);
    }
  }
  return b;
}

GaloisRing::GaloisRing(u64 p, unsigned N, unsigned n, std::vector<u64> modulus, FieldPtr residue)
    : p_(p), N_(N), n_(n), pN_(ipow_checked(p, N)), modulus_(std::move(modulus)), residue_(std::move(residue)) {
  init_frobenius();
}

void GaloisRing::init_frobenius() {
  const unsigned n = n_;
  frob_.assign(n * n, 0);
  std::vector<u64> xi(n, 0);
  if (n == 1) {
    xi[0] = negmod(modulus_[0], pN_);
  } else {
    xi[1] = 1;
  }
  std::vector<u64> xip = ring_pow(modulus_, n, pN_, xi, p_);
  // Column i of the Frobenius matrix is (xi^p)^i.
  std::vector<u64> col(n, 0), tmp(n);
  col[0] = 1 % pN_;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned r = 0; r < n; ++r) frob_[r * n + i] = col[r];
    ring_mul(modulus_, n, pN_, col.data(), xip.data(), tmp.data());
    col.swap(tmp);
  }
  // sigma^-1 = sigma^(n-1).
  frob_inv_.assign(n * n, 0);
  for (unsigned i = 0; i < n; ++i) frob_inv_[i * n + i] = 1 % pN_;
  for (unsigned k = 0; k + 1 < n; ++k) {
    std::vector<u64> next(n * n, 0);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) {
        u64 s = 0;
        for (unsigned t = 0; t < n; ++t) s = addmod(s, mulmod(frob_[r * n + t], frob_inv_[t * n + c], pN_), pN_);
        next[r * n + c] = s;
      }
    frob_inv_.swap(next);
  }
  trace_basis_.assign(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    std::vector<u64> z(n, 0), acc(n, 0), tmp(n);
    z[i] = 1 % pN_;
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned r = 0; r < n; ++r) acc[r] = addmod(acc[r], z[r], pN_);
      frobenius(z.data(), tmp.data());
      z.swap(tmp);
    }
    for (unsigned r = 1; r < n; ++r)
      if (acc[r]) throw PropertyViolation("Galois ring trace is not Frobenius invariant");
    trace_basis_[i] = acc[0];
  }
}

RingPtr GaloisRing::create(u64 p, unsigned N, unsigned n) {
  if (N < 1) throw PreconditionError("Galois ring precision must be >= 1");
  static std::mutex mu;
  static std::map<std::tuple<u64, unsigned, unsigned>, RingPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, N, n});
    if (it != cache.end()) return it->second;
  }
  FieldPtr residue = FiniteField::create(p, n);
  const u64 pN = ipow_checked(p, N);
  std::vector<u64> F0 = residue->modulus();
  std::vector<u64> F;
  if (n == 1) {
    // Teichmüller lift of the single root -c0.
    u64 root = negmod(F0[0], p);
    u64 w = root;
    for (unsigned it = 0; it <= N; ++it) w = powmod(w, p, pN);
    F = {negmod(w, pN), 1};
  } else {
    // omega = lim y^(p^n j) in Z/pN[y]/(F0); its minimal polynomial is F.
    std::vector<u64> omega(n, 0);
    omega[1] = 1;
    const u64 q = ipow_checked(p, n);
    for (unsigned it = 0; it <= N; ++it) omega = ring_pow(F0, n, pN, omega, q);
    std::vector<u64> A(n * n, 0);
    std::vector<u64> power(n, 0), tmp(n);
    power[0] = 1 % pN;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned r = 0; r < n; ++r) A[r * n + i] = power[r];
      ring_mul(F0, n, pN, power.data(), omega.data(), tmp.data());
      power.swap(tmp);
    }
    std::vector<u64> c = solve_mod(A, power, n, p, pN);
    F.assign(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) F[i] = negmod(c[i], pN);
    F[n] = 1;
  }
  auto ring = std::make_shared<const GaloisRing>(p, N, n, F, residue);
  // xi^(p^n) = xi exactly.
  std::vector<u64> xi(n, 0);
  if (n == 1)
    xi[0] = negmod(F[0], pN);
  else
    xi[1] = 1;
  if (ring_pow(F, n, pN, xi, ipow_checked(p, n)) != xi)
    throw PropertyViolation("lifted modulus root is not a Teichmüller point");
  for (unsigned i = 0; i <= n; ++i)
    if (F[i] % p != F0[i]) throw PropertyViolation("lifted modulus does not reduce to the residue modulus");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_tuple(p, N, n), ring);
  return ring;
}

void GaloisRing::mul(const u64* x, const u64* y, u64* out) const { ring_mul(modulus_, n_, pN_, x, y, out); }

void GaloisRing::mul_add(const u64* x, const u64* y, u64* acc) const {
  if (n_ == 1) {
    acc[0] = addmod(acc[0], mulmod(x[0], y[0], pN_), pN_);
    return;
  }
  u64 tmp[32];
  std::vector<u64> big;
  u64* t = tmp;
  if (n_ > 32) {
    big.resize(n_);
    t = big.data();
  }
  ring_mul(modulus_, n_, pN_, x, y, t);
  for (unsigned i = 0; i < n_; ++i) acc[i] = addmod(acc[i], t[i], pN_);
}

void GaloisRing::frobenius(const u64* x, u64* out) const {
  const unsigned n = n_;
  if (n == 1) {
    out[0] = x[0];
    return;
  }
  for (unsigned r = 0; r < n; ++r) {
    u64 s = 0;
    for (unsigned c = 0; c < n; ++c) s = addmod(s, mulmod(frob_[r * n + c], x[c], pN_), pN_);
    out[r] = s;
  }
}

void GaloisRing::frobenius_inverse(const u64* x, u64* out) const {
  const unsigned n = n_;
  if (n == 1) {
    out[0] = x[0];
    return;
  }
  for (unsigned r = 0; r < n; ++r) {
    u64 s = 0;
    for (unsigned c = 0; c < n; ++c) s = addmod(s, mulmod(frob_inv_[r * n + c], x[c], pN_), pN_);
    out[r] = s;
  }
}

u64 GaloisRing::trace(const u64* x) const {
  u64 s = 0;
  for (unsigned i = 0; i < n_; ++i) s = addmod(s, mulmod(trace_basis_[i], x[i], pN_), pN_);
  return s;
}

bool GaloisRing::is_unit(const u64* x) const {
  for (unsigned i = 0; i < n_; ++i)
    if (x[i] % p_) return true;
  return false;
}

GRElem::GRElem(RingPtr ring) : ring_(std::move(ring)), c_(ring_->degree(), 0) {}

GRElem::GRElem(RingPtr ring, std::vector<u64> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (c_.size() != ring_->degree()) throw PreconditionError("Galois ring element has the wrong length");
  for (auto& c : c_) c %= ring_->pN();
}

GRElem GRElem::constant(RingPtr ring, u64 c) {
  GRElem r(ring);
  r.c_[0] = c % r.ring_->pN();
  return r;
}

GRElem GRElem::lift(RingPtr ring, const FieldElem& x) {
  if (!x.field()->same_as(*ring->residue_field())) throw PreconditionError("element is not in the residue field");
  return GRElem(std::move(ring), x.coeffs());
}

bool GRElem::is_zero() const {
  for (u64 c : c_)
    if (c) return false;
  return true;
}

bool GRElem::is_unit() const { return ring_->is_unit(c_.data()); }

FieldElem GRElem::reduce() const {
  std::vector<u64> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] % ring_->p();
  return FieldElem(ring_->residue_field(), std::move(v));
}

void GRElem::check_same(const GRElem& o) const {
  if (!ring_->same_as(*o.ring_)) throw PreconditionError("operands live in different Galois rings");
}

GRElem GRElem::operator+(const GRElem& o) const {
  check_same(o);
  GRElem r(ring_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = addmod(c_[i], o.c_[i], ring_->pN());
  return r;
}

GRElem GRElem::operator-() const {
  GRElem r(ring_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = negmod(c_[i], ring_->pN());
  return r;
}

GRElem GRElem::operator-(const GRElem& o) const { return *this + (-o); }

GRElem GRElem::operator*(const GRElem& o) const {
  check_same(o);
  GRElem r(ring_);
  ring_->mul(c_.data(), o.c_.data(), r.c_.data());
  return r;
}

GRElem GRElem::pow(u64 e) const {
  GRElem result = constant(ring_, 1);
  GRElem base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

GRElem GRElem::inverse() const {
  if (!is_unit()) throw PreconditionError("inverse of a non-unit in a Galois ring");
  GRElem u = lift(ring_, reduce().inverse());
  const GRElem two = constant(ring_, 2);
  for (unsigned k = 1; k < ring_->precision(); k *= 2) u = u * (two - *this * u);
  return u;
}

bool GRElem::operator==(const GRElem& o) const { return ring_->same_as(*o.ring_) && c_ == o.c_; }

std::string GRElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ")";
  return os.str();
}

RingPtr hensel_modulus(u64 p, unsigned N, unsigned n) { return GaloisRing::create(p, N, n); }

GRElem teichmuller(const FieldElem& xbar, const RingPtr& ring) {
  GRElem y = GRElem::lift(ring, xbar);
  if (xbar.is_zero()) return y;
  const u64 q = ring->residue_field()->order();
  for (unsigned it = 1; it < ring->precision(); ++it) y = y.pow(q);
  if (y.pow(q) != y) throw PropertyViolation("Teichmüller iteration did not reach a fixed point");
  return y;
}

GRElem gr_frobenius(const GRElem& z) {
  GRElem r(z.ring());
  z.ring()->frobenius(z.coeffs().data(), r.coeffs().data());
  return r;
}

GRElem gr_frobenius_inverse(const GRElem& z) {
  GRElem r(z.ring());
  z.ring()->frobenius_inverse(z.coeffs().data(), r.coeffs().data());
  return r;
}

u64 gr_trace(const GRElem& z) { return z.ring()->trace(z.coeffs().data()); }

}  // namespace tadic
