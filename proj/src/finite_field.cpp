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

#include "tadic/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace tadic {

namespace poly_fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly rem(const Poly& a, const Poly& m, u64 p) {
  Poly r = a;
  trim(r);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = invmod(m.back(), p);
  while (r.size() > dm) {
    u64 c = mulmod(r.back(), lead_inv, p);
    std::size_t shift = r.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) r[shift + j] = submod(r[shift + j], mulmod(c, m[j], p), p);
    trim(r);
  }
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

Poly x_to_p_power(unsigned times, const Poly& m, u64 p) {
  Poly x = rem(Poly{0, 1}, m, p);
  for (unsigned t = 0; t < times; ++t) {
    Poly result{1};
    Poly base = x;
    for (u64 e = p; e; e >>= 1) {
      if (e & 1) result = rem(mul(result, base, p), m, p);
      base = rem(mul(base, base, p), m, p);
    }
    x = result;
  }
  return x;
}

bool is_irreducible(const Poly& f, u64 p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
  Poly xpn = x_to_p_power(n, f, p);
  Poly x = rem(Poly{0, 1}, f, p);
  if (xpn != x) return false;
  for (u64 r : prime_factors(n)) {
    Poly h = x_to_p_power(static_cast<unsigned>(n / r), f, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = submod(h[1], 1, p);
    trim(h);
    if (h.empty()) return false;
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly_fp

FiniteField::FiniteField(u64 p, unsigned n, std::vector<u64> modulus)
    : p_(p), n_(n), order_(ipow_checked(p, n)), modulus_(std::move(modulus)) {}

FieldPtr FiniteField::create(u64 p, unsigned n) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw PreconditionError("extension degree must be >= 1");
  if (p > (u64{1} << 31)) throw PreconditionError("characteristic too large for this library");
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, n});
  if (it != cache.end()) return it->second;
  const u64 count = ipow_checked(p, n);
  for (u64 idx = 0; idx < count; ++idx) {
    poly_fp::Poly f(n + 1, 0);
    u64 t = idx;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[n] = 1;
    if (poly_fp::is_irreducible(f, p)) {
      auto field = std::make_shared<const FiniteField>(p, n, f);
      cache.emplace(std::make_pair(p, n), field);
      return field;
    }
  }
  throw PropertyViolation("no irreducible polynomial found");
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    u64 c = modulus_[i];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void FiniteField::mul(const u64* x, const u64* y, u64* out) const {
  const unsigned n = n_;
  if (n == 1) {
    out[0] = x[0] * y[0] % p_;
    return;
  }
  u64 tmp[64];
  std::vector<u64> big;
  u64* r = tmp;
  if (2 * n - 1 > 64) {
    big.assign(2 * n - 1, 0);
    r = big.data();
  } else {
    std::fill(tmp, tmp + 2 * n - 1, 0);
  }
  for (unsigned i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < n; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  }
  for (unsigned i = 2 * n - 1; i-- > n;) {
    u64 c = r[i];
    if (!c) continue;
    for (unsigned j = 0; j < n; ++j) r[i - n + j] = (r[i - n + j] + (p_ - c) * modulus_[j]) % p_;
  }
  std::copy(r, r + n, out);
}

void FiniteField::add(const u64* x, const u64* y, u64* out) const {
  for (unsigned i = 0; i < n_; ++i) out[i] = addmod(x[i], y[i], p_);
}

FieldElem::FieldElem(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree(), 0) {}

FieldElem::FieldElem(FieldPtr field, std::vector<u64> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > field_->degree()) {
    // Reduce an over-long representative.
    poly_fp::Poly r = poly_fp::rem(coeffs_, field_->modulus(), field_->p());
    coeffs_ = std::move(r);
  }
  coeffs_.resize(field_->degree(), 0);
  for (auto& c : coeffs_) c %= field_->p();
}

FieldElem FieldElem::constant(FieldPtr field, u64 c) {
  std::vector<u64> v(field->degree(), 0);
  v[0] = c % field->p();
  return FieldElem(std::move(field), std::move(v));
}

FieldElem FieldElem::from_index(FieldPtr field, u64 index) {
  if (index >= field->order()) throw PreconditionError("element index out of range");
  std::vector<u64> v(field->degree(), 0);
  for (auto& c : v) {
    c = index % field->p();
    index /= field->p();
  }
  return FieldElem(std::move(field), std::move(v));
}

FieldElem FieldElem::generator(FieldPtr field) {
  if (field->degree() == 1) return FieldElem(field, {(field->p() - field->modulus()[0]) % field->p()});
  std::vector<u64> v(field->degree(), 0);
  v[1] = 1;
  return FieldElem(std::move(field), std::move(v));
}

u64 FieldElem::index() const {
  u64 idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_->p() + coeffs_[i];
  return idx;
}

bool FieldElem::is_zero() const {
  for (u64 c : coeffs_)
    if (c) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return false;
  return true;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!field_->same_as(*o.field_)) throw PreconditionError("operands live in different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  FieldElem r(field_);
  field_->add(coeffs_.data(), o.coeffs_.data(), r.coeffs_.data());
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r(field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = negmod(coeffs_[i], field_->p());
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  FieldElem r(field_);
  field_->mul(coeffs_.data(), o.coeffs_.data(), r.coeffs_.data());
  return r;
}

FieldElem FieldElem::pow(u64 e) const {
  FieldElem result = constant(field_, 1);
  FieldElem base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return pow(field_->order() - 2);
}

bool FieldElem::operator==(const FieldElem& o) const { return field_->same_as(*o.field_) && coeffs_ == o.coeffs_; }

std::string FieldElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ")";
  return os.str();
}

FieldElem frobenius(const FieldElem& x) { return x.pow(x.field()->p()); }

u64 trace_absolute(const FieldElem& x) {
  FieldElem acc(x.field());
  FieldElem y = x;
  for (unsigned i = 0; i < x.field()->degree(); ++i) {
    acc += y;
    y = frobenius(y);
  }
  for (std::size_t i = 1; i < acc.coeffs().size(); ++i)
    if (acc.coeffs()[i]) throw PropertyViolation("absolute trace left the prime field");
  return acc.coeffs()[0];
}

FieldElem trace_relative(const FieldElem& x, unsigned sub_degree) {
  const unsigned n = x.field()->degree();
  if (sub_degree == 0 || n % sub_degree) throw PreconditionError("relative trace needs sub_degree | degree");
  const u64 q = ipow_checked(x.field()->p(), sub_degree);
  FieldElem acc(x.field());
  FieldElem y = x;
  for (unsigned i = 0; i < n / sub_degree; ++i) {
    acc += y;
    y = y.pow(q);
  }
  return acc;
}

FieldElem primitive_element(const FieldPtr& field) {
  const u64 order = field->order() - 1;
  const auto primes = prime_factors(order);
  for (u64 idx = 1; idx < field->order(); ++idx) {
    FieldElem g = FieldElem::from_index(field, idx);
    bool ok = true;
    for (u64 r : primes) {
      if (g.pow(order / r).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw PropertyViolation("multiplicative group has no generator");
}

namespace {

FieldElem eval_poly(const std::vector<u64>& poly, const FieldElem& x) {
  FieldElem acc(x.field());
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + FieldElem::constant(x.field(), poly[i]);
  return acc;
}

}  // namespace

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target)
    : source_(std::move(source)), target_(std::move(target)), image_(target_) {
  const unsigned a = source_->degree();
  const unsigned n = target_->degree();
  if (source_->p() != target_->p() || n % a) throw PreconditionError("embedding needs a common prime and a | n");
  if (a == 1) {
    image_ = FieldElem::constant(target_, FieldElem::generator(source_).coeffs()[0]);
    return;
  }
  if (a == n) {
    image_ = FieldElem::generator(target_);
    return;
  }
  // Roots of the source modulus lie in the subfield of order p^a, which is
  // generated multiplicatively by h^((p^n - 1)/(p^a - 1)).
  const u64 qa = source_->order();
  FieldElem h = primitive_element(target_);
  FieldElem z = h.pow((target_->order() - 1) / (qa - 1));
  FieldElem y = FieldElem::constant(target_, 1);
  bool found = false;
  u64 best = 0;
  for (u64 t = 0; t + 1 < qa; ++t) {
    if (eval_poly(source_->modulus(), y).is_zero()) {
      if (!found || y.index() < best) {
        best = y.index();
        image_ = y;
      }
      found = true;
    }
    y = y * z;
  }
  if (!found) throw PropertyViolation("source modulus has no root in the target field");
}

FieldElem FieldEmbedding::operator()(const FieldElem& x) const {
  if (!x.field()->same_as(*source_)) throw PreconditionError("element is not in the embedding's source field");
  FieldElem acc(target_);
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * image_ + FieldElem::constant(target_, c[i]);
  return acc;
}

FieldElem embed(const FieldElem& x, const FieldPtr& target) {
  if (x.field()->same_as(*target)) return x;
  return FieldEmbedding(x.field(), target)(x);
}

}  // namespace tadic
