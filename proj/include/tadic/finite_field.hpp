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

#include <cstddef>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "tadic/arith.hpp"

namespace tadic {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_{p^n} in a polynomial basis over F_p. The modulus is the first monic
/// irreducible polynomial when candidates c_0 + c_1 x + ... + x^n are
/// scanned by the integer sum c_i p^i; for n = 1 this is x.
class FiniteField {
 public:
  static FieldPtr create(u64 p, unsigned n);

  u64 p() const { return p_; }
  unsigned degree() const { return n_; }
  /// p^n.
  u64 order() const { return order_; }
  /// Monic modulus, n + 1 coefficients from the constant term up.
  const std::vector<u64>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  bool same_as(const FiniteField& other) const { return p_ == other.p_ && n_ == other.n_; }

  // Coefficient-vector kernels; spans have length degree().
  void mul(const u64* x, const u64* y, u64* out) const;
  void add(const u64* x, const u64* y, u64* out) const;

  FiniteField(u64 p, unsigned n, std::vector<u64> modulus);

 private:
  u64 p_;
  unsigned n_;
  u64 order_;
  std::vector<u64> modulus_;
};

class FieldElem {
 public:
  explicit FieldElem(FieldPtr field);
  FieldElem(FieldPtr field, std::vector<u64> coeffs);

  static FieldElem constant(FieldPtr field, u64 c);
  /// Element whose base-p digits (constant term least significant) are `index`.
  static FieldElem from_index(FieldPtr field, u64 index);
  /// The class of x modulo the defining polynomial.
  static FieldElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }
  u64 index() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem pow(u64 e) const;
  FieldElem inverse() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// "(c0,c1,...)" in the polynomial basis.
  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;
  FieldPtr field_;
  std::vector<u64> coeffs_;
};

FieldElem frobenius(const FieldElem& x);
/// Tr_{F_{p^n}/F_p}(x).
u64 trace_absolute(const FieldElem& x);
/// Tr_{F_{p^n}/F_{p^s}}(x) as an element of F_{p^n}; s must divide n.
FieldElem trace_relative(const FieldElem& x, unsigned sub_degree);

/// First element (by index) generating the multiplicative group.
FieldElem primitive_element(const FieldPtr& field);

/// Ring embedding F_{p^a} -> F_{p^{ak}} sending the source generator to
/// the smallest-index root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr source, FieldPtr target);
  FieldElem operator()(const FieldElem& x) const;
  const FieldElem& generator_image() const { return image_; }
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  FieldElem image_;
};

FieldElem embed(const FieldElem& x, const FieldPtr& target);

/// Nonzero elements in increasing index order.
class UnitRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElem;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = FieldElem;
    iterator(const FieldPtr* field, u64 index) : field_(field), index_(index) {}
    FieldElem operator*() const { return FieldElem::from_index(*field_, index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }
    bool operator!=(const iterator& o) const { return index_ != o.index_; }

   private:
    const FieldPtr* field_;
    u64 index_;
  };

  explicit UnitRange(FieldPtr field) : field_(std::move(field)) {}
  iterator begin() const { return iterator(&field_, 1); }
  iterator end() const { return iterator(&field_, field_->order()); }
  u64 size() const { return field_->order() - 1; }

 private:
  FieldPtr field_;
};

inline UnitRange units_iter(FieldPtr field) { return UnitRange(std::move(field)); }

namespace poly_fp {
// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<u64>;
void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& m, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// x^(p^times) mod m.
Poly x_to_p_power(unsigned times, const Poly& m, u64 p);
bool is_irreducible(const Poly& f, u64 p);
}  // namespace poly_fp

}  // namespace tadic
