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

#include <memory>
#include <string>
#include <vector>

#include "tadic/arith.hpp"
#include "tadic/finite_field.hpp"

namespace tadic {

class GaloisRing;
using RingPtr = std::shared_ptr<const GaloisRing>;

/// GR(p^N, n) = Z/p^N[x]/(F) where F lifts the residue field's modulus and
/// its root xi is a Teichmüller point: xi^(p^n) = xi holds exactly. With
/// such a modulus the Frobenius is x -> x^p on the basis xi^i.
class GaloisRing {
 public:
  /// Builds the Teichmüller-compatible lift for (p, N, n).
  static RingPtr create(u64 p, unsigned N, unsigned n);

  u64 p() const { return p_; }
  unsigned precision() const { return N_; }
  unsigned degree() const { return n_; }
  /// p^N.
  u64 pN() const { return pN_; }
  const std::vector<u64>& modulus() const { return modulus_; }
  const FieldPtr& residue_field() const { return residue_; }
  bool same_as(const GaloisRing& o) const { return p_ == o.p_ && N_ == o.N_ && n_ == o.n_; }

  // Kernels over length-degree() coefficient arrays.
  void mul(const u64* x, const u64* y, u64* out) const;
  /// acc += x * y.
  void mul_add(const u64* x, const u64* y, u64* acc) const;
  void frobenius(const u64* x, u64* out) const;
  void frobenius_inverse(const u64* x, u64* out) const;
  /// Tr to Z/p^N.
  u64 trace(const u64* x) const;
  bool is_unit(const u64* x) const;

  GaloisRing(u64 p, unsigned N, unsigned n, std::vector<u64> modulus, FieldPtr residue);

 private:
  void init_frobenius();
  u64 p_;
  unsigned N_;
  unsigned n_;
  u64 pN_;
  std::vector<u64> modulus_;
  FieldPtr residue_;
  std::vector<u64> frob_;      // n x n, column i = sigma(xi^i)
  std::vector<u64> frob_inv_;  // n x n, column i = sigma^-1(xi^i)
  std::vector<u64> trace_basis_;
};

class GRElem {
 public:
  explicit GRElem(RingPtr ring);
  GRElem(RingPtr ring, std::vector<u64> coeffs);
  static GRElem constant(RingPtr ring, u64 c);
  /// Coefficient-wise lift of a residue-field element.
  static GRElem lift(RingPtr ring, const FieldElem& x);

  const RingPtr& ring() const { return ring_; }
  const std::vector<u64>& coeffs() const { return c_; }
  std::vector<u64>& coeffs() { return c_; }
  bool is_zero() const;
  bool is_unit() const;
  /// Reduction modulo p into the residue field.
  FieldElem reduce() const;

  GRElem operator+(const GRElem& o) const;
  GRElem operator-(const GRElem& o) const;
  GRElem operator-() const;
  GRElem operator*(const GRElem& o) const;
  GRElem& operator+=(const GRElem& o) { return *this = *this + o; }
  GRElem& operator*=(const GRElem& o) { return *this = *this * o; }
  GRElem pow(u64 e) const;
  /// Inverse of a unit (Newton lifting from the residue field).
  GRElem inverse() const;

  bool operator==(const GRElem& o) const;
  bool operator!=(const GRElem& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void check_same(const GRElem& o) const;
  RingPtr ring_;
  std::vector<u64> c_;
};

RingPtr hensel_modulus(u64 p, unsigned N, unsigned n);
GRElem teichmuller(const FieldElem& xbar, const RingPtr& ring);
GRElem gr_frobenius(const GRElem& z);
GRElem gr_frobenius_inverse(const GRElem& z);
u64 gr_trace(const GRElem& z);

/// Solves A x = b over Z/p^N for A invertible mod p (row-major n x n).
std::vector<u64> solve_mod(std::vector<u64> A, std::vector<u64> b, unsigned n, u64 p, u64 pN);

}  // namespace tadic
