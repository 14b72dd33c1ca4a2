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

#include <map>
#include <string>
#include <vector>

#include "tadic/cyclotomic.hpp"
#include "tadic/finite_field.hpp"
#include "tadic/polygons.hpp"
#include "tadic/series.hpp"

namespace tadic {

inline constexpr u64 kDefaultBudget = 100000000;

/// f(x) = sum_u a_u x^u over F_q with exponents in [-e, d].
class LaurentPolyFq {
 public:
  /// Rejects exponents outside delta and zero coefficients at the nonzero
  /// endpoints. Zero entries elsewhere are dropped.
  LaurentPolyFq(Polytope1D delta, FieldPtr field, std::map<i64, FieldElem> coeffs);

  const Polytope1D& delta() const { return delta_; }
  const FieldPtr& field() const { return field_; }
  u64 p() const { return field_->p(); }
  /// a with q = p^a.
  unsigned a() const { return field_->degree(); }
  u64 q() const { return field_->order(); }
  const std::map<i64, FieldElem>& coeffs() const { return coeffs_; }
  /// a_u, zero when absent.
  FieldElem coeff(i64 u) const;
  /// f with every coefficient raised to the p-th power.
  LaurentPolyFq frobenius_conjugate() const;
  /// "a(-1)=1,a(1)=1" using element indices.
  std::string to_string() const;

 private:
  Polytope1D delta_;
  FieldPtr field_;
  std::map<i64, FieldElem> coeffs_;
};

enum class SumMethod {
  /// One Teichmüller lift per point.
  kDirect,
  /// Discrete-log indexed table of traces of powers of a lifted generator.
  kTabulated,
};

/// Histogram of Tr(sum_u w(a_u) w(x)^u) mod p^N over x in F_{q^k}^*.
std::vector<u64> character_histogram(const LaurentPolyFq& f, unsigned k, unsigned N, u64 budget, SumMethod method);

/// S_f(k, pi_m) in Z[zeta_{p^m}].
CyclotomicInt sum_S_cyclotomic(const LaurentPolyFq& f, unsigned k, unsigned m, u64 budget = kDefaultBudget,
                               SumMethod method = SumMethod::kTabulated);

/// S_f(k, T) mod (p^N, T^M).
TSeries sum_S_Tseries(const LaurentPolyFq& f, unsigned k, unsigned N, std::size_t M, u64 budget = kDefaultBudget,
                      SumMethod method = SumMethod::kDirect);

struct LPolynomial {
  u64 p;
  unsigned m;
  /// c_0 .. c_deg, all integral.
  std::vector<CyclotomicInt> coeffs;
  std::size_t degree() const { return coeffs.size() - 1; }
};

/// Number of point evaluations l_function performs.
u64 l_function_cost(const LaurentPolyFq& f, unsigned m, unsigned slack = 2);

/// L_f(s, pi_m) by brute force. Asserts integrality of every coefficient and
/// that c_n vanishes for deg < n <= deg + slack.
LPolynomial l_function(const LaurentPolyFq& f, unsigned m, u64 budget = kDefaultBudget, unsigned slack = 2);

/// pi_valuation of each coefficient.
std::vector<ExtendedRational> l_valuations(const LPolynomial& L);

ConvexPolygon np_of_L(const LPolynomial& L);

/// First `range` slopes of the union over j >= 0 of {s + j a e_m}.
ConvexPolygon np_C_from_L(const LPolynomial& L, unsigned a, std::size_t range);

struct MainReport {
  ConvexPolygon np_L;
  ConvexPolygon expected;
  bool equal = false;
  bool lies_above = false;
  bool hasse_nonzero = false;
  bool consistent = false;
  bool hypothesis_violated = false;
};

MainReport verify_main(const LaurentPolyFq& f, unsigned m, u64 budget = kDefaultBudget);

/// The same report for an already assembled L-function of f.
MainReport main_report(const LaurentPolyFq& f, const LPolynomial& L);

}  // namespace tadic
