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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tadic/exp_sums.hpp"
#include "tadic/finite_field.hpp"
#include "tadic/polygons.hpp"

namespace tadic {

struct SlopeSet {
  unsigned m = 0;
  /// p_Delta(m) - p_Delta(m - 1).
  i64 threshold = 0;
  bool turning = false;
  /// {a : varpi(a) <= threshold}, ordered by |a| with positive first.
  std::vector<i64> members;
};

SlopeSet slope_set(const Polytope1D& delta, u64 p, unsigned m);

/// A permutation of a slope set: images[k] = tau(members[k]).
struct Permutation {
  std::vector<i64> images;
  int sign = 1;
};

enum class TauReading {
  /// tau(a) / d(sgn a) with d(+1) = d, d(-1) = -e.
  kSignedEndpoint,
  /// deg(tau(a)).
  kDegree,
};

/// S_m^0 for a turning point m, identity first when present.
std::vector<Permutation> s_m0(const Polytope1D& delta, u64 p, unsigned m,
                              TauReading reading = TauReading::kSignedEndpoint);

/// Permutations admitted by exactly one of the two readings.
std::vector<Permutation> s_m0_reading_differences(const Polytope1D& delta, u64 p, unsigned m);

/// A polynomial over F_p in the variables y_j, j in [-e, d].
class HassePolynomial {
 public:
  /// Exponents are stored in the variable order y0, y1, y-1, y2, y-2, ...
  using Exponents = std::vector<unsigned>;

  HassePolynomial(u64 p, unsigned m, Polytope1D delta);
  u64 p() const { return p_; }
  unsigned m() const { return m_; }
  const Polytope1D& delta() const { return delta_; }
  const std::map<Exponents, u64, std::greater<>>& monomials() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Position of y_j in an exponent vector.
  static std::size_t slot(i64 j) { return j == 0 ? 0 : j > 0 ? static_cast<std::size_t>(2 * j - 1) : static_cast<std::size_t>(-2 * j); }
  static i64 variable(std::size_t slot) { return slot == 0 ? 0 : slot % 2 ? static_cast<i64>((slot + 1) / 2) : -static_cast<i64>(slot / 2); }
  std::size_t variable_count() const { return nvars_; }

  void add_term(const Exponents& exps, u64 coeff);
  HassePolynomial operator*(const HassePolynomial& o) const;
  HassePolynomial operator+(const HassePolynomial& o) const;
  HassePolynomial scaled(u64 c) const;
  static HassePolynomial one(u64 p, unsigned m, Polytope1D delta);

  /// sum_j |j| n_j of each monomial.
  std::vector<u64> weighted_degrees() const;
  /// Evaluate at y_j = a_j, with a_j drawn from f (zero when absent).
  FieldElem evaluate(const LaurentPolyFq& f) const;
  /// "2*y1*y3^3 + 3*y2^2*y3^2", monomials in descending lex order.
  std::string to_string() const;

 private:
  u64 p_;
  unsigned m_;
  Polytope1D delta_;
  std::size_t nvars_;
  std::map<Exponents, u64, std::greater<>> terms_;
};

/// The reduced Hasse polynomial for the turning point m.
HassePolynomial hasse_m(const Polytope1D& delta, u64 p, unsigned m);

/// Turning points of p_Delta below Vol.
std::vector<unsigned> hasse_turning_points(const Polytope1D& delta, u64 p);

struct HasseEvaluation {
  FieldElem value;
  bool nonzero = false;
  std::vector<std::pair<unsigned, FieldElem>> factors;
};

HasseEvaluation hasse_product_eval(const Polytope1D& delta, u64 p, const LaurentPolyFq& f);

}  // namespace tadic
