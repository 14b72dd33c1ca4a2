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
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tadic/exp_sums.hpp"
#include "tadic/galois_ring.hpp"
#include "tadic/polygons.hpp"
#include "tadic/series.hpp"

namespace tadic {

/// sum_k c_k pi^(k/D) over GR(p^N, n), truncated after the numerator
/// `cutoff`. Stored densely.
class PiSeries {
 public:
  PiSeries(RingPtr ring, unsigned D, i64 cutoff);

  const RingPtr& ring() const { return ring_; }
  unsigned D() const { return D_; }
  i64 cutoff() const { return cutoff_; }
  GRElem coeff(i64 k) const;
  void set(i64 k, const GRElem& c);
  /// acc += c at numerator k (ignored beyond the cutoff).
  void add_at(i64 k, const GRElem& c);
  const u64* raw(i64 k) const { return data_.data() + k * width_; }
  u64* raw(i64 k) { return data_.data() + k * width_; }

  PiSeries operator+(const PiSeries& o) const;
  PiSeries operator-(const PiSeries& o) const;
  PiSeries operator*(const PiSeries& o) const;
  PiSeries& operator+=(const PiSeries& o) { return *this = *this + o; }
  /// Multiply by pi^(s/D); a negative shift requires the dropped terms to vanish.
  PiSeries shifted(i64 s) const;
  PiSeries scaled(const GRElem& c) const;
  PiSeries sigma_inverse() const;
  bool is_zero() const;

  /// First numerator with a nonzero coefficient.
  std::optional<i64> order() const;
  /// First numerator with a unit coefficient.
  std::optional<i64> unit_order() const;
  /// True when every coefficient at a numerator not divisible by D vanishes.
  bool fractional_part_vanishes() const;
  std::string to_string() const;

 private:
  void check_same(const PiSeries& o) const;
  RingPtr ring_;
  unsigned D_;
  i64 cutoff_;
  std::size_t width_;
  std::vector<u64> data_;
};

/// gamma_i with E_f(x) = sum_i gamma_i x^i, truncated at pi^K. Coefficients
/// live in GR(p^N, a); exponents use the denominator D of delta.
std::map<i64, PiSeries> ef_gamma(const LaurentPolyFq& f, i64 K, unsigned N);

struct DworkBasis {
  Polytope1D delta;
  mpq_class bound;
  std::vector<i64> members;
  /// Smallest degree of a member left out.
  mpq_class next_degree;
  DworkBasis(const Polytope1D& delta, const mpq_class& bound);
};

struct DworkMatrix {
  DworkBasis basis;
  u64 p;
  unsigned a;
  unsigned N;
  i64 cutoff;
  /// Row-major; entry (i, j) is the coefficient of e_i in Psi^a(e_j).
  std::vector<PiSeries> entries;
  /// Coefficients of invariants at pi-orders below this are unaffected by
  /// the basis truncation: (p - 1) next_degree.
  mpq_class exact_below;
  std::size_t size() const { return basis.members.size(); }
  const PiSeries& at(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
};

/// Matrix of Psi^a on the basis {pi^deg(i) x^i : deg(i) <= B} at p-adic
/// precision N, truncated after the pi-exponent numerator `cutoff`.
/// Checks ord(entry(i, j)) >= ceil(deg(p i - j)) + deg(j) - deg(i).
DworkMatrix psi_matrix(const LaurentPolyFq& f, const mpq_class& B, unsigned N, i64 cutoff);

/// tr(M^k).
PiSeries matrix_power_trace(const DworkMatrix& M, unsigned k);

struct FredholmCoeff {
  /// Elementary symmetric function e_k of the eigenvalues, so that
  /// det(1 - M s) = sum_k (-1)^k c_k s^k.
  PiSeries value;
  /// Coefficients are known modulo p^precision.
  unsigned precision;
};

/// c_1 .. c_upto by Newton's identities; each c_k loses v_p(k) digits.
std::vector<FredholmCoeff> fredholm_coeffs(const DworkMatrix& M, unsigned upto);

struct DworkOptions {
  /// Basis bound B; chosen from the target order when absent.
  std::optional<mpq_class> deg_bound;
  /// p-adic digits kept in the results.
  unsigned prec_p = 2;
  /// Largest pi-order kept; chosen from the target order when absent.
  std::optional<mpq_class> pi_cutoff;
};

/// Fredholm coefficients with B and cutoff chosen so that every coefficient
/// up to pi-order `target` is exact, and the working precision covers the
/// divisions of Newton's identities.
struct FredholmRun {
  DworkMatrix matrix;
  std::vector<FredholmCoeff> coeffs;
};
FredholmRun dwork_fredholm(const LaurentPolyFq& f, unsigned upto, const mpq_class& target, const DworkOptions& opts = {});

/// True when c_1..c_upto agree at their precision below both exactness
/// bounds for the basis bound B and for B enlarged by one degree unit.
bool fredholm_stable(const LaurentPolyFq& f, unsigned upto, const mpq_class& target, const DworkOptions& opts = {});

struct TraceFormulaReport {
  unsigned k;
  unsigned N;
  std::size_t M;
  bool fractional_vanishes = false;
  TSeries matrix_side;
  TSeries sum_side;
  TSeries residual;
  bool ok() const { return fractional_vanishes && residual.is_zero(); }
};

/// Compares tr((Psi^a)^k), rewritten in T through pi(T), with
/// (q^k - 1)^-1 S_f(k, T) modulo (p^N, T^M).
TraceFormulaReport verify_trace_formula(const LaurentPolyFq& f, unsigned k, unsigned N, std::size_t M,
                                        u64 budget = kDefaultBudget);

struct MinorReport {
  unsigned m;
  i64 expected_order;  // p_Delta(m)
  /// pi-order of det(gamma_{pi-j}) mod p^N and mod p; nullopt if zero to the cutoff.
  std::optional<mpq_class> order;
  std::optional<mpq_class> unit_order;
  bool order_ok = false;
  /// Reduction of the coefficient of pi^p_Delta(m).
  FieldElem leading;
};

/// det(gamma_{p i - j}) over i, j in A_m for a turning point m.
MinorReport minor_leading(const LaurentPolyFq& f, unsigned m, unsigned N = 2);

enum class CertStatus { kGranted, kDenied, kInconclusive };
std::string to_string(CertStatus s);

struct CertificateEntry {
  unsigned m;
  mpq_class target;  // a p_Delta(m)
  std::optional<mpq_class> order;
  std::optional<mpq_class> unit_order;
  unsigned precision;
  bool below_vanishes = false;
  bool leading_unit = false;
  CertStatus status = CertStatus::kInconclusive;
};

struct Certificate {
  CertStatus status = CertStatus::kInconclusive;
  bool hypothesis_violated = false;
  std::vector<CertificateEntry> entries;
};

/// For each turning point m < Vol, checks that c_m has pi-order exactly
/// a p_Delta(m) with a unit leading coefficient.
Certificate certify_all_m(const LaurentPolyFq& f, const DworkOptions& opts = {});

}  // namespace tadic
