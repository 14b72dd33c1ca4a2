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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tadic/arith.hpp"

namespace tadic {

/// Truncated power series c_0 + c_1 T + ... + c_{M-1} T^{M-1} over Z/p^N.
class TSeries {
 public:
  TSeries(u64 p, unsigned N, std::size_t M);
  TSeries(u64 p, unsigned N, std::vector<u64> coeffs);

  u64 p() const { return p_; }
  unsigned precision() const { return N_; }
  u64 pN() const { return pN_; }
  std::size_t length() const { return c_.size(); }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 operator[](std::size_t k) const { return c_.at(k); }
  u64& operator[](std::size_t k) { return c_.at(k); }

  TSeries operator+(const TSeries& o) const;
  TSeries operator-(const TSeries& o) const;
  TSeries operator*(const TSeries& o) const;
  TSeries scaled(u64 c) const;
  /// Reduce to a coarser (p^N', T^M') grid.
  TSeries truncated(unsigned N, std::size_t M) const;
  bool operator==(const TSeries& o) const;
  bool is_zero() const;

  /// Base-p digit strings, most significant digit first.
  std::vector<std::string> digit_strings() const;

 private:
  void check_same(const TSeries& o) const;
  u64 p_;
  unsigned N_;
  u64 pN_;
  std::vector<u64> c_;
};

/// outer(inner(T)) for inner with zero constant term.
TSeries compose(const TSeries& outer, const TSeries& inner);

/// Exact rational power series truncated at order M.
struct RationalSeries {
  std::vector<mpq_class> coeffs;
  std::size_t length() const { return coeffs.size(); }
  /// Smallest p-adic valuation among nonzero coefficients (nullopt if all zero).
  std::optional<long> min_valuation(u64 p) const;
};

/// Artin–Hasse coefficients lambda_0..lambda_{M-1} of exp(sum_i t^(p^i)/p^i).
RationalSeries artin_hasse(u64 p, std::size_t M);

/// lambda_0..lambda_{M-1} reduced into Z/p^N.
std::vector<u64> artin_hasse_mod(u64 p, std::size_t M, unsigned N);

/// The series pi(T) with E(pi) = 1 + T, truncated at T^M, over Z/p^N.
TSeries pi_of_T(u64 p, std::size_t M, unsigned N);

/// E(s(T)) - 1 for s with zero constant term; used for round trips.
TSeries artin_hasse_compose(const TSeries& s);

/// Precision (digits of z) that one_plus_T_pow needs for (p, M, N).
unsigned binomial_working_precision(u64 p, std::size_t M, unsigned N);

/// (1+T)^z mod (p^N, T^M) where z is known modulo p^{z_precision}.
TSeries one_plus_T_pow(u64 z, unsigned z_precision, u64 p, std::size_t M, unsigned N);

namespace testing {
/// Replaces lambda_index by `value` in every Artin–Hasse computation while
/// alive. Used by fault-injection tests only.
class ArtinHasseTamper {
 public:
  ArtinHasseTamper(std::size_t index, mpq_class value);
  ~ArtinHasseTamper();
  ArtinHasseTamper(const ArtinHasseTamper&) = delete;
  ArtinHasseTamper& operator=(const ArtinHasseTamper&) = delete;
};
/// True while an ArtinHasseTamper is alive; caches built on lambda bypass
/// themselves then.
bool artin_hasse_tampered();
}  // namespace testing

}  // namespace tadic
