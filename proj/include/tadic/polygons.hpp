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

/// An exact rational or +infinity.
class ExtendedRational {
 public:
  ExtendedRational() : infinite_(true) {}
  ExtendedRational(mpq_class v) : value_(std::move(v)), infinite_(false) {}  // NOLINT
  ExtendedRational(long v) : value_(v), infinite_(false) {}                   // NOLINT
  static ExtendedRational infinity() { return ExtendedRational(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  const mpq_class& value() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

 private:
  mpq_class value_;
  bool infinite_;
};

using DegreeValue = ExtendedRational;

/// The integral interval [-e, d] containing 0, with e + d >= 1.
class Polytope1D {
 public:
  Polytope1D(unsigned e, unsigned d);

  /// Parses "lo..hi" with lo <= 0 <= hi, e.g. "0..3" or "-1..1".
  static Polytope1D parse(const std::string& text);

  unsigned e() const { return e_; }
  unsigned d() const { return d_; }
  /// lcm of the nonzero endpoints.
  unsigned D() const { return D_; }
  unsigned volume() const { return e_ + d_; }
  std::string to_string() const;

  /// Degree function of the cone: a/d on the right, |a|/e on the left.
  DegreeValue deg(i64 a) const;
  /// Membership in M = C ∩ Z, i.e. deg(a) finite.
  bool contains(i64 a) const;
  /// Reach on the side of a (d for a > 0, e for a < 0).
  unsigned side(i64 a) const { return a >= 0 ? d_ : e_; }
  /// D * deg(a) as an integer; a must be a member.
  i64 scaled_deg(i64 a) const;

  /// Members of M with deg <= bound, ordered by |a| with a positive
  /// member before its negative twin.
  std::vector<i64> members_up_to(const mpq_class& bound) const;

  friend bool operator==(const Polytope1D& a, const Polytope1D& b) { return a.e_ == b.e_ && a.d_ == b.d_; }

 private:
  unsigned e_;
  unsigned d_;
  unsigned D_;
};

/// A convex function on [0, length] that is linear between integers and
/// vanishes at 0, stored as its ascending slopes.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<mpq_class> slopes);

  const std::vector<mpq_class>& slopes() const { return slopes_; }
  std::size_t length() const { return slopes_.size(); }
  const mpq_class& slope(std::size_t k) const { return slopes_.at(k); }
  /// Sum of the first k slopes.
  mpq_class value(std::size_t k) const;
  ConvexPolygon scaled(const mpq_class& factor) const;
  ConvexPolygon prefix(std::size_t n) const;

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) { return a.slopes_ == b.slopes_; }

 private:
  std::vector<mpq_class> slopes_;
};

DegreeValue deg(const Polytope1D& delta, i64 a);

/// 1 iff some i with i*a > 0 has deg(i) < {deg(a)} and {deg(p i)} = {deg(a)}.
int delta_in(const Polytope1D& delta, u64 p, i64 a);
/// Alternative reading with {deg(i)} on the left; used only by diagnostics.
int delta_in_fractional(const Polytope1D& delta, u64 p, i64 a);

/// ceil((p-1) deg(a)) - delta_in(a).
i64 varpi(const Polytope1D& delta, u64 p, i64 a);

ConvexPolygon hodge_polygon(const Polytope1D& delta, std::size_t length);
ConvexPolygon arithmetic_polygon(const Polytope1D& delta, u64 p, std::size_t length);

/// Places where listing varpi in the natural |a| order is not already
/// ascending, among the members that realise the first `length` slopes.
std::vector<std::string> arithmetic_order_diagnostics(const Polytope1D& delta, u64 p, std::size_t length);

/// Members where the two readings of delta_in disagree, up to |a| <= max_abs.
std::vector<i64> delta_in_reading_differences(const Polytope1D& delta, u64 p, i64 max_abs);

/// Lower convex hull of (x, y) points; infinite y is skipped. The first
/// point must be (0, 0) and x must be strictly increasing.
ConvexPolygon newton_polygon_from_points(const std::vector<std::pair<i64, ExtendedRational>>& points);

/// All k >= 1 with slope(k-1) < slope(k).
std::vector<std::size_t> turning_points(const ConvexPolygon& polygon);

struct PolygonComparison {
  bool lies_above = false;  // P >= Q at every integer of [0, range]
  bool equal = false;
  /// 0-based index of the first unit segment [k, k+1] on which P and Q
  /// differ (so the first differing value sits at k + 1).
  std::optional<std::size_t> first_divergence;
};

PolygonComparison polygon_compare(const ConvexPolygon& P, const ConvexPolygon& Q, std::size_t range);

}  // namespace tadic
