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

#include "tadic/polygons.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tadic {

const mpq_class& ExtendedRational::value() const {
  if (infinite_) throw PreconditionError("value of an infinite degree");
  return value_;
}

std::string ExtendedRational::to_string() const { return infinite_ ? "inf" : tadic::to_string(value_); }

Polytope1D::Polytope1D(unsigned e, unsigned d) : e_(e), d_(d) {
  if (e + d == 0) throw PreconditionError("interval must strictly contain {0}");
  if (e == 0)
    D_ = d;
  else if (d == 0)
    D_ = e;
  else
    D_ = std::lcm(e, d);
}

Polytope1D Polytope1D::parse(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw PreconditionError("interval must look like lo..hi, got '" + text + "'");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(text.substr(0, pos));
    hi = std::stol(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw PreconditionError("interval must look like lo..hi, got '" + text + "'");
  }
  if (lo > 0 || hi < 0) throw PreconditionError("interval must contain 0: '" + text + "'");
  return Polytope1D(static_cast<unsigned>(-lo), static_cast<unsigned>(hi));
}

std::string Polytope1D::to_string() const {
  std::ostringstream os;
  os << "[" << (e_ ? "-" : "") << e_ << "," << d_ << "]";
  return os.str();
}

DegreeValue Polytope1D::deg(i64 a) const {
  if (a == 0) return mpq_class(0);
  unsigned s = side(a);
  if (s == 0) return DegreeValue::infinity();
  mpq_class r(a > 0 ? a : -a, s);
  r.canonicalize();
  return r;
}

bool Polytope1D::contains(i64 a) const { return a == 0 || side(a) != 0; }

i64 Polytope1D::scaled_deg(i64 a) const {
  if (!contains(a)) throw PreconditionError("scaled_deg outside the cone");
  if (a == 0) return 0;
  i64 s = side(a);
  return (a > 0 ? a : -a) * (static_cast<i64>(D_) / s);
}

std::vector<i64> Polytope1D::members_up_to(const mpq_class& bound) const {
  std::vector<i64> out;
  if (bound < 0) return out;
  out.push_back(0);
  i64 max_pos = d_ ? floor_q(bound * d_).get_si() : 0;
  i64 max_neg = e_ ? floor_q(bound * e_).get_si() : 0;
  for (i64 k = 1; k <= std::max(max_pos, max_neg); ++k) {
    if (k <= max_pos) out.push_back(k);
    if (k <= max_neg) out.push_back(-k);
  }
  return out;
}

ConvexPolygon::ConvexPolygon(std::vector<mpq_class> slopes) : slopes_(std::move(slopes)) {
  for (std::size_t k = 1; k < slopes_.size(); ++k)
    if (slopes_[k] < slopes_[k - 1]) throw PreconditionError("polygon slopes must be non-decreasing");
}

mpq_class ConvexPolygon::value(std::size_t k) const {
  if (k > slopes_.size()) throw PreconditionError("polygon evaluated beyond its length");
  mpq_class v = 0;
  for (std::size_t i = 0; i < k; ++i) v += slopes_[i];
  return v;
}

ConvexPolygon ConvexPolygon::scaled(const mpq_class& factor) const {
  std::vector<mpq_class> s = slopes_;
  for (auto& x : s) x *= factor;
  return ConvexPolygon(std::move(s));
}

ConvexPolygon ConvexPolygon::prefix(std::size_t n) const {
  if (n > slopes_.size()) throw PreconditionError("prefix longer than polygon");
  return ConvexPolygon(std::vector<mpq_class>(slopes_.begin(), slopes_.begin() + static_cast<long>(n)));
}

DegreeValue deg(const Polytope1D& delta, i64 a) { return delta.deg(a); }

namespace {

void require_member(const Polytope1D& delta, i64 a) {
  if (!delta.contains(a))
    throw PreconditionError(std::to_string(a) + " lies outside the cone of " + delta.to_string());
}

template <class LeftFn>
int delta_in_impl(const Polytope1D& delta, u64 p, i64 a, LeftFn left) {
  require_member(delta, a);
  if (a == 0) return 0;
  const mpq_class target = frac_q(delta.deg(a).value());
  const i64 s = delta.side(a);
  const i64 sign = a > 0 ? 1 : -1;
  // deg(i) < {deg(a)} <= 1 confines the witness to |i| < side.
  for (i64 k = 1; k < s; ++k) {
    const i64 i = sign * k;
    if (left(delta.deg(i).value()) < target &&
        frac_q(delta.deg(static_cast<i64>(p) * i).value()) == target)
      return 1;
  }
  return 0;
}

// Smallest `length` values of fn over M, with the member realising each.
template <class Fn>
std::vector<std::pair<mpq_class, i64>> smallest_values(const Polytope1D& delta, std::size_t length, Fn fn) {
  const unsigned vol = delta.volume();
  mpq_class bound(static_cast<long>((length + vol - 1) / vol + 2));
  std::vector<std::pair<mpq_class, i64>> vals;
  std::vector<i64> members = delta.members_up_to(bound);
  vals.reserve(members.size());
  for (i64 a : members) vals.emplace_back(fn(a), a);
  std::stable_sort(vals.begin(), vals.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  vals.resize(std::min(length, vals.size()));
  return vals;
}

}  // namespace

int delta_in(const Polytope1D& delta, u64 p, i64 a) {
  return delta_in_impl(delta, p, a, [](const mpq_class& x) { return x; });
}

int delta_in_fractional(const Polytope1D& delta, u64 p, i64 a) {
  return delta_in_impl(delta, p, a, [](const mpq_class& x) { return frac_q(x); });
}

i64 varpi(const Polytope1D& delta, u64 p, i64 a) {
  require_member(delta, a);
  mpq_class scaled = delta.deg(a).value() * static_cast<long>(p - 1);
  return ceil_q(scaled).get_si() - delta_in(delta, p, a);
}

ConvexPolygon hodge_polygon(const Polytope1D& delta, std::size_t length) {
  if (length < 1) throw PreconditionError("polygon length must be >= 1");
  auto vals = smallest_values(delta, length, [&](i64 a) { return delta.deg(a).value(); });
  std::vector<mpq_class> slopes;
  for (auto& v : vals) slopes.push_back(v.first);
  return ConvexPolygon(std::move(slopes));
}

ConvexPolygon arithmetic_polygon(const Polytope1D& delta, u64 p, std::size_t length) {
  if (length < 1) throw PreconditionError("polygon length must be >= 1");
  auto vals = smallest_values(delta, length, [&](i64 a) { return mpq_class(varpi(delta, p, a)); });
  std::vector<mpq_class> slopes;
  for (auto& v : vals) slopes.push_back(v.first);
  return ConvexPolygon(std::move(slopes));
}

std::vector<std::string> arithmetic_order_diagnostics(const Polytope1D& delta, u64 p, std::size_t length) {
  std::vector<std::string> out;
  auto members = delta.members_up_to(mpq_class(static_cast<long>((length + delta.volume() - 1) / delta.volume() + 1)));
  if (members.size() > length) members.resize(length);
  for (std::size_t k = 1; k < members.size(); ++k) {
    i64 prev = varpi(delta, p, members[k - 1]);
    i64 cur = varpi(delta, p, members[k]);
    if (cur < prev) {
      std::ostringstream os;
      os << "varpi(" << members[k] << ")=" << cur << " < varpi(" << members[k - 1] << ")=" << prev
         << ": natural order is not ascending";
      out.push_back(os.str());
    }
  }
  return out;
}

std::vector<i64> delta_in_reading_differences(const Polytope1D& delta, u64 p, i64 max_abs) {
  std::vector<i64> out;
  for (i64 a : delta.members_up_to(mpq_class(max_abs)))
    if (std::abs(a) <= max_abs && delta_in(delta, p, a) != delta_in_fractional(delta, p, a)) out.push_back(a);
  return out;
}

ConvexPolygon newton_polygon_from_points(const std::vector<std::pair<i64, ExtendedRational>>& points) {
  if (points.empty()) throw PreconditionError("Newton polygon of no points");
  if (points.front().first != 0 || !(points.front().second == ExtendedRational(0L)))
    throw PreconditionError("Newton polygon needs the point (0, 0)");
  std::vector<std::pair<i64, mpq_class>> pts;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0 && points[k].first <= points[k - 1].first)
      throw PreconditionError("Newton polygon points must have increasing x");
    if (points[k].second.is_finite()) pts.emplace_back(points[k].first, points[k].second.value());
  }
  // Andrew's monotone chain, lower half.
  std::vector<std::pair<i64, mpq_class>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b when it lies on or above the chord a -> pt.
      mpq_class lhs = (b.second - a.second) * (pt.first - a.first);
      mpq_class rhs = (pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<mpq_class> slopes;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    i64 dx = hull[k].first - hull[k - 1].first;
    mpq_class s = (hull[k].second - hull[k - 1].second) / mpq_class(dx);
    s.canonicalize();
    for (i64 t = 0; t < dx; ++t) slopes.push_back(s);
  }
  return ConvexPolygon(std::move(slopes));
}

std::vector<std::size_t> turning_points(const ConvexPolygon& polygon) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < polygon.length(); ++k)
    if (polygon.slope(k - 1) < polygon.slope(k)) out.push_back(k);
  return out;
}

PolygonComparison polygon_compare(const ConvexPolygon& P, const ConvexPolygon& Q, std::size_t range) {
  if (P.length() < range || Q.length() < range) throw PreconditionError("polygons shorter than comparison range");
  PolygonComparison r;
  r.lies_above = true;
  r.equal = true;
  mpq_class vp_ = 0, vq = 0;
  for (std::size_t k = 0; k < range; ++k) {
    vp_ += P.slope(k);
    vq += Q.slope(k);
    if (vp_ < vq) r.lies_above = false;
    if (vp_ != vq) {
      r.equal = false;
      if (!r.first_divergence) r.first_divergence = k;
    }
  }
  return r;
}

}  // namespace tadic
