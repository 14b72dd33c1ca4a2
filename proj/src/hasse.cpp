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

#include "tadic/hasse.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "tadic/series.hpp"

namespace tadic {

SlopeSet slope_set(const Polytope1D& delta, u64 p, unsigned m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  ConvexPolygon poly = arithmetic_polygon(delta, p, m + 1);
  SlopeSet s;
  s.m = m;
  s.threshold = static_cast<i64>(poly.slope(m - 1).get_num().get_si());
  s.turning = poly.slope(m - 1) < poly.slope(m);
  // varpi(a) >= (p-1) deg(a) - 1 bounds the search.
  mpq_class bound(s.threshold + 1, static_cast<long>(p - 1));
  bound.canonicalize();
  for (i64 a : delta.members_up_to(bound))
    if (varpi(delta, p, a) <= s.threshold) s.members.push_back(a);
  if (s.turning && s.members.size() != m)
    throw PropertyViolation("slope set at turning point " + std::to_string(m) + " has " +
                            std::to_string(s.members.size()) + " members");
  return s;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& pos) {
  int sign = 1;
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) sign = -sign;
  return sign;
}

// allowed[k][l]: members[k] may map to members[l].
std::vector<std::vector<bool>> allowed_table(const Polytope1D& delta, u64 p, const std::vector<i64>& A,
                                             TauReading reading) {
  const std::size_t n = A.size();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) {
    const i64 a = A[k];
    if (a == 0) {
      for (std::size_t l = 0; l < n; ++l) ok[k][l] = A[l] == 0;
      continue;
    }
    // n_side: member of largest degree on the side of a.
    mpq_class deg_n = 0;
    for (i64 b : A)
      if (b != 0 && (b > 0) == (a > 0)) deg_n = std::max(deg_n, delta.deg(b).value());
    const mpq_class dpa = delta.deg(static_cast<i64>(p) * a).value();
    const mpq_class rhs = dpa - mpq_class(ceil_q(dpa - deg_n));
    const long side = a > 0 ? static_cast<long>(delta.d()) : -static_cast<long>(delta.e());
    for (std::size_t l = 0; l < n; ++l) {
      mpq_class lhs;
      if (reading == TauReading::kSignedEndpoint) {
        lhs = mpq_class(A[l], side);
        lhs.canonicalize();
      } else {
        lhs = delta.deg(A[l]).value();
      }
      ok[k][l] = lhs >= rhs;
    }
  }
  return ok;
}

std::vector<Permutation> enumerate(const std::vector<i64>& A, const std::vector<std::vector<bool>>& ok) {
  const std::size_t n = A.size();
  std::vector<Permutation> out;
  std::vector<std::size_t> pos(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      Permutation t;
      for (std::size_t i = 0; i < n; ++i) t.images.push_back(A[pos[i]]);
      t.sign = permutation_sign(pos);
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t l = 0; l < n; ++l) {
      if (used[l] || !ok[k][l]) continue;
      used[l] = true;
      pos[k] = l;
      rec(k + 1);
      used[l] = false;
    }
  };
  rec(0);
  return out;
}

SlopeSet checked_turning_set(const Polytope1D& delta, u64 p, unsigned m) {
  SlopeSet s = slope_set(delta, p, m);
  if (!s.turning) throw PreconditionError(std::to_string(m) + " is not a turning point of p_Delta");
  if (s.members.size() > 10) throw PreconditionError("slope set too large for permutation enumeration");
  return s;
}

}  // namespace

std::vector<Permutation> s_m0(const Polytope1D& delta, u64 p, unsigned m, TauReading reading) {
  SlopeSet s = checked_turning_set(delta, p, m);
  return enumerate(s.members, allowed_table(delta, p, s.members, reading));
}

std::vector<Permutation> s_m0_reading_differences(const Polytope1D& delta, u64 p, unsigned m) {
  auto a = s_m0(delta, p, m, TauReading::kSignedEndpoint);
  auto b = s_m0(delta, p, m, TauReading::kDegree);
  auto key = [](const Permutation& t) { return t.images; };
  std::vector<Permutation> diff;
  for (const auto& t : a)
    if (std::none_of(b.begin(), b.end(), [&](const Permutation& u) { return key(u) == key(t); })) diff.push_back(t);
  for (const auto& t : b)
    if (std::none_of(a.begin(), a.end(), [&](const Permutation& u) { return key(u) == key(t); })) diff.push_back(t);
  return diff;
}

HassePolynomial::HassePolynomial(u64 p, unsigned m, Polytope1D delta)
    : p_(p), m_(m), delta_(delta), nvars_(2 * std::max(delta.e(), delta.d()) + 1) {}

HassePolynomial HassePolynomial::one(u64 p, unsigned m, Polytope1D delta) {
  HassePolynomial h(p, m, delta);
  h.add_term(Exponents(h.nvars_, 0), 1);
  return h;
}

void HassePolynomial::add_term(const Exponents& exps, u64 coeff) {
  coeff %= p_;
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exps, coeff);
  if (!fresh) {
    it->second = addmod(it->second, coeff, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

HassePolynomial HassePolynomial::operator*(const HassePolynomial& o) const {
  HassePolynomial r(p_, m_, delta_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, mulmod(ca, cb, p_));
    }
  return r;
}

HassePolynomial HassePolynomial::operator+(const HassePolynomial& o) const {
  HassePolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HassePolynomial HassePolynomial::scaled(u64 c) const {
  HassePolynomial r(p_, m_, delta_);
  for (const auto& [e, x] : terms_) r.add_term(e, mulmod(x, c % p_, p_));
  return r;
}

std::vector<u64> HassePolynomial::weighted_degrees() const {
  std::vector<u64> w;
  for (const auto& [e, c] : terms_) {
    u64 s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) s += static_cast<u64>(std::llabs(variable(i))) * e[i];
    w.push_back(s);
  }
  return w;
}

FieldElem HassePolynomial::evaluate(const LaurentPolyFq& f) const {
  if (f.p() != p_) throw PreconditionError("polynomial and f have different characteristic");
  FieldElem total(f.field());
  for (const auto& [e, c] : terms_) {
    FieldElem term = FieldElem::constant(f.field(), c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) term *= f.coeff(variable(i)).pow(e[i]);
    total += term;
  }
  return total;
}

std::string HassePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(variable(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string t = mono.empty() ? std::to_string(c) : (c == 1 ? mono : std::to_string(c) + "*" + mono);
    s += (s.empty() ? "" : " + ") + t;
  }
  return s;
}

namespace {

// sum over {n_j : sum j n_j = r, sum n_j = s} of prod_j lambda_{n_j} y_j^{n_j}.
HassePolynomial knapsack(const Polytope1D& delta, u64 p, unsigned m, i64 r, u64 s, const std::vector<u64>& lambda) {
  HassePolynomial out(p, m, delta);
  std::vector<i64> vars;
  for (i64 j = -static_cast<i64>(delta.e()); j <= static_cast<i64>(delta.d()); ++j) vars.push_back(j);
  HassePolynomial::Exponents e(out.variable_count(), 0);
  std::function<void(std::size_t, u64, i64, u64)> rec = [&](std::size_t k, u64 left, i64 rem, u64 coeff) {
    if (k == vars.size()) {
      if (left == 0 && rem == 0) out.add_term(e, coeff);
      return;
    }
    // The remaining variables span [vars[k], vars.back()].
    const i64 lo = vars[k] * static_cast<i64>(left), hi = vars.back() * static_cast<i64>(left);
    if (rem < lo || rem > hi) return;
    const i64 j = vars[k];
    for (u64 n = 0; n <= left; ++n) {
      e[HassePolynomial::slot(j)] = static_cast<unsigned>(n);
      u64 c = mulmod(coeff, lambda[n], p);
      if (c) rec(k + 1, left - n, rem - j * static_cast<i64>(n), c);
    }
    e[HassePolynomial::slot(j)] = 0;
  };
  rec(0, s, r, 1);
  return out;
}

std::mutex g_hasse_mu;
std::map<std::tuple<unsigned, unsigned, u64, unsigned>, HassePolynomial> g_hasse_cache;

}  // namespace

HassePolynomial hasse_m(const Polytope1D& delta, u64 p, unsigned m) {
  const auto key = std::make_tuple(delta.e(), delta.d(), p, m);
  const bool cacheable = !testing::artin_hasse_tampered();
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_hasse_mu);
    auto it = g_hasse_cache.find(key);
    if (it != g_hasse_cache.end()) return it->second;
  }
  SlopeSet A = checked_turning_set(delta, p, m);
  auto perms = s_m0(delta, p, m);
  // Inner counts ceil(deg(p i - tau(i))) bound the Artin–Hasse indices used.
  u64 max_s = 0;
  for (const auto& t : perms)
    for (std::size_t k = 0; k < A.members.size(); ++k) {
      DegreeValue dv = delta.deg(static_cast<i64>(p) * A.members[k] - t.images[k]);
      if (dv.is_finite()) max_s = std::max<u64>(max_s, ceil_q(dv.value()).get_ui());
    }
  std::vector<u64> lambda = artin_hasse_mod(p, max_s + 1, 1);
  HassePolynomial H(p, m, delta);
  for (const auto& t : perms) {
    HassePolynomial term = HassePolynomial::one(p, m, delta);
    for (std::size_t k = 0; k < A.members.size() && !term.is_zero(); ++k) {
      const i64 r = static_cast<i64>(p) * A.members[k] - t.images[k];
      DegreeValue dv = delta.deg(r);
      if (dv.is_infinite()) {
        term = HassePolynomial(p, m, delta);
        break;
      }
      term = term * knapsack(delta, p, m, r, ceil_q(dv.value()).get_ui(), lambda);
    }
    H = H + term.scaled(t.sign > 0 ? 1 : p - 1);
  }
  if (cacheable) {
    std::lock_guard<std::mutex> lock(g_hasse_mu);
    g_hasse_cache.emplace(key, H);
  }
  return H;
}

std::vector<unsigned> hasse_turning_points(const Polytope1D& delta, u64 p) {
  std::vector<unsigned> out;
  for (std::size_t k : turning_points(arithmetic_polygon(delta, p, delta.volume())))
    out.push_back(static_cast<unsigned>(k));
  return out;
}

HasseEvaluation hasse_product_eval(const Polytope1D& delta, u64 p, const LaurentPolyFq& f) {
  if (!(f.delta() == delta) || f.p() != p) throw PreconditionError("f does not match (delta, p)");
  HasseEvaluation ev{FieldElem::constant(f.field(), 1), false, {}};
  for (unsigned m : hasse_turning_points(delta, p)) {
    FieldElem v = hasse_m(delta, p, m).evaluate(f);
    ev.factors.emplace_back(m, v);
    ev.value *= v;
  }
  ev.nonzero = !ev.value.is_zero();
  return ev;
}

}  // namespace tadic
