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

#include "tadic/exp_sums.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

#include "tadic/galois_ring.hpp"
#include "tadic/hasse.hpp"

namespace tadic {

LaurentPolyFq::LaurentPolyFq(Polytope1D delta, FieldPtr field, std::map<i64, FieldElem> coeffs)
    : delta_(delta), field_(std::move(field)) {
  for (auto& [u, c] : coeffs) {
    if (u < -static_cast<i64>(delta_.e()) || u > static_cast<i64>(delta_.d()))
      throw PreconditionError("exponent " + std::to_string(u) + " lies outside " + delta_.to_string());
    if (!c.field()->same_as(*field_)) throw PreconditionError("coefficient lives in a different field");
    if (!c.is_zero()) coeffs_.emplace(u, c);
  }
  if (delta_.d() > 0 && !coeffs_.count(static_cast<i64>(delta_.d())))
    throw PreconditionError("coefficient at the vertex " + std::to_string(delta_.d()) + " must be nonzero");
  if (delta_.e() > 0 && !coeffs_.count(-static_cast<i64>(delta_.e())))
    throw PreconditionError("coefficient at the vertex -" + std::to_string(delta_.e()) + " must be nonzero");
}

FieldElem LaurentPolyFq::coeff(i64 u) const {
  auto it = coeffs_.find(u);
  return it == coeffs_.end() ? FieldElem(field_) : it->second;
}

LaurentPolyFq LaurentPolyFq::frobenius_conjugate() const {
  std::map<i64, FieldElem> c;
  for (const auto& [u, x] : coeffs_) c.emplace(u, frobenius(x));
  return LaurentPolyFq(delta_, field_, std::move(c));
}

std::string LaurentPolyFq::to_string() const {
  std::string s;
  for (const auto& [u, c] : coeffs_) {
    if (!s.empty()) s += ",";
    s += "a(" + std::to_string(u) + ")=" + std::to_string(c.index());
  }
  return s;
}

namespace {

struct TraceTable {
  std::vector<u64> tr;    // Tr(w(g)^j) mod p^N, j < Q - 1
  std::vector<u32> log;   // log[index(x)] for x != 0
};

std::mutex g_table_mu;
std::map<std::tuple<u64, unsigned, unsigned>, std::shared_ptr<const TraceTable>> g_tables;

constexpr u64 kMaxTable = u64{1} << 24;

std::shared_ptr<const TraceTable> trace_table(u64 p, unsigned n, unsigned N) {
  const auto key = std::make_tuple(p, n, N);
  {
    std::lock_guard<std::mutex> lock(g_table_mu);
    auto it = g_tables.find(key);
    if (it != g_tables.end()) return it->second;
  }
  FieldPtr F = FiniteField::create(p, n);
  RingPtr R = GaloisRing::create(p, N, n);
  const u64 Q1 = F->order() - 1;
  auto table = std::make_shared<TraceTable>();
  table->tr.resize(Q1);
  table->log.assign(F->order(), 0);
  FieldElem g = primitive_element(F);
  GRElem w = teichmuller(g, R);
  // w^j reduces to g^j, which gives the discrete log of every unit.
  std::vector<u64> wj(n, 0), next(n);
  wj[0] = 1;
  for (u64 j = 0; j < Q1; ++j) {
    table->tr[j] = R->trace(wj.data());
    u64 idx = 0;
    for (unsigned i = n; i-- > 0;) idx = idx * p + wj[i] % p;
    table->log[idx] = static_cast<u32>(j);
    R->mul(wj.data(), w.coeffs().data(), next.data());
    wj.swap(next);
  }
  if (wj != GRElem::constant(R, 1).coeffs()) throw PropertyViolation("lifted generator has the wrong order");
  std::lock_guard<std::mutex> lock(g_table_mu);
  return g_tables.emplace(key, std::move(table)).first->second;
}

u64 checked_count(const LaurentPolyFq& f, unsigned k, u64 budget) {
  if (k == 0) throw PreconditionError("k must be >= 1");
  const u64 Q = ipow_checked(f.p(), f.a() * k);
  if (Q - 1 > budget)
    throw BudgetError("S_f(" + std::to_string(k) + ") needs q^k - 1 = " + std::to_string(Q - 1) +
                          " point evaluations, budget is " + std::to_string(budget),
                      Q - 1, budget);
  return Q;
}

std::vector<u64> histogram_tabulated(const LaurentPolyFq& f, unsigned k, unsigned N) {
  const unsigned n = f.a() * k;
  FieldPtr big = FiniteField::create(f.p(), n);
  auto table = trace_table(f.p(), n, N);
  const i64 Q1 = static_cast<i64>(big->order() - 1);
  const u64 pN = ipow_checked(f.p(), N);
  // Exponent of w(g) in w(a_u) w(g^i)^u, advanced by u each step.
  std::vector<i64> pos, step;
  for (const auto& [u, c] : f.coeffs()) {
    pos.push_back(table->log[embed(c, big).index()]);
    step.push_back(((u % Q1) + Q1) % Q1);
  }
  std::vector<u64> hist(pN, 0);
  const std::size_t nt = pos.size();
  const u64* tr = table->tr.data();
  for (i64 i = 0; i < Q1; ++i) {
    u64 t = 0;
    for (std::size_t k = 0; k < nt; ++k) {
      t += tr[pos[k]];
      pos[k] += step[k];
      if (pos[k] >= Q1) pos[k] -= Q1;
    }
    ++hist[t % pN];
  }
  return hist;
}

std::vector<u64> histogram_direct(const LaurentPolyFq& f, unsigned k, unsigned N) {
  const unsigned n = f.a() * k;
  FieldPtr big = FiniteField::create(f.p(), n);
  RingPtr R = GaloisRing::create(f.p(), N, n);
  const u64 pN = R->pN();
  std::vector<std::pair<i64, GRElem>> terms;
  i64 max_pos = 0, max_neg = 0;
  for (const auto& [u, c] : f.coeffs()) {
    terms.emplace_back(u, teichmuller(embed(c, big), R));
    max_pos = std::max(max_pos, u);
    max_neg = std::max(max_neg, -u);
  }
  std::vector<u64> hist(pN, 0);
  std::vector<GRElem> pos, neg;
  for (u64 idx = 1; idx < big->order(); ++idx) {
    GRElem w = teichmuller(FieldElem::from_index(big, idx), R);
    pos.assign(1, GRElem::constant(R, 1));
    for (i64 u = 1; u <= max_pos; ++u) pos.push_back(pos.back() * w);
    neg.assign(1, GRElem::constant(R, 1));
    if (max_neg > 0) {
      GRElem winv = w.inverse();
      for (i64 u = 1; u <= max_neg; ++u) neg.push_back(neg.back() * winv);
    }
    GRElem z(R);
    for (const auto& [u, c] : terms) z += c * (u >= 0 ? pos[u] : neg[-u]);
    ++hist[gr_trace(z)];
  }
  return hist;
}

}  // namespace

std::vector<u64> character_histogram(const LaurentPolyFq& f, unsigned k, unsigned N, u64 budget, SumMethod method) {
  const u64 Q = checked_count(f, k, budget);
  if (N < 1) throw PreconditionError("precision must be >= 1");
  if (ipow_checked(f.p(), N) > (u64{1} << 26)) throw PreconditionError("histogram modulus p^N is too large");
  if (method == SumMethod::kTabulated && Q - 1 <= kMaxTable) return histogram_tabulated(f, k, N);
  return histogram_direct(f, k, N);
}

CyclotomicInt sum_S_cyclotomic(const LaurentPolyFq& f, unsigned k, unsigned m, u64 budget, SumMethod method) {
  CycField K(f.p(), m);
  return CyclotomicInt::from_histogram(K, character_histogram(f, k, m, budget, method));
}

TSeries sum_S_Tseries(const LaurentPolyFq& f, unsigned k, unsigned N, std::size_t M, u64 budget, SumMethod method) {
  const unsigned Nw = binomial_working_precision(f.p(), M, N);
  std::vector<u64> hist = character_histogram(f, k, Nw, budget, method);
  TSeries S(f.p(), N, M);
  for (u64 t = 0; t < hist.size(); ++t)
    if (hist[t]) S = S + one_plus_T_pow(t, Nw, f.p(), M, N).scaled(hist[t]);
  return S;
}

u64 l_function_cost(const LaurentPolyFq& f, unsigned m, unsigned slack) {
  const u64 deg = ipow_checked(f.p(), m - 1) * f.delta().volume();
  u64 total = 0;
  for (u64 k = 1; k <= deg + slack; ++k) {
    u64 Q = ipow_checked(f.p(), static_cast<unsigned>(f.a() * k));
    total += Q - 1;
    if (total > (u64{1} << 61)) throw PreconditionError("L-function cost overflows");
  }
  return total;
}

LPolynomial l_function(const LaurentPolyFq& f, unsigned m, u64 budget, unsigned slack) {
  if (m < 1) throw PreconditionError("m must be >= 1");
  if (f.delta().D() % f.p() == 0) throw PreconditionError("p must not divide D");
  const u64 cost = l_function_cost(f, m, slack);
  if (cost > budget)
    throw BudgetError("L-function needs sum_{k<=deg+slack} (q^k - 1) = " + std::to_string(cost) +
                          " point evaluations, budget is " + std::to_string(budget),
                      cost, budget);
  CycField K(f.p(), m);
  const std::size_t deg = static_cast<std::size_t>(ipow_checked(f.p(), m - 1) * f.delta().volume());
  const std::size_t top = deg + slack;
  std::vector<CyclotomicInt> S;
  for (std::size_t k = 1; k <= top; ++k) S.push_back(sum_S_cyclotomic(f, static_cast<unsigned>(k), m, budget));
  std::vector<CycRational> c;
  c.emplace_back(CyclotomicInt::constant(K, 1));
  for (std::size_t n = 1; n <= top; ++n) {
    CycRational acc{CyclotomicInt(K)};
    for (std::size_t k = 1; k <= n; ++k) acc = acc + CycRational(S[k - 1]) * c[n - k];
    c.push_back(acc.divided(mpz_class(static_cast<unsigned long>(n))));
    if (!c.back().is_integral())
      throw PropertyViolation("L-function coefficient c_" + std::to_string(n) + " is not integral");
  }
  for (std::size_t n = deg + 1; n <= top; ++n)
    if (!c[n].num.is_zero())
      throw PropertyViolation("L-function coefficient c_" + std::to_string(n) + " beyond the degree is nonzero");
  if (c[deg].num.is_zero()) throw PropertyViolation("L-function has degree below p^(m-1) Vol");
  LPolynomial L{f.p(), m, {}};
  for (std::size_t n = 0; n <= deg; ++n) L.coeffs.push_back(c[n].num);
  return L;
}

std::vector<ExtendedRational> l_valuations(const LPolynomial& L) {
  std::vector<ExtendedRational> v;
  for (const auto& c : L.coeffs) v.push_back(pi_valuation(c));
  return v;
}

ConvexPolygon np_of_L(const LPolynomial& L) {
  std::vector<std::pair<i64, ExtendedRational>> pts;
  auto v = l_valuations(L);
  for (std::size_t n = 0; n < v.size(); ++n) pts.emplace_back(static_cast<i64>(n), v[n]);
  return newton_polygon_from_points(pts);
}

ConvexPolygon np_C_from_L(const LPolynomial& L, unsigned a, std::size_t range) {
  CycField K(L.p, L.m);
  const mpq_class shift(static_cast<unsigned long>(a * K.e()));
  ConvexPolygon np = np_of_L(L);
  for (const auto& s : np.slopes())
    if (s > shift)
      throw PropertyViolation("L-function slope " + to_string(s) + " exceeds a e_m = " + to_string(shift));
  std::vector<mpq_class> all;
  for (std::size_t j = 0; j <= range; ++j)
    for (const auto& s : np.slopes()) all.push_back(s + shift * static_cast<unsigned long>(j));
  std::sort(all.begin(), all.end());
  all.resize(std::min(range, all.size()));
  return ConvexPolygon(all);
}

MainReport verify_main(const LaurentPolyFq& f, unsigned m, u64 budget) {
  return main_report(f, l_function(f, m, budget));
}

MainReport main_report(const LaurentPolyFq& f, const LPolynomial& L) {
  MainReport r;
  r.np_L = np_of_L(L);
  r.expected = arithmetic_polygon(f.delta(), f.p(), L.degree()).scaled(mpq_class(f.a()));
  auto cmp = polygon_compare(r.np_L, r.expected, L.degree());
  r.equal = cmp.equal;
  r.lies_above = cmp.lies_above;
  r.hasse_nonzero = hasse_product_eval(f.delta(), f.p(), f).nonzero;
  r.hypothesis_violated = !(f.p() > 3 * static_cast<u64>(f.delta().D()));
  r.consistent = r.equal == r.hasse_nonzero;
  return r;
}

}  // namespace tadic
