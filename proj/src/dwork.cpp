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

#include "tadic/dwork.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tadic/hasse.hpp"

namespace tadic {

PiSeries::PiSeries(RingPtr ring, unsigned D, i64 cutoff)
    : ring_(std::move(ring)), D_(D), cutoff_(cutoff), width_(ring_->degree()) {
  if (D < 1 || cutoff < 0) throw PreconditionError("pi-series needs D >= 1 and a nonnegative cutoff");
  data_.assign(static_cast<std::size_t>(cutoff + 1) * width_, 0);
}

void PiSeries::check_same(const PiSeries& o) const {
  if (!ring_->same_as(*o.ring_) || D_ != o.D_ || cutoff_ != o.cutoff_)
    throw PreconditionError("pi-series operands have different shapes");
}

GRElem PiSeries::coeff(i64 k) const {
  if (k < 0 || k > cutoff_) return GRElem(ring_);
  return GRElem(ring_, std::vector<u64>(raw(k), raw(k) + width_));
}

void PiSeries::set(i64 k, const GRElem& c) {
  if (k < 0 || k > cutoff_) return;
  std::copy(c.coeffs().begin(), c.coeffs().end(), raw(k));
}

void PiSeries::add_at(i64 k, const GRElem& c) {
  if (k < 0 || k > cutoff_) return;
  u64* r = raw(k);
  for (std::size_t i = 0; i < width_; ++i) r[i] = addmod(r[i], c.coeffs()[i], ring_->pN());
}

PiSeries PiSeries::operator+(const PiSeries& o) const {
  check_same(o);
  PiSeries r(ring_, D_, cutoff_);
  const u64 pN = ring_->pN();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = addmod(data_[i], o.data_[i], pN);
  return r;
}

PiSeries PiSeries::operator-(const PiSeries& o) const {
  check_same(o);
  PiSeries r(ring_, D_, cutoff_);
  const u64 pN = ring_->pN();
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = submod(data_[i], o.data_[i], pN);
  return r;
}

namespace {

bool block_zero(const u64* x, std::size_t w) {
  for (std::size_t i = 0; i < w; ++i)
    if (x[i]) return false;
  return true;
}

}  // namespace

PiSeries PiSeries::operator*(const PiSeries& o) const {
  check_same(o);
  PiSeries r(ring_, D_, cutoff_);
  std::vector<i64> nz;
  for (i64 j = 0; j <= cutoff_; ++j)
    if (!block_zero(o.raw(j), width_)) nz.push_back(j);
  for (i64 i = 0; i <= cutoff_; ++i) {
    if (block_zero(raw(i), width_)) continue;
    for (i64 j : nz) {
      if (i + j > cutoff_) break;
      ring_->mul_add(raw(i), o.raw(j), r.raw(i + j));
    }
  }
  return r;
}

PiSeries PiSeries::shifted(i64 s) const {
  PiSeries r(ring_, D_, cutoff_);
  for (i64 k = 0; k <= cutoff_; ++k) {
    if (block_zero(raw(k), width_)) continue;
    const i64 t = k + s;
    if (t < 0) throw PropertyViolation("negative pi-exponent after a shift");
    if (t <= cutoff_) std::copy(raw(k), raw(k) + width_, r.raw(t));
  }
  return r;
}

PiSeries PiSeries::scaled(const GRElem& c) const {
  PiSeries r(ring_, D_, cutoff_);
  for (i64 k = 0; k <= cutoff_; ++k)
    if (!block_zero(raw(k), width_)) ring_->mul(raw(k), c.coeffs().data(), r.raw(k));
  return r;
}

PiSeries PiSeries::sigma_inverse() const {
  PiSeries r(ring_, D_, cutoff_);
  for (i64 k = 0; k <= cutoff_; ++k) ring_->frobenius_inverse(raw(k), r.raw(k));
  return r;
}

bool PiSeries::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](u64 x) { return x == 0; });
}

std::optional<i64> PiSeries::order() const {
  for (i64 k = 0; k <= cutoff_; ++k)
    if (!block_zero(raw(k), width_)) return k;
  return std::nullopt;
}

std::optional<i64> PiSeries::unit_order() const {
  for (i64 k = 0; k <= cutoff_; ++k)
    if (ring_->is_unit(raw(k))) return k;
  return std::nullopt;
}

bool PiSeries::fractional_part_vanishes() const {
  for (i64 k = 0; k <= cutoff_; ++k)
    if (k % D_ != 0 && !block_zero(raw(k), width_)) return false;
  return true;
}

std::string PiSeries::to_string() const {
  std::string s;
  for (i64 k = 0; k <= cutoff_; ++k) {
    if (block_zero(raw(k), width_)) continue;
    if (!s.empty()) s += " + ";
    mpq_class e(k, D_);
    e.canonicalize();
    s += coeff(k).to_string() + "*pi^" + tadic::to_string(e);
  }
  return s.empty() ? "0" : s;
}

std::map<i64, PiSeries> ef_gamma(const LaurentPolyFq& f, i64 K, unsigned N) {
  if (K < 0) throw PreconditionError("pi cutoff must be nonnegative");
  const u64 p = f.p();
  const unsigned D = f.delta().D();
  const i64 C = static_cast<i64>(D) * K;
  RingPtr R = GaloisRing::create(p, N, f.a());
  std::vector<u64> lambda = artin_hasse_mod(p, static_cast<std::size_t>(K) + 1, N);
  std::map<i64, PiSeries> cur;
  PiSeries one(R, D, C);
  one.set(0, GRElem::constant(R, 1));
  cur.emplace(0, one);
  for (const auto& [u, a] : f.coeffs()) {
    const GRElem w = teichmuller(a, R);
    // E(pi w x^u) = sum_k lambda_k w^k pi^k x^(u k).
    std::vector<GRElem> factor;
    GRElem wk = GRElem::constant(R, 1);
    for (i64 k = 0; k <= K; ++k) {
      factor.push_back(wk * GRElem::constant(R, lambda[k]));
      wk *= w;
    }
    std::map<i64, PiSeries> next;
    for (const auto& [i, s] : cur) {
      for (i64 k = 0; k <= K; ++k) {
        if (factor[k].is_zero()) continue;
        PiSeries term = s.shifted(static_cast<i64>(D) * k).scaled(factor[k]);
        if (term.is_zero()) continue;
        auto it = next.find(i + u * k);
        if (it == next.end())
          next.emplace(i + u * k, term);
        else
          it->second += term;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

DworkBasis::DworkBasis(const Polytope1D& d, const mpq_class& B) : delta(d), bound(B) {
  if (B < 0) throw PreconditionError("basis bound must be nonnegative");
  members = delta.members_up_to(B);
  // Next member beyond the bound on each side.
  std::optional<mpq_class> next;
  for (unsigned side : {delta.d(), delta.e()}) {
    if (side == 0) continue;
    mpz_class i = floor_q(B * side) + 1;
    mpq_class dg(i, side);
    dg.canonicalize();
    if (!next || dg < *next) next = dg;
  }
  next_degree = *next;
}

namespace {

std::vector<PiSeries> mat_mul(const std::vector<PiSeries>& A, const std::vector<PiSeries>& B, std::size_t n) {
  std::vector<PiSeries> C;
  C.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PiSeries s(A[0].ring(), A[0].D(), A[0].cutoff());
      for (std::size_t k = 0; k < n; ++k) s += A[i * n + k] * B[k * n + j];
      C.push_back(std::move(s));
    }
  return C;
}

}  // namespace

DworkMatrix psi_matrix(const LaurentPolyFq& f, const mpq_class& B, unsigned N, i64 cutoff) {
  const Polytope1D& delta = f.delta();
  const u64 p = f.p();
  const unsigned D = delta.D();
  DworkBasis basis(delta, B);
  const std::size_t n = basis.members.size();
  i64 max_sdeg = 0;
  for (i64 i : basis.members) max_sdeg = std::max(max_sdeg, delta.scaled_deg(i));
  // gamma_{pi-j} is needed up to cutoff + D(deg i - deg j).
  const i64 K = (cutoff + max_sdeg + D - 1) / D;
  auto gamma = ef_gamma(f, K, N);
  RingPtr R = GaloisRing::create(p, N, f.a());
  std::vector<PiSeries> A;
  A.reserve(n * n);
  for (i64 i : basis.members) {
    for (i64 j : basis.members) {
      PiSeries entry(R, D, cutoff);
      const i64 r = static_cast<i64>(p) * i - j;
      auto it = gamma.find(r);
      if (it != gamma.end()) {
        const PiSeries& g = it->second;
        DegreeValue dr = delta.deg(r);
        const i64 floor_num = dr.is_finite() ? static_cast<i64>(D) * ceil_q(dr.value()).get_si() : -1;
        const i64 shift = delta.scaled_deg(j) - delta.scaled_deg(i);
        for (i64 k = 0; k <= g.cutoff(); ++k) {
          GRElem c = g.coeff(k);
          if (c.is_zero()) continue;
          if (floor_num < 0 || k < floor_num)
            throw PropertyViolation("gamma_" + std::to_string(r) + " has a term below pi^ceil(deg)");
          if (k + shift < 0) throw PropertyViolation("Dwork matrix entry has negative pi-order");
          entry.set(k + shift, gr_frobenius_inverse(c));
        }
      }
      A.push_back(std::move(entry));
    }
  }
  std::vector<PiSeries> M = A;
  std::vector<PiSeries> Ak = A;
  for (unsigned t = 1; t < f.a(); ++t) {
    for (auto& e : Ak) e = e.sigma_inverse();
    M = mat_mul(M, Ak, n);
  }
  mpq_class exact = mpq_class(static_cast<unsigned long>(p - 1)) * basis.next_degree;
  return DworkMatrix{basis, p, f.a(), N, cutoff, std::move(M), exact};
}

PiSeries matrix_power_trace(const DworkMatrix& M, unsigned k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const std::size_t n = M.size();
  RingPtr R = GaloisRing::create(M.p, M.N, M.a);
  PiSeries tr(R, M.basis.delta.D(), M.cutoff);
  if (n == 0) return tr;
  std::vector<PiSeries> P = M.entries;
  for (unsigned t = 1; t < k; ++t) P = mat_mul(P, M.entries, n);
  for (std::size_t i = 0; i < n; ++i) tr += P[i * n + i];
  return tr;
}

std::vector<FredholmCoeff> fredholm_coeffs(const DworkMatrix& M, unsigned upto) {
  const std::size_t n = M.size();
  RingPtr R = GaloisRing::create(M.p, M.N, M.a);
  const unsigned D = M.basis.delta.D();
  const u64 p = M.p;
  std::vector<PiSeries> power_sums;
  if (n > 0) {
    std::vector<PiSeries> P = M.entries;
    for (unsigned k = 1; k <= upto; ++k) {
      if (k > 1) P = mat_mul(P, M.entries, n);
      PiSeries tr(R, D, M.cutoff);
      for (std::size_t i = 0; i < n; ++i) tr += P[i * n + i];
      power_sums.push_back(std::move(tr));
    }
  } else {
    power_sums.assign(upto, PiSeries(R, D, M.cutoff));
  }
  std::vector<PiSeries> e;
  std::vector<unsigned> prec;
  PiSeries one(R, D, M.cutoff);
  one.set(0, GRElem::constant(R, 1));
  e.push_back(one);
  prec.push_back(M.N);
  std::vector<FredholmCoeff> out;
  const GRElem minus_one = GRElem::constant(R, R->pN() - 1);
  for (unsigned k = 1; k <= upto; ++k) {
    // k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i.
    PiSeries s(R, D, M.cutoff);
    unsigned pr = M.N;
    for (unsigned i = 1; i <= k; ++i) {
      PiSeries t = e[k - i] * power_sums[i - 1];
      s += (i % 2 == 1) ? t : t.scaled(minus_one);
      pr = std::min(pr, prec[k - i]);
    }
    const unsigned v = vp(static_cast<u64>(k), p);
    if (pr <= v) throw PrecisionError("Newton identities exhausted the p-adic precision at c_" + std::to_string(k));
    const u64 mod = ipow_checked(p, pr);
    const u64 pv = ipow_checked(p, v);
    const unsigned npr = pr - v;
    const u64 nmod = ipow_checked(p, npr);
    const u64 uinv = invmod((k / pv) % nmod, nmod);
    for (i64 j = 0; j <= M.cutoff; ++j) {
      u64* c = s.raw(j);
      for (unsigned w = 0; w < R->degree(); ++w) {
        const u64 x = c[w] % mod;
        if (x % pv) throw PropertyViolation("Newton identity numerator not divisible by " + std::to_string(k));
        c[w] = mulmod(x / pv, uinv, nmod);
      }
    }
    e.push_back(s);
    prec.push_back(npr);
    out.push_back(FredholmCoeff{s, npr});
  }
  return out;
}

namespace {

struct Plan {
  mpq_class B;
  i64 cutoff;
  unsigned Nw;
};

Plan plan_for(const LaurentPolyFq& f, unsigned upto, const mpq_class& target, const DworkOptions& opts) {
  const unsigned D = f.delta().D();
  Plan pl;
  pl.B = opts.deg_bound ? *opts.deg_bound : mpq_class(target + 1) / static_cast<unsigned long>(f.p() - 1);
  pl.B.canonicalize();
  const mpq_class cut = opts.pi_cutoff ? *opts.pi_cutoff : target;
  pl.cutoff = floor_q(cut * D).get_si();
  if (opts.prec_p < 1) throw PreconditionError("p-adic precision must be >= 1");
  pl.Nw = opts.prec_p + vp_factorial(upto, f.p());
  return pl;
}

}  // namespace

FredholmRun dwork_fredholm(const LaurentPolyFq& f, unsigned upto, const mpq_class& target, const DworkOptions& opts) {
  Plan pl = plan_for(f, upto, target, opts);
  DworkMatrix M = psi_matrix(f, pl.B, pl.Nw, pl.cutoff);
  auto coeffs = fredholm_coeffs(M, upto);
  return FredholmRun{std::move(M), std::move(coeffs)};
}

bool fredholm_stable(const LaurentPolyFq& f, unsigned upto, const mpq_class& target, const DworkOptions& opts) {
  Plan pl = plan_for(f, upto, target, opts);
  DworkOptions wider = opts;
  wider.deg_bound = pl.B + 1;
  FredholmRun a = dwork_fredholm(f, upto, target, opts);
  FredholmRun b = dwork_fredholm(f, upto, target, wider);
  const unsigned D = f.delta().D();
  const mpq_class limit = std::min(a.matrix.exact_below, b.matrix.exact_below);
  for (unsigned k = 0; k < upto; ++k) {
    const u64 mod = ipow_checked(f.p(), std::min(a.coeffs[k].precision, b.coeffs[k].precision));
    for (i64 j = 0; j <= pl.cutoff && mpq_class(j, D) < limit; ++j) {
      const u64* x = a.coeffs[k].value.raw(j);
      const u64* y = b.coeffs[k].value.raw(j);
      for (unsigned w = 0; w < f.a(); ++w)
        if (x[w] % mod != y[w] % mod) return false;
    }
  }
  return true;
}

TraceFormulaReport verify_trace_formula(const LaurentPolyFq& f, unsigned k, unsigned N, std::size_t M, u64 budget) {
  if (M < 1) throw PreconditionError("T-truncation must be >= 1");
  const u64 p = f.p();
  const unsigned D = f.delta().D();
  const mpq_class target(static_cast<unsigned long>(M - 1));
  mpq_class B = (target + 1) / static_cast<unsigned long>(p - 1);
  B.canonicalize();
  DworkMatrix Mx = psi_matrix(f, B, N, static_cast<i64>(D) * static_cast<i64>(M - 1));
  if (!(target < Mx.exact_below)) throw PrecisionError("basis bound too small for the requested T-order");
  PiSeries tr = matrix_power_trace(Mx, k);
  TraceFormulaReport rep{k, N, M, tr.fractional_part_vanishes(), TSeries(p, N, M), TSeries(p, N, M), TSeries(p, N, M)};
  TSeries t(p, N, M);
  for (std::size_t n = 0; n < M; ++n) {
    GRElem c = tr.coeff(static_cast<i64>(D * n));
    for (std::size_t w = 1; w < c.coeffs().size(); ++w)
      if (c.coeffs()[w]) throw PropertyViolation("trace coefficient does not lie in Z_p");
    t[n] = c.coeffs()[0];
  }
  rep.matrix_side = compose(t, pi_of_T(p, M, N));
  const u64 pN = ipow_checked(p, N);
  const u64 qk1 = submod(powmod(f.q() % pN, k, pN), 1, pN);
  rep.sum_side = sum_S_Tseries(f, k, N, M, budget).scaled(invmod(qk1, pN));
  rep.residual = rep.matrix_side - rep.sum_side;
  return rep;
}

MinorReport minor_leading(const LaurentPolyFq& f, unsigned m, unsigned N) {
  const Polytope1D& delta = f.delta();
  const u64 p = f.p();
  const unsigned D = delta.D();
  SlopeSet S = slope_set(delta, p, m);
  if (!S.turning) throw PreconditionError(std::to_string(m) + " is not a turning point of p_Delta");
  if (S.members.size() > 8) throw PreconditionError("minor too large");
  const i64 t = arithmetic_polygon(delta, p, m).value(m).get_num().get_si();
  auto gamma = ef_gamma(f, t, N);
  RingPtr R = GaloisRing::create(p, N, f.a());
  const i64 C = static_cast<i64>(D) * t;
  const std::size_t n = S.members.size();
  std::vector<std::optional<PiSeries>> G(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = gamma.find(static_cast<i64>(p) * S.members[i] - S.members[j]);
      if (it != gamma.end()) G[i * n + j] = it->second;
    }
  PiSeries det(R, D, C);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const GRElem minus_one = GRElem::constant(R, R->pN() - 1);
  do {
    PiSeries term(R, D, C);
    term.set(0, GRElem::constant(R, 1));
    bool zero = false;
    for (std::size_t i = 0; i < n && !zero; ++i) {
      const auto& g = G[i * n + perm[i]];
      if (!g) {
        zero = true;
        break;
      }
      term = term * *g;
    }
    if (zero) continue;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    det += sign > 0 ? term : term.scaled(minus_one);
  } while (std::next_permutation(perm.begin(), perm.end()));
  MinorReport rep{m, t, std::nullopt, std::nullopt, false, det.coeff(C).reduce()};
  if (auto o = det.order()) rep.order = mpq_class(*o, D);
  if (auto o = det.unit_order()) rep.unit_order = mpq_class(*o, D);
  if (rep.order) rep.order->canonicalize();
  if (rep.unit_order) rep.unit_order->canonicalize();
  rep.order_ok = !rep.order || *rep.order >= t;
  return rep;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::kGranted:
      return "granted";
    case CertStatus::kDenied:
      return "denied";
    case CertStatus::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Certificate certify_all_m(const LaurentPolyFq& f, const DworkOptions& opts) {
  const Polytope1D& delta = f.delta();
  const u64 p = f.p();
  const unsigned D = delta.D();
  Certificate cert;
  cert.hypothesis_violated = !(p > 3 * static_cast<u64>(D));
  auto tps = hasse_turning_points(delta, p);
  if (tps.empty()) {
    cert.status = CertStatus::kGranted;
    return cert;
  }
  ConvexPolygon pd = arithmetic_polygon(delta, p, delta.volume());
  const unsigned upto = tps.back();
  const mpq_class a(f.a());
  FredholmRun run = dwork_fredholm(f, upto, a * pd.value(upto), opts);
  bool all_granted = true, any_denied = false;
  for (unsigned m : tps) {
    CertificateEntry e;
    e.m = m;
    e.target = a * pd.value(m);
    const FredholmCoeff& c = run.coeffs[m - 1];
    e.precision = c.precision;
    const i64 tnum = floor_q(e.target * D).get_si();
    const bool reachable = tnum <= run.matrix.cutoff && e.target < run.matrix.exact_below;
    const u64 mod = ipow_checked(p, c.precision);
    const i64 last = std::min<i64>(run.matrix.cutoff, ceil_q(run.matrix.exact_below * D).get_si() - 1);
    for (i64 j = 0; j <= last; ++j) {
      const u64* x = c.value.raw(j);
      bool nz = false, unit = false;
      for (unsigned w = 0; w < f.a(); ++w) {
        nz = nz || x[w] % mod != 0;
        unit = unit || x[w] % p != 0;
      }
      if (nz && !e.order) e.order = mpq_class(j, D);
      if (unit && !e.unit_order) e.unit_order = mpq_class(j, D);
    }
    if (e.order) e.order->canonicalize();
    if (e.unit_order) e.unit_order->canonicalize();
    if (!reachable) {
      e.status = CertStatus::kInconclusive;
    } else {
      e.below_vanishes = !e.order || *e.order >= e.target;
      e.leading_unit = e.unit_order && *e.unit_order == e.target;
      if (!e.below_vanishes && !cert.hypothesis_violated)
        throw PropertyViolation("Fredholm coefficient c_" + std::to_string(m) + " has order below a p_Delta(m)");
      e.status = e.below_vanishes && e.leading_unit ? CertStatus::kGranted : CertStatus::kDenied;
    }
    all_granted = all_granted && e.status == CertStatus::kGranted;
    any_denied = any_denied || e.status == CertStatus::kDenied;
    cert.entries.push_back(e);
  }
  cert.status = all_granted ? CertStatus::kGranted : any_denied ? CertStatus::kDenied : CertStatus::kInconclusive;
  return cert;
}

}  // namespace tadic
