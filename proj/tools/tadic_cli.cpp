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

// Command-line front end: polygon, hasse, lfun, dwork, sweep, verify.
//
// Exit codes: 0 success, 1 property violation, 2 budget refusal,
// 3 precondition or usage error. Errors are reported on stderr as JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tadic/acceptance.hpp"
#include "tadic/census.hpp"
#include "tadic/dwork.hpp"
#include "tadic/exp_sums.hpp"
#include "tadic/hasse.hpp"
#include "tadic/polygons.hpp"
#include "tadic/serialize.hpp"

namespace {

using tadic::json;
using tadic::u64;

struct Job {
  u64 p = 5;
  unsigned a = 1;
  unsigned m = 1;
  std::string delta = "0..1";
  std::string coeffs;
  std::size_t len = 0;
  u64 budget = tadic::kDefaultBudget;
  std::string format = "json";
  std::string output;
  unsigned workers = 1;
  // dwork
  std::string deg_bound;
  unsigned prec_p = 2;
  std::string pi_cutoff;
  unsigned upto_m = 0;
  // sweep
  std::string fixed;
  std::vector<long> free;
  u64 sample = 0;
  u64 seed = 0;
  // verify
  std::vector<int> criteria;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// "a(-1)=1,a(1)=3:1" -> exponent -> element index. A value is an element
// index, or colon-separated base-p digits with the constant digit first.
std::map<long, u64> parse_coeffs(const std::string& text, u64 p) {
  std::map<long, u64> out;
  for (const auto& item : split(text, ',')) {
    const auto lp = item.find('('), rp = item.find(')'), eq = item.find('=');
    if (item.empty() || item[0] != 'a' || lp != 1 || rp == std::string::npos || eq != rp + 1)
      throw tadic::PreconditionError("cannot parse coefficient '" + item + "', expected a(u)=v");
    const long u = std::stol(item.substr(lp + 1, rp - lp - 1));
    const std::string v = item.substr(eq + 1);
    u64 idx = 0;
    if (v.find(':') != std::string::npos) {
      auto digits = split(v, ':');
      for (std::size_t i = digits.size(); i-- > 0;) {
        const u64 dgt = std::stoull(digits[i]);
        if (dgt >= p) throw tadic::PreconditionError("digit " + digits[i] + " is not below p");
        idx = idx * p + dgt;
      }
    } else {
      idx = std::stoull(v);
    }
    if (out.count(u)) throw tadic::PreconditionError("coefficient a(" + std::to_string(u) + ") given twice");
    out[u] = idx;
  }
  return out;
}

tadic::LaurentPolyFq make_f(const Job& job) {
  if (job.coeffs.empty()) throw tadic::PreconditionError("--coeffs is required");
  tadic::Polytope1D delta = tadic::Polytope1D::parse(job.delta);
  tadic::FieldPtr F = tadic::FiniteField::create(job.p, job.a);
  std::map<tadic::i64, tadic::FieldElem> c;
  for (const auto& [u, v] : parse_coeffs(job.coeffs, job.p)) {
    if (v >= F->order()) throw tadic::PreconditionError("element index " + std::to_string(v) + " is not below q");
    c.emplace(u, tadic::FieldElem::from_index(F, v));
  }
  return tadic::LaurentPolyFq(delta, F, std::move(c));
}

std::optional<mpq_class> opt_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return tadic::parse_rational(s);
}

void warn_hypothesis(const tadic::Polytope1D& delta, u64 p) {
  if (!(p > 3 * static_cast<u64>(delta.D())))
    std::cerr << json{{"warning", "hypothesis_violated"},
                      {"message", "p <= 3D; the polygon bound is not guaranteed"},
                      {"p", p},
                      {"D", delta.D()}}
                     .dump()
              << "\n";
}

void emit(const Job& job, const std::string& text) {
  if (job.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(job.output);
  if (!out) throw tadic::PreconditionError("cannot write " + job.output);
  out << text;
}

void check_format(const Job& job, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (job.format == f) return;
  throw tadic::PreconditionError("format '" + job.format + "' is not available for this command");
}

int cmd_polygon(const Job& job) {
  check_format(job, {"json", "csv", "svg"});
  tadic::Polytope1D delta = tadic::Polytope1D::parse(job.delta);
  if (!tadic::is_prime(job.p)) throw tadic::PreconditionError("p must be prime");
  const std::size_t len = job.len ? job.len : 3 * delta.volume();
  tadic::ConvexPolygon P = tadic::arithmetic_polygon(delta, job.p, len);
  tadic::ConvexPolygon H = tadic::hodge_polygon(delta, len).scaled(mpq_class(static_cast<unsigned long>(job.p - 1)));
  if (job.format == "csv") {
    emit(job, tadic::polygon_csv(P));
  } else if (job.format == "svg") {
    emit(job, tadic::polygon_svg({{"p_Delta", P}, {"(p-1) H", H}}));
  } else {
    auto cmp = tadic::polygon_compare(P, H, len);
    json tp = json::array();
    for (auto k : tadic::turning_points(P)) tp.push_back(k);
    emit(job, json{{"delta", delta.to_string()},
                   {"p", job.p},
                   {"length", len},
                   {"arithmetic", tadic::to_json(P)},
                   {"hodge_scaled", tadic::to_json(H)},
                   {"turning_points", tp},
                   {"lies_above", cmp.lies_above},
                   {"first_divergence", cmp.first_divergence ? json(*cmp.first_divergence) : json(nullptr)}}
                  .dump(2));
  }
  return 0;
}

int cmd_hasse(const Job& job) {
  check_format(job, {"json", "text"});
  tadic::Polytope1D delta = tadic::Polytope1D::parse(job.delta);
  if (!tadic::is_prime(job.p)) throw tadic::PreconditionError("p must be prime");
  warn_hypothesis(delta, job.p);
  std::optional<tadic::LaurentPolyFq> f;
  if (!job.coeffs.empty()) f = make_f(job);
  json polys = json::array();
  std::string text;
  for (unsigned m : tadic::hasse_turning_points(delta, job.p)) {
    tadic::HassePolynomial H = tadic::hasse_m(delta, job.p, m);
    json entry = tadic::to_json(H);
    text += "m=" + std::to_string(m) + ": " + H.to_string();
    if (f) {
      tadic::FieldElem v = H.evaluate(*f);
      entry["value"] = v.index();
      text += "  [value " + std::to_string(v.index()) + "]";
    }
    text += "\n";
    polys.push_back(entry);
  }
  json out{{"delta", delta.to_string()}, {"p", job.p}, {"hasse", polys}};
  if (f) {
    auto ev = tadic::hasse_product_eval(delta, job.p, *f);
    out["product"] = ev.value.index();
    out["nonzero"] = ev.nonzero;
    text += std::string("H(a) = ") + std::to_string(ev.value.index()) + (ev.nonzero ? " (generic)" : " (non-generic)") +
            "\n";
  }
  emit(job, job.format == "text" ? text : out.dump(2));
  return 0;
}

int cmd_lfun(const Job& job) {
  check_format(job, {"json", "csv", "svg"});
  tadic::LaurentPolyFq f = make_f(job);
  warn_hypothesis(f.delta(), f.p());
  tadic::LPolynomial L = tadic::l_function(f, job.m, job.budget);
  tadic::MainReport r = tadic::main_report(f, L);
  if (job.format == "csv") {
    std::string csv = "n,valuation,coefficient\n";
    auto vals = tadic::l_valuations(L);
    for (std::size_t n = 0; n < L.coeffs.size(); ++n)
      csv += std::to_string(n) + "," + vals[n].to_string() + ",\"" + L.coeffs[n].to_string() + "\"\n";
    emit(job, csv);
  } else if (job.format == "svg") {
    tadic::ConvexPolygon H = tadic::hodge_polygon(f.delta(), L.degree())
                                 .scaled(mpq_class(static_cast<unsigned long>((f.p() - 1) * f.a())));
    emit(job, tadic::polygon_svg({{"a p_Delta", r.expected}, {"(p-1) a H", H}, {"NP(L)", r.np_L}}));
  } else {
    json out{{"inputs",
              {{"p", f.p()}, {"a", f.a()}, {"m", job.m}, {"delta", f.delta().to_string()}, {"coeffs", f.to_string()}}},
             {"L", tadic::to_json(L)},
             {"report", tadic::to_json(r)}};
    emit(job, out.dump(2));
  }
  if (!r.hypothesis_violated && (!r.lies_above || !r.consistent)) return 1;
  return 0;
}

int cmd_dwork(const Job& job) {
  check_format(job, {"json"});
  tadic::LaurentPolyFq f = make_f(job);
  warn_hypothesis(f.delta(), f.p());
  tadic::DworkOptions opts;
  opts.deg_bound = opt_rational(job.deg_bound);
  opts.pi_cutoff = opt_rational(job.pi_cutoff);
  opts.prec_p = job.prec_p;
  const tadic::Polytope1D& delta = f.delta();
  auto tps = tadic::hasse_turning_points(delta, f.p());
  const unsigned upto = job.upto_m ? job.upto_m : std::max(1u, tps.empty() ? 1u : tps.back());
  tadic::ConvexPolygon pd = tadic::arithmetic_polygon(delta, f.p(), upto);
  const mpq_class target = mpq_class(f.a()) * pd.value(upto);
  tadic::FredholmRun run = tadic::dwork_fredholm(f, upto, target, opts);
  json coeffs = json::array();
  for (unsigned k = 1; k <= upto; ++k) {
    const auto& c = run.coeffs[k - 1];
    auto o = c.value.order(), u = c.value.unit_order();
    auto as_q = [&](std::optional<tadic::i64> x) {
      if (!x) return json(nullptr);
      mpq_class q(*x, delta.D());
      q.canonicalize();
      return tadic::rational_json(q);
    };
    coeffs.push_back(json{{"k", k},
                          {"order", as_q(o)},
                          {"unit_order", as_q(u)},
                          {"bound", tadic::rational_json(mpq_class(f.a()) * pd.value(k))},
                          {"p_precision", c.precision}});
  }
  json out{{"inputs",
            {{"p", f.p()}, {"a", f.a()}, {"delta", delta.to_string()}, {"coeffs", f.to_string()}}},
           {"basis_size", run.matrix.size()},
           {"exact_below", tadic::rational_json(run.matrix.exact_below)},
           {"fredholm", coeffs},
           {"certificate", tadic::to_json(tadic::certify_all_m(f, opts))}};
  if (f.a() == 1) {
    json minors = json::array();
    for (unsigned m : tps) minors.push_back(tadic::to_json(tadic::minor_leading(f, m, job.prec_p)));
    out["minors"] = minors;
  }
  try {
    out["trace_formula"] = tadic::to_json(tadic::verify_trace_formula(f, 1, job.prec_p, 4, job.budget));
  } catch (const tadic::BudgetError& e) {
    out["trace_formula"] = json{{"skipped", e.what()}};
  }
  emit(job, out.dump(2));
  return 0;
}

int cmd_sweep(const Job& job) {
  check_format(job, {"json", "csv"});
  tadic::SweepSpec spec;
  spec.delta = tadic::Polytope1D::parse(job.delta);
  spec.p = job.p;
  spec.a = job.a;
  spec.m = job.m;
  for (const auto& [u, v] : parse_coeffs(job.fixed, job.p)) spec.fixed[u] = v;
  for (long u : job.free) spec.free.push_back(u);
  if (job.sample) spec.sample = job.sample;
  spec.seed = job.seed;
  spec.workers = job.workers;
  spec.budget = job.budget;
  warn_hypothesis(spec.delta, spec.p);
  tadic::SweepResult res = tadic::run_sweep(spec);
  if (job.format == "csv") {
    std::string csv = "coeffs,hasse_value,hasse_nonzero,np,equal\n";
    for (const auto& r : res.rows) {
      std::string np;
      for (const auto& s : r.np.slopes()) np += (np.empty() ? "" : " ") + tadic::to_string(s);
      csv += "\"" + r.coeffs + "\"," + std::to_string(r.hasse_value) + "," + (r.hasse_nonzero ? "1" : "0") + "," +
             np + "," + (r.equal ? "1" : "0") + "\n";
    }
    emit(job, csv);
  } else {
    json rows = json::array();
    for (const auto& r : res.rows)
      rows.push_back(json{{"coeffs", r.coeffs},
                          {"hasse_value", r.hasse_value},
                          {"hasse_nonzero", r.hasse_nonzero},
                          {"np", tadic::to_json(r.np)},
                          {"equal", r.equal}});
    emit(job, json{{"rows", rows},
                   {"summary",
                    {{"count", res.rows.size()},
                     {"generic", res.generic},
                     {"non_generic", res.non_generic},
                     {"non_generic_f", res.non_generic_f},
                     {"iff_holds", res.iff_holds},
                     {"hypothesis_violated", res.hypothesis_violated}}}}
                  .dump(2));
  }
  return (!res.hypothesis_violated && !res.iff_holds) ? 1 : 0;
}

int cmd_verify(const Job& job) {
  tadic::AcceptanceOptions opts;
  opts.budget = job.budget;
  opts.workers = job.workers;
  std::vector<int> ids = job.criteria;
  if (ids.empty())
    for (int id = 1; id <= tadic::kCriterionCount; ++id) ids.push_back(id);
  bool failed = false;
  std::string text;
  for (int id : ids) {
    auto r = tadic::run_criterion(id, opts);
    std::cout << tadic::format_result(r) << std::endl;
    failed = failed || r.verdict == tadic::Verdict::kFail;
  }
  return failed ? 1 : 0;
}

int error_exit(const std::string& kind, const std::string& message, json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  std::cerr << extra.dump() << "\n";
  if (kind == "property_violation") return 1;
  if (kind == "budget") return 2;
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"T-adic exponential sums: polygons, Hasse polynomials, L-functions, Dwork operators"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file ([command] sections)");
  Job job;

  auto field_opts = [&](CLI::App* sub, bool with_coeffs) {
    sub->add_option("--p", job.p, "Prime p")->required();
    sub->add_option("--delta", job.delta, "Interval -e..d, e.g. 0..3 or -1..1")->required();
    if (with_coeffs) {
      sub->add_option("--a", job.a, "q = p^a");
      sub->add_option("--coeffs", job.coeffs, "Coefficients a(u)=v, v an element index or digits c0:c1:...");
    }
    sub->add_option("--format", job.format, "Output format");
    sub->add_option("--output", job.output, "Write the result to this file");
    sub->add_option("--budget", job.budget, "Point-evaluation budget")->envname("TADIC_BUDGET");
  };

  auto* polygon = app.add_subcommand("polygon", "Arithmetic and Hodge polygons");
  field_opts(polygon, false);
  polygon->add_option("--len", job.len, "Number of slopes (default 3 Vol)");

  auto* hasse = app.add_subcommand("hasse", "Hasse polynomials at the turning points");
  field_opts(hasse, true);
  job.format = "json";

  auto* lfun = app.add_subcommand("lfun", "Brute-force L-function and its Newton polygon");
  field_opts(lfun, true);
  lfun->add_option("--m", job.m, "Level m of pi_m");

  auto* dwork = app.add_subcommand("dwork", "Dwork operator, Fredholm coefficients, certificates");
  field_opts(dwork, true);
  dwork->add_option("--deg-bound", job.deg_bound, "Basis bound B (rational)");
  dwork->add_option("--prec-p", job.prec_p, "p-adic digits of the results");
  dwork->add_option("--pi-cutoff", job.pi_cutoff, "Largest pi-order kept (rational)");
  dwork->add_option("--upto-m", job.upto_m, "Fredholm coefficients c_1 .. c_m");

  auto* sweep = app.add_subcommand("sweep", "Genericity census over coefficient tuples");
  sweep->add_option("--p", job.p, "Prime p")->required();
  sweep->add_option("--delta", job.delta, "Interval -e..d")->required();
  sweep->add_option("--a", job.a, "q = p^a");
  sweep->add_option("--m", job.m, "Level m of pi_m");
  sweep->add_option("--fixed", job.fixed, "Fixed coefficients a(u)=v");
  sweep->add_option("--free", job.free, "Exponents to sweep (default: all nonzero, unfixed)")->delimiter(',');
  sweep->add_option("--sample", job.sample, "Draw this many tuples");
  sweep->add_option("--seed", job.seed, "Seed for --sample");
  sweep->add_option("--workers", job.workers, "Worker threads");
  sweep->add_option("--format", job.format, "json or csv");
  sweep->add_option("--output", job.output, "Write the result to this file");
  sweep->add_option("--budget", job.budget, "Point-evaluation budget")->envname("TADIC_BUDGET");

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criterion", job.criteria, "Run only these criteria");
  verify->add_option("--workers", job.workers, "Worker threads");
  verify->add_option("--budget", job.budget, "Point-evaluation budget")->envname("TADIC_BUDGET");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit("precondition", e.what());
  }
  if (hasse->parsed() && hasse->count("--format") == 0) job.format = "text";

  try {
    if (polygon->parsed()) return cmd_polygon(job);
    if (hasse->parsed()) return cmd_hasse(job);
    if (lfun->parsed()) return cmd_lfun(job);
    if (dwork->parsed()) return cmd_dwork(job);
    if (sweep->parsed()) return cmd_sweep(job);
    if (verify->parsed()) return cmd_verify(job);
  } catch (const tadic::BudgetError& e) {
    return error_exit("budget", e.what(), json{{"required", e.required()}, {"budget", e.budget()}});
  } catch (const tadic::Error& e) {
    return error_exit(e.kind(), e.what());
  } catch (const std::exception& e) {
    return error_exit("precondition", e.what());
  }
  return 3;
}
