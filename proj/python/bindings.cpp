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


// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "tadic/acceptance.hpp"
#include "tadic/dwork.hpp"
#include "tadic/errors.hpp"
#include "tadic/exp_sums.hpp"
#include "tadic/hasse.hpp"
#include "tadic/polygons.hpp"
#include "tadic/serialize.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> slopes_of(const tadic::ConvexPolygon& P) {
  std::vector<std::string> out;
  for (const auto& s : P.slopes()) out.push_back(tadic::to_string(s));
  return out;
}

tadic::LaurentPolyFq make_f(tadic::u64 p, unsigned a, const std::string& delta, const std::map<long, tadic::u64>& coeffs) {
  auto F = tadic::FiniteField::create(p, a);
  std::map<tadic::i64, tadic::FieldElem> c;
  for (const auto& [u, v] : coeffs) {
    if (v >= F->order()) throw tadic::PreconditionError("element index " + std::to_string(v) + " is not below q");
    c.emplace(u, tadic::FieldElem::from_index(F, v));
  }
  return tadic::LaurentPolyFq(tadic::Polytope1D::parse(delta), F, std::move(c));
}

std::string lfun_json(tadic::u64 p, unsigned a, const std::string& delta, const std::map<long, tadic::u64>& coeffs,
                      unsigned m, tadic::u64 budget) {
  auto f = make_f(p, a, delta, coeffs);
  tadic::LPolynomial L;
  {
    py::gil_scoped_release release;
    L = tadic::l_function(f, m, budget);
  }
  return tadic::json{{"L", tadic::to_json(L)}, {"report", tadic::to_json(tadic::main_report(f, L))}}.dump();
}

std::string certify_json(tadic::u64 p, unsigned a, const std::string& delta, const std::map<long, tadic::u64>& coeffs,
                         unsigned prec_p) {
  auto f = make_f(p, a, delta, coeffs);
  tadic::DworkOptions opts;
  opts.prec_p = prec_p;
  py::gil_scoped_release release;
  return tadic::to_json(tadic::certify_all_m(f, opts)).dump();
}

py::list verify(const std::vector<int>& criteria, tadic::u64 budget, unsigned workers) {
  tadic::AcceptanceOptions opts;
  opts.budget = budget;
  opts.workers = workers;
  std::vector<int> ids = criteria;
  if (ids.empty())
    for (int id = 1; id <= tadic::kCriterionCount; ++id) ids.push_back(id);
  py::list out;
  for (int id : ids) {
    tadic::CriterionResult r;
    {
      py::gil_scoped_release release;
      r = tadic::run_criterion(id, opts);
    }
    const char* verdict = r.verdict == tadic::Verdict::kPass ? "PASS" : r.verdict == tadic::Verdict::kFail ? "FAIL" : "SKIPPED";
    py::dict d;
    d["id"] = r.id;
    d["name"] = r.name;
    d["verdict"] = verdict;
    d["detail"] = r.detail;
    d["seconds"] = r.seconds;
    d["line"] = tadic::format_result(r);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_tadic, m) {
  m.doc() = "T-adic exponential sums over the one-dimensional torus";

  auto base = py::register_exception<tadic::Error>(m, "TadicError", PyExc_RuntimeError);
  py::register_exception<tadic::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<tadic::BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<tadic::PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<tadic::PropertyViolation>(m, "PropertyViolation", base.ptr());

  m.def(
      "arithmetic_polygon",
      [](const std::string& delta, tadic::u64 p, std::size_t length) {
        return slopes_of(tadic::arithmetic_polygon(tadic::Polytope1D::parse(delta), p, length));
      },
      py::arg("delta"), py::arg("p"), py::arg("length"), "Slopes of the arithmetic polygon as rational strings.");
  m.def(
      "hodge_polygon",
      [](const std::string& delta, std::size_t length) {
        return slopes_of(tadic::hodge_polygon(tadic::Polytope1D::parse(delta), length));
      },
      py::arg("delta"), py::arg("length"), "Slopes of the Hodge polygon as rational strings.");
  m.def(
      "varpi",
      [](const std::string& delta, tadic::u64 p, long a) { return tadic::varpi(tadic::Polytope1D::parse(delta), p, a); },
      py::arg("delta"), py::arg("p"), py::arg("a"));
  m.def(
      "hasse",
      [](const std::string& delta, tadic::u64 p) {
        auto D = tadic::Polytope1D::parse(delta);
        std::vector<std::pair<unsigned, std::string>> out;
        for (unsigned k : tadic::hasse_turning_points(D, p)) out.emplace_back(k, tadic::hasse_m(D, p, k).to_string());
        return out;
      },
      py::arg("delta"), py::arg("p"), "Hasse polynomials at the turning points, as (m, text) pairs.");
  m.def(
      "hasse_value",
      [](tadic::u64 p, unsigned a, const std::string& delta, const std::map<long, tadic::u64>& coeffs) {
        auto f = make_f(p, a, delta, coeffs);
        return tadic::hasse_product_eval(f.delta(), p, f).value.index();
      },
      py::arg("p"), py::arg("a"), py::arg("delta"), py::arg("coeffs"));
  m.def("lfun_json", &lfun_json, py::arg("p"), py::arg("a"), py::arg("delta"), py::arg("coeffs"), py::arg("m") = 1,
        py::arg("budget") = tadic::kDefaultBudget);
  m.def("certify_json", &certify_json, py::arg("p"), py::arg("a"), py::arg("delta"), py::arg("coeffs"),
        py::arg("prec_p") = 2);
  m.def("verify", &verify, py::arg("criteria") = std::vector<int>{}, py::arg("budget") = tadic::kDefaultBudget,
        py::arg("workers") = 1);
}
