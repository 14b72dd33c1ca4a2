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

#include "tadic/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace tadic {

json rational_json(const mpq_class& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

json to_json(const ConvexPolygon& P) {
  json s = json::array();
  for (const auto& x : P.slopes()) s.push_back(rational_json(x));
  return json{{"slopes", s}};
}

json to_json(const TSeries& S) {
  return json{{"p", S.p()}, {"N", S.precision()}, {"M", S.length()}, {"coeffs", S.digit_strings()}};
}

json to_json(const CyclotomicInt& x) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(v.get_str());
  return json{{"p", x.field().p()}, {"m", x.field().level()}, {"coeffs", c}};
}

json to_json(const HassePolynomial& H) {
  json monos = json::array();
  for (const auto& [e, c] : H.monomials()) {
    json ex = json::object();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) ex[std::to_string(HassePolynomial::variable(i))] = e[i];
    monos.push_back(json{{"coeff", c}, {"exponents", ex}});
  }
  return json{{"m", H.m()}, {"p", H.p()}, {"polynomial", H.to_string()}, {"monomials", monos}};
}

json to_json(const LPolynomial& L) {
  json coeffs = json::array();
  json vals = json::array();
  for (const auto& c : L.coeffs) {
    coeffs.push_back(to_json(c));
    ExtendedRational v = pi_valuation(c);
    vals.push_back(v.is_infinite() ? json("inf") : rational_json(v.value()));
  }
  return json{{"p", L.p}, {"m", L.m}, {"degree", L.degree()}, {"coeffs", coeffs}, {"valuations", vals}};
}

json to_json(const MainReport& r) {
  return json{{"np_L", to_json(r.np_L)},
              {"expected", to_json(r.expected)},
              {"equal", r.equal},
              {"lies_above", r.lies_above},
              {"hasse_nonzero", r.hasse_nonzero},
              {"consistent", r.consistent},
              {"hypothesis_violated", r.hypothesis_violated}};
}

namespace {

json opt_rational(const std::optional<mpq_class>& x) { return x ? rational_json(*x) : json(nullptr); }

}  // namespace

json to_json(const MinorReport& r) {
  return json{{"m", r.m},
              {"expected_order", r.expected_order},
              {"order", opt_rational(r.order)},
              {"unit_order", opt_rational(r.unit_order)},
              {"order_ok", r.order_ok},
              {"leading", r.leading.index()}};
}

json to_json(const Certificate& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back(json{{"m", e.m},
                           {"target", rational_json(e.target)},
                           {"order", opt_rational(e.order)},
                           {"unit_order", opt_rational(e.unit_order)},
                           {"precision", e.precision},
                           {"below_vanishes", e.below_vanishes},
                           {"leading_unit", e.leading_unit},
                           {"status", to_string(e.status)}});
  return json{{"status", to_string(c.status)}, {"hypothesis_violated", c.hypothesis_violated}, {"entries", entries}};
}

json to_json(const TraceFormulaReport& r) {
  return json{{"k", r.k},
              {"N", r.N},
              {"M", r.M},
              {"fractional_vanishes", r.fractional_vanishes},
              {"matrix_side", to_json(r.matrix_side)},
              {"sum_side", to_json(r.sum_side)},
              {"residual_zero", r.residual.is_zero()}};
}

std::string polygon_csv(const ConvexPolygon& P) {
  std::ostringstream os;
  os << "k,slope,value\n";
  for (std::size_t k = 1; k <= P.length(); ++k)
    os << k << "," << to_string(P.slope(k - 1)) << "," << to_string(P.value(k)) << "\n";
  return os.str();
}

std::string polygon_svg(const std::vector<std::pair<std::string, ConvexPolygon>>& polygons) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::size_t len = 1;
  double ymax = 1;
  for (const auto& [name, P] : polygons) {
    len = std::max(len, P.length());
    if (P.length()) ymax = std::max(ymax, P.value(P.length()).get_d());
  }
  const double W = 480, H = 360, pad = 40;
  auto X = [&](double k) { return pad + (W - 2 * pad) * k / static_cast<double>(len); };
  auto Y = [&](double v) { return H - pad - (H - 2 * pad) * v / ymax; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(static_cast<double>(len)) << "\" y2=\"" << Y(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(ymax)
     << "\" stroke=\"black\"/>\n";
  for (std::size_t n = 0; n < polygons.size(); ++n) {
    const auto& [name, P] = polygons[n];
    const char* col = colors[n % 5];
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"";
    for (std::size_t k = 0; k <= P.length(); ++k) os << X(static_cast<double>(k)) << "," << Y(P.value(k).get_d()) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << pad + 4 << "\" y=\"" << pad + 14 * static_cast<double>(n) << "\" fill=\"" << col
       << "\" font-size=\"12\">" << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tadic
