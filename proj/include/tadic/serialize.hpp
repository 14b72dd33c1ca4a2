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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tadic/cyclotomic.hpp"
#include "tadic/dwork.hpp"
#include "tadic/exp_sums.hpp"
#include "tadic/hasse.hpp"
#include "tadic/polygons.hpp"
#include "tadic/series.hpp"

namespace tadic {

using json = nlohmann::json;

/// Integers as JSON numbers, other rationals as "a/b" strings.
json rational_json(const mpq_class& x);

json to_json(const ConvexPolygon& P);
json to_json(const TSeries& S);
json to_json(const CyclotomicInt& x);
json to_json(const HassePolynomial& H);
json to_json(const LPolynomial& L);
json to_json(const MainReport& r);
json to_json(const MinorReport& r);
json to_json(const Certificate& c);
json to_json(const TraceFormulaReport& r);

/// "k,slope,value" rows for k = 1 .. length.
std::string polygon_csv(const ConvexPolygon& P);

/// Overlay of labelled polygons, drawn as their vertices (k, P(k)).
std::string polygon_svg(const std::vector<std::pair<std::string, ConvexPolygon>>& polygons);

}  // namespace tadic
