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

#include "tadic/census.hpp"

#include <exception>
#include <random>
#include <set>
#include <thread>

#include "tadic/hasse.hpp"

namespace tadic {

namespace {

struct Axis {
  i64 u;
  u64 lo;
  u64 count;
};

std::vector<Axis> axes(const SweepSpec& spec, u64 q) {
  std::vector<i64> free = spec.free;
  if (free.empty())
    for (i64 u = -static_cast<i64>(spec.delta.e()); u <= static_cast<i64>(spec.delta.d()); ++u)
      if (u != 0 && !spec.fixed.count(u)) free.push_back(u);
  std::vector<Axis> out;
  for (i64 u : free) {
    if (spec.fixed.count(u)) throw PreconditionError("exponent " + std::to_string(u) + " is both fixed and swept");
    const bool vertex = (u == static_cast<i64>(spec.delta.d()) && u > 0) ||
                        (u == -static_cast<i64>(spec.delta.e()) && u < 0);
    out.push_back(Axis{u, vertex ? 1u : 0u, vertex ? q - 1 : q});
  }
  return out;
}

}  // namespace

std::vector<LaurentPolyFq> sweep_tuples(const SweepSpec& spec) {
  FieldPtr F = FiniteField::create(spec.p, spec.a);
  const u64 q = F->order();
  auto ax = axes(spec, q);
  u64 total = 1;
  for (const auto& a : ax) {
    if (a.count && total > (u64{1} << 40) / a.count) throw PreconditionError("sweep is too large");
    total *= a.count;
  }
  std::vector<u64> picks;
  if (spec.sample && *spec.sample < total) {
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<u64> dist(0, total - 1);
    std::set<u64> seen;
    while (picks.size() < *spec.sample) {
      u64 r = dist(rng);
      if (seen.insert(r).second) picks.push_back(r);
    }
  } else {
    for (u64 i = 0; i < total; ++i) picks.push_back(i);
  }
  std::vector<LaurentPolyFq> out;
  for (u64 idx : picks) {
    std::map<i64, FieldElem> c;
    for (const auto& [u, v] : spec.fixed) c.emplace(u, FieldElem::from_index(F, v));
    // The last axis varies fastest.
    for (std::size_t k = ax.size(); k-- > 0;) {
      c.emplace(ax[k].u, FieldElem::from_index(F, ax[k].lo + idx % ax[k].count));
      idx /= ax[k].count;
    }
    out.emplace_back(spec.delta, F, std::move(c));
  }
  return out;
}

u64 sweep_cost(const SweepSpec& spec) {
  auto tuples = sweep_tuples(spec);
  if (tuples.empty()) return 0;
  return tuples.size() * l_function_cost(tuples.front(), spec.m);
}

SweepResult run_sweep(const SweepSpec& spec) {
  auto tuples = sweep_tuples(spec);
  SweepResult res;
  res.hypothesis_violated = !(spec.p > 3 * static_cast<u64>(spec.delta.D()));
  if (tuples.empty()) return res;
  const u64 cost = tuples.size() * l_function_cost(tuples.front(), spec.m);
  if (cost > spec.budget)
    throw BudgetError("sweep needs " + std::to_string(cost) + " point evaluations, budget is " +
                          std::to_string(spec.budget),
                      cost, spec.budget);
  std::vector<SweepRow> rows(tuples.size());
  const unsigned workers = std::max(1u, spec.workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < tuples.size(); i += workers) {
        const auto& f = tuples[i];
        MainReport r = verify_main(f, spec.m, spec.budget);
        HasseEvaluation h = hasse_product_eval(spec.delta, spec.p, f);
        rows[i] = SweepRow{f.to_string(), h.value.index(), h.nonzero, r.np_L, r.equal, r.consistent};
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& row : rows) {
    if (row.hasse_nonzero) {
      ++res.generic;
    } else {
      ++res.non_generic;
      res.non_generic_f.push_back(row.coeffs);
    }
    res.iff_holds = res.iff_holds && row.consistent;
  }
  res.rows = std::move(rows);
  return res;
}

}  // namespace tadic
