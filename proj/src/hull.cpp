// Copyright 2026 The smpoly Authors
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

#include "smpoly/hull.hpp"

#include <algorithm>
#include <stdexcept>

#include "smpoly/simplex.hpp"

namespace smpoly {

Rational ConvexDecomposition::weight_of(const Matching& m) const {
  auto it = std::find(matchings.begin(), matchings.end(), m);
  return it == matchings.end() ? Rational() : weights[static_cast<std::size_t>(it - matchings.begin())];
}

Point incidence_point(const Instance& inst, const Matching& m) { return incidence_point(m.incidence(inst)); }

namespace {

// Rows: one per edge coordinate, then Σλ = 1. Columns: the candidates.
StandardFormLp mixture_lp(const Instance& inst, const std::vector<Matching>& candidates, const Point& p) {
  if (p.dimension() != inst.edge_count()) throw std::invalid_argument("point has wrong dimension");
  StandardFormLp lp;
  const std::size_t k = candidates.size();
  lp.a.assign(inst.edge_count() + 1, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const auto chi = candidates[j].incidence(inst);
    for (std::size_t e = 0; e < chi.size(); ++e) lp.a[e][j] = chi[e];
    lp.a.back()[j] = 1;
  }
  lp.b = p.coords;
  lp.b.push_back(1);
  lp.c.assign(k, Rational());
  return lp;
}

}  // namespace

std::optional<ConvexDecomposition> convex_decompose(const Instance& inst, const Point& p,
                                                    const std::set<Matching>& forbidden, std::size_t max_edges) {
  const auto stable = enumerate_stable(inst, max_edges);
  std::vector<Matching> allowed;
  for (const auto& m : stable) {
    if (!forbidden.contains(m)) allowed.push_back(m);
  }
  const auto sol = solve_standard_form(mixture_lp(inst, allowed, p));
  if (sol.status != LpStatus::Optimal) return std::nullopt;

  ConvexDecomposition out;
  out.matchings = stable;
  out.weights.assign(stable.size(), Rational());
  for (std::size_t j = 0; j < allowed.size(); ++j) {
    const auto pos = std::find(stable.begin(), stable.end(), allowed[j]) - stable.begin();
    out.weights[static_cast<std::size_t>(pos)] = sol.x[j];
  }
  return out;
}

std::optional<Rational> max_weight_on(const Instance& inst, const std::vector<Matching>& stable, const Point& p,
                                      const Matching& target) {
  auto lp = mixture_lp(inst, stable, p);
  const auto pos = std::find(stable.begin(), stable.end(), target) - stable.begin();
  if (static_cast<std::size_t>(pos) == stable.size()) throw std::invalid_argument("target is not a candidate");
  lp.c[static_cast<std::size_t>(pos)] = -1;
  const auto sol = solve_standard_form(lp);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  if (sol.status != LpStatus::Optimal) throw std::logic_error("mixture weights are bounded by 1");
  return -sol.value;
}

std::vector<std::optional<Matching>> matchings_of(const Instance& inst, const ConstraintSystem& system,
                                                  const VertexReport& report) {
  std::vector<std::optional<Matching>> out;
  for (const auto& v : report.vertices) {
    if (!v.integral) {
      out.emplace_back();
      continue;
    }
    std::vector<EdgeId> support;
    for (std::size_t j = 0; j < v.point.dimension(); ++j) {
      if (v.point.coords[j] == Rational(1)) support.push_back(system.columns()[j]);
    }
    try {
      Matching m = Matching::from_edges(inst, std::move(support));
      if (is_stable(inst, m)) {
        out.emplace_back(std::move(m));
      } else {
        out.emplace_back();
      }
    } catch (const InvalidMatching&) {
      out.emplace_back();
    }
  }
  return out;
}

}  // namespace smpoly
