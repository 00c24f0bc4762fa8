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

#include "smpoly/constraint_system.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace smpoly {

Rational Constraint::evaluate(std::span<const Rational> x) const {
  Rational acc;
  for (const auto& [col, coeff] : coefficients) acc += coeff * x[col];
  return acc;
}

bool Constraint::satisfied_by(std::span<const Rational> x) const {
  const Rational lhs = evaluate(x);
  return relation == Relation::LessEqual ? lhs <= rhs : lhs >= rhs;
}

bool Constraint::tight_at(std::span<const Rational> x) const { return evaluate(x) == rhs; }

std::vector<Rational> Constraint::dense(std::size_t dimension) const {
  std::vector<Rational> out(dimension);
  for (const auto& [col, coeff] : coefficients) out[col] = coeff;
  return out;
}

bool Point::is_integral_01() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& r) { return r == Rational(0) || r == Rational(1); });
}

Point incidence_point(const std::vector<int>& chi) {
  Point p;
  p.coords.reserve(chi.size());
  for (int v : chi) p.coords.emplace_back(v);
  return p;
}

ConstraintSystem::ConstraintSystem(std::vector<EdgeId> columns, std::vector<Constraint> rows)
    : columns_(std::move(columns)), rows_(std::move(rows)) {}

std::optional<std::size_t> ConstraintSystem::column_of(EdgeId e) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), e);
  if (it == columns_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - columns_.begin());
}

std::size_t ConstraintSystem::count(RowKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [kind](const Constraint& c) { return c.tag.kind == kind; }));
}

ConstraintSystem build_q(const Instance& inst) {
  const auto& edges = inst.edges();
  auto col = [&](EdgeId e) { return *inst.edge_index(e); };
  std::vector<Constraint> rows;

  for (const NodeId v : inst.nodes()) {
    Constraint c;
    for (const EdgeId& e : inst.incident_edges(v)) c.coefficients.emplace_back(col(e), 1);
    std::sort(c.coefficients.begin(), c.coefficients.end());
    c.relation = Relation::LessEqual;
    c.rhs = 1;
    c.tag = {RowKind::Degree, v, {}};
    c.vacuous = c.coefficients.empty();
    rows.push_back(std::move(c));
  }
  for (const EdgeId& e : edges) {
    Constraint c;
    c.coefficients.emplace_back(col(e), 1);
    c.relation = Relation::GreaterEqual;
    c.rhs = 0;
    c.tag = {RowKind::NonNegative, {}, e};
    rows.push_back(std::move(c));
  }
  for (const EdgeId& e : edges) {
    const NodeId a = e.a_node();
    const NodeId b = e.b_node();
    std::vector<EdgeId> support = inst.better_edges(a, b);  // at b, better than a
    const auto at_a = inst.better_edges(b, a);              // at a, better than b
    support.insert(support.end(), at_a.begin(), at_a.end());
    support.push_back(e);
    Constraint c;
    for (const EdgeId& f : support) c.coefficients.emplace_back(col(f), 1);
    std::sort(c.coefficients.begin(), c.coefficients.end());
    c.relation = Relation::GreaterEqual;
    c.rhs = 1;
    c.tag = {RowKind::Stability, {}, e};
    rows.push_back(std::move(c));
  }
  return ConstraintSystem(edges, std::move(rows));
}

Membership contains(const ConstraintSystem& system, const Point& p) {
  if (p.dimension() != system.dimension()) {
    throw std::invalid_argument("point has dimension " + std::to_string(p.dimension()) + ", system has " +
                                std::to_string(system.dimension()));
  }
  Membership out;
  for (std::size_t i = 0; i < system.rows().size(); ++i) {
    if (!system.rows()[i].satisfied_by(p.coords)) {
      out.inside = false;
      out.violated.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> tight_rows(const ConstraintSystem& system, const Point& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.rows().size(); ++i) {
    if (system.rows()[i].tight_at(p.coords)) out.push_back(i);
  }
  return out;
}

std::string describe(const Instance& inst, const RowTag& tag) {
  switch (tag.kind) {
    case RowKind::Degree: return "degree(" + inst.name(tag.node) + ")";
    case RowKind::NonNegative: return "nonneg(" + inst.edge_name(tag.edge) + ")";
    case RowKind::Stability: return "stability(" + inst.edge_name(tag.edge) + ")";
  }
  return "?";
}

void write_lp_text(std::ostream& os, const Instance& inst, const ConstraintSystem& system) {
  os << "# columns:";
  for (const EdgeId& e : system.columns()) os << ' ' << inst.edge_name(e);
  os << '\n';
  for (const Constraint& row : system.rows()) {
    const auto dense = row.dense(system.dimension());
    for (const auto& v : dense) os << v << ' ';
    os << (row.relation == Relation::LessEqual ? "<=" : ">=") << ' ' << row.rhs << " # "
       << describe(inst, row.tag) << (row.vacuous ? " vacuous" : "") << '\n';
  }
}

}  // namespace smpoly
