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

#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smpoly/instance.hpp"
#include "smpoly/rational.hpp"

namespace smpoly {

enum class Relation { LessEqual, GreaterEqual };

enum class RowKind { Degree, NonNegative, Stability };

struct RowTag {
  RowKind kind = RowKind::Degree;
  NodeId node;  // Degree rows
  EdgeId edge;  // NonNegative and Stability rows
};

struct Constraint {
  /// Sparse coefficients (column, value), sorted by column, no zeros.
  std::vector<std::pair<std::size_t, Rational>> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
  RowTag tag;
  /// A degree row of an isolated node: no coefficients, always satisfied.
  bool vacuous = false;

  Rational evaluate(std::span<const Rational> x) const;
  bool satisfied_by(std::span<const Rational> x) const;
  bool tight_at(std::span<const Rational> x) const;
  std::vector<Rational> dense(std::size_t dimension) const;
};

/// A point of R^E, indexed by edge column.
struct Point {
  std::vector<Rational> coords;

  std::size_t dimension() const { return coords.size(); }
  bool is_integral_01() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& x, const Point& y) { return x.coords <=> y.coords; }
};

Point incidence_point(const std::vector<int>& chi);

/// Linear inequality system over the edge variables of an instance.
class ConstraintSystem {
 public:
  ConstraintSystem() = default;
  ConstraintSystem(std::vector<EdgeId> columns, std::vector<Constraint> rows);

  const std::vector<EdgeId>& columns() const { return columns_; }
  const std::vector<Constraint>& rows() const { return rows_; }
  std::size_t dimension() const { return columns_.size(); }
  std::optional<std::size_t> column_of(EdgeId e) const;

  std::size_t count(RowKind kind) const;

 private:
  std::vector<EdgeId> columns_;
  std::vector<Constraint> rows_;
};

/// The relaxation of the stable matching polytope in R^E:
///   x(δ(v)) <= 1 for every node v            (degree rows, by NodeId)
///   x_e >= 0 for every edge e                 (nonneg rows, by EdgeId)
///   x(δ^{>a}(b)) + x(δ^{>b}(a)) + x_ab >= 1   (stability rows, by EdgeId)
ConstraintSystem build_q(const Instance& inst);

struct Membership {
  bool inside = true;
  std::vector<std::size_t> violated;  // row indices
};

/// Exact evaluation of every row. Throws std::invalid_argument on a
/// dimension mismatch.
Membership contains(const ConstraintSystem& system, const Point& p);

/// Indices of the rows holding with equality at `p`.
std::vector<std::size_t> tight_rows(const ConstraintSystem& system, const Point& p);

std::string describe(const Instance& inst, const RowTag& tag);

/// Plain-text export, one row per line: dense coefficients, relation, rhs,
/// followed by a "# tag" comment. A header comment names the columns.
void write_lp_text(std::ostream& os, const Instance& inst, const ConstraintSystem& system);

}  // namespace smpoly
