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

#include "smpoly/simplex.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace smpoly {

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

class Tableau {
 public:
  Tableau(const StandardFormLp& lp) : n_(lp.c.size()) {
    const std::size_t m = lp.b.size();
    width_ = n_ + m + 1;
    rows_.assign(m, std::vector<Rational>(width_));
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = lp.b[i] < Rational(0);
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -lp.a[i][j] : lp.a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][width_ - 1] = flip ? -lp.b[i] : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  // Sets the cost vector and recomputes reduced costs for the current basis.
  void price(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_.assign(width_, Rational());
    for (std::size_t j = 0; j + 1 < width_; ++j) reduced_[j] = cost_[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!rows_[i][j].is_zero()) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland-rule iterations over columns [0, limit). Returns false when
  // unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced_[j] < Rational(0)) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& coeff = rows_[i][*enter];
        if (coeff <= Rational(0)) continue;
        Rational ratio = rows_[i][width_ - 1] / coeff;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    ++pivots_;
    const Rational p = rows_[r][q];
    for (auto& v : rows_[r]) {
      if (!v.is_zero()) v /= p;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[q];
      if (f.is_zero()) return;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(reduced_);
    basis_[r] = q;
  }

  // Objective value of the current basic solution.
  Rational objective() const { return -reduced_[width_ - 1]; }

  // After phase one: pivots artificial variables out of the basis, dropping
  // rows that turn out to be redundant.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_ - 1];
    }
    return x;
  }

  std::size_t variables() const { return n_; }
  std::size_t width() const { return width_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t n_;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_standard_form(const StandardFormLp& lp) {
  const std::size_t n = lp.c.size();
  if (lp.a.size() != lp.b.size()) throw std::invalid_argument("row count mismatch");
  for (const auto& row : lp.a) {
    if (row.size() != n) throw std::invalid_argument("column count mismatch");
  }

  Tableau t(lp);
  std::vector<Rational> phase_one(t.width() - 1);
  for (std::size_t j = n; j < phase_one.size(); ++j) phase_one[j] = 1;
  t.price(phase_one);
  t.run(t.width() - 1);

  LpSolution out;
  if (t.objective() > Rational(0)) {
    out.status = LpStatus::Infeasible;
    out.pivots = t.pivots();
    return out;
  }
  t.expel_artificials();

  std::vector<Rational> cost(t.width() - 1);
  std::copy(lp.c.begin(), lp.c.end(), cost.begin());
  t.price(cost);
  const bool bounded = t.run(n);
  out.pivots = t.pivots();
  if (!bounded) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x = t.solution();
  out.value = t.objective();
  out.basis = t.basis();
  return out;
}

OptimizationResult optimize(const ConstraintSystem& system, std::span<const Rational> objective, Sense sense) {
  const std::size_t d = system.dimension();
  if (objective.size() != d) throw std::invalid_argument("objective has wrong dimension");

  std::vector<bool> bounded(d, false);
  std::vector<bool> is_bound_row(system.rows().size(), false);
  for (std::size_t i = 0; i < system.rows().size(); ++i) {
    const auto& row = system.rows()[i];
    if (row.coefficients.size() == 1 && row.relation == Relation::GreaterEqual && row.rhs.is_zero() &&
        row.coefficients.front().second > Rational(0)) {
      bounded[row.coefficients.front().first] = true;
      is_bound_row[i] = true;
    }
  }

  // Column layout: for each edge column its positive part, then a negative
  // part for unbounded columns, then one slack per inequality row.
  std::vector<std::size_t> pos(d), neg(d, SIZE_MAX);
  std::size_t vars = 0;
  for (std::size_t j = 0; j < d; ++j) {
    pos[j] = vars++;
    if (!bounded[j]) neg[j] = vars++;
  }

  OptimizationResult result;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < system.rows().size(); ++i) {
    if (is_bound_row[i]) continue;
    const auto& row = system.rows()[i];
    if (row.coefficients.empty()) {
      if (!row.satisfied_by({})) return result;  // 0 violates rhs: infeasible
      continue;
    }
    active.push_back(i);
  }

  StandardFormLp lp;
  const std::size_t total = vars + active.size();
  for (std::size_t k = 0; k < active.size(); ++k) {
    const auto& row = system.rows()[active[k]];
    std::vector<Rational> dense(total);
    for (const auto& [col, coeff] : row.coefficients) {
      dense[pos[col]] = coeff;
      if (neg[col] != SIZE_MAX) dense[neg[col]] = -coeff;
    }
    dense[vars + k] = row.relation == Relation::LessEqual ? 1 : -1;
    lp.a.push_back(std::move(dense));
    lp.b.push_back(row.rhs);
  }
  lp.c.assign(total, Rational());
  for (std::size_t j = 0; j < d; ++j) {
    const Rational c = sense == Sense::Maximize ? -objective[j] : objective[j];
    lp.c[pos[j]] = c;
    if (neg[j] != SIZE_MAX) lp.c[neg[j]] = -c;
  }

  const LpSolution sol = solve_standard_form(lp);
  result.status = sol.status;
  if (sol.status != LpStatus::Optimal) return result;
  result.point.coords.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    result.point.coords[j] = sol.x[pos[j]];
    if (neg[j] != SIZE_MAX) result.point.coords[j] -= sol.x[neg[j]];
    result.value += objective[j] * result.point.coords[j];
  }
  return result;
}

}  // namespace smpoly
