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

#include "smpoly/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace smpoly::linalg {

IntegerRow clear_denominators(std::span<const Rational> row) {
  mpz_class scale = 1;
  for (const auto& r : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.value().get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& r : row) out.push_back(r.value().get_num() * (scale / r.value().get_den()));
  return out;
}

void normalize(IntegerRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

namespace {

// In-place Bareiss elimination on the first `cols` columns of `m`. Returns
// the pivot columns in row order; rows past their count are zero in those
// columns. `sign` flips on every row swap.
std::vector<std::size_t> bareiss(std::vector<IntegerRow>& m, std::size_t cols, int& sign) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    if (p != row) {
      std::swap(m[p], m[row]);
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < m[i].size(); ++j) {
        m[i][j] = m[i][j] * m[row][c] - m[i][c] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[row][c];
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<IntegerRow> to_integer(const Matrix& a) {
  std::vector<IntegerRow> m;
  m.reserve(a.size());
  for (const auto& row : a) m.push_back(clear_denominators(row));
  return m;
}

}  // namespace

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("right-hand side has wrong length");
  std::vector<IntegerRow> m;
  m.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("matrix is not square");
    std::vector<Rational> aug(a[i]);
    aug.push_back(b[i]);
    m.push_back(clear_denominators(aug));
  }
  int sign = 1;
  const auto pivots = bareiss(m, n, sign);
  if (pivots.size() < n) return std::nullopt;

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
  }
  return x;
}

Rational determinant(const Matrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  if (n == 0) return 1;
  // Scale factors introduced by clearing denominators are divided out again.
  Rational scale = 1;
  std::vector<IntegerRow> m;
  for (const auto& row : a) {
    m.push_back(clear_denominators(row));
    mpz_class s = 1;
    for (const auto& r : row) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), r.value().get_den_mpz_t());
    scale *= Rational(s);
  }
  int sign = 1;
  const auto pivots = bareiss(m, n, sign);
  if (pivots.size() < n) return 0;
  return Rational(m[n - 1][n - 1]) * Rational(sign) / scale;
}

std::size_t rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  auto m = to_integer(rows);
  int sign = 1;
  return bareiss(m, m.front().size(), sign).size();
}

bool IndependenceTracker::try_add(std::span<const Rational> row) { return try_add(clear_denominators(row)); }

bool IndependenceTracker::try_add(IntegerRow row) {
  if (row.size() != dimension_) throw std::invalid_argument("row has wrong dimension");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p] == 0) continue;
    const mpz_class f = row[p];
    const mpz_class g = basis_[k][p];
    for (std::size_t j = 0; j < dimension_; ++j) row[j] = g * row[j] - f * basis_[k][j];
    normalize(row);
  }
  std::size_t pivot = 0;
  while (pivot < dimension_ && row[pivot] == 0) ++pivot;
  if (pivot == dimension_) return false;
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace smpoly::linalg
