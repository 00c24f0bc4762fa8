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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "smpoly/rational.hpp"

namespace smpoly::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using IntegerRow = std::vector<mpz_class>;

/// `row` multiplied by the lcm of its denominators.
IntegerRow clear_denominators(std::span<const Rational> row);

/// Divides an integer row by the gcd of its entries (no-op on zero rows).
void normalize(IntegerRow& row);

/// Exact solution of the square system a x = b by fraction-free (Bareiss)
/// elimination; nullopt when `a` is singular.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b);

Rational determinant(const Matrix& a);
std::size_t rank(const Matrix& rows);

/// Grows a set of linearly independent integer rows one candidate at a time.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dimension) : dimension_(dimension) {}

  /// Adds `row` if it is independent of the rows held so far.
  bool try_add(std::span<const Rational> row);
  bool try_add(IntegerRow row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::vector<IntegerRow> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace smpoly::linalg
