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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "smpoly/linalg.hpp"

namespace smpoly::linalg {
namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_percent) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& v : row) v = pct(rng) < zero_percent ? Rational(0) : Rational(num(rng), den(rng));
  }
  return m;
}

TEST(Linalg, SolveSmallSystem) {
  const Matrix a{{2, 1}, {1, 3}};
  const std::vector<Rational> b{3, 5};
  const auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(4, 5));
  EXPECT_EQ((*x)[1], Rational(7, 5));
  EXPECT_FALSE(solve(Matrix{{1, 2}, {2, 4}}, std::vector<Rational>{1, 2}));
}

TEST(Linalg, DeterminantSigns) {
  EXPECT_EQ(determinant(Matrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(determinant(Matrix{}), Rational(1));
  EXPECT_EQ(determinant(Matrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}), Rational(1, 3));
}

TEST(Linalg, AgreesWithTextbookElimination) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    const auto a = random_matrix(rng, n, n, k % 3 == 0 ? 60 : 20);
    const auto b = random_matrix(rng, 1, n, 10).front();
    EXPECT_EQ(determinant(a), oracle::cofactor_determinant(a));
    EXPECT_EQ(solve(a, b), oracle::gauss_solve(a, b));
    const auto wide = random_matrix(rng, n + 1, n + 2, 50);
    EXPECT_EQ(rank(wide), oracle::gauss_rank(wide));
  }
}

TEST(Linalg, IndependenceTrackerMatchesRank) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto rows = random_matrix(rng, 7, 4, 55);
    IndependenceTracker tracker(4);
    Matrix kept;
    for (const auto& row : rows) {
      const bool added = tracker.try_add(row);
      Matrix with = kept;
      with.push_back(row);
      EXPECT_EQ(added, oracle::gauss_rank(with) > oracle::gauss_rank(kept));
      if (added) kept.push_back(row);
    }
    EXPECT_EQ(tracker.rank(), oracle::gauss_rank(rows));
  }
}

TEST(Linalg, ClearDenominatorsAndNormalize) {
  const std::vector<Rational> row{Rational(1, 2), Rational(2, 3), 0};
  auto ints = clear_denominators(row);
  EXPECT_EQ(ints, (IntegerRow{3, 4, 0}));
  IntegerRow r{6, -9, 12};
  normalize(r);
  EXPECT_EQ(r, (IntegerRow{2, -3, 4}));
}

TEST(Linalg, ShapeErrors) {
  EXPECT_THROW(solve(Matrix{{1, 2}}, std::vector<Rational>{1}), std::invalid_argument);
  IndependenceTracker t(2);
  EXPECT_THROW(t.try_add(IntegerRow{1}), std::invalid_argument);
}

}  // namespace
}  // namespace smpoly::linalg
