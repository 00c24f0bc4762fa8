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

#include "oracles.hpp"
#include "smpoly/generate.hpp"
#include "smpoly/hull.hpp"
#include "smpoly/vertex_enum.hpp"
#include "support.hpp"

namespace smpoly {
namespace {

using testing_support::four_cycle_a_optimal;
using testing_support::four_cycle_b_optimal;

Point midpoint(const Instance& inst, const Matching& x, const Matching& y) {
  Point p = incidence_point(inst, x);
  const Point q = incidence_point(inst, y);
  for (std::size_t i = 0; i < p.dimension(); ++i) p.coords[i] = (p.coords[i] + q.coords[i]) / 2;
  return p;
}

TEST(ConvexDecompose, FourCycleMidpoint) {
  const auto inst = fixture_four_cycle();
  const auto p = midpoint(inst, four_cycle_a_optimal(), four_cycle_b_optimal());
  const auto dec = convex_decompose(inst, p);
  ASSERT_TRUE(dec);
  EXPECT_EQ(dec->weight_of(four_cycle_a_optimal()), Rational(1, 2));
  EXPECT_EQ(dec->weight_of(four_cycle_b_optimal()), Rational(1, 2));
  EXPECT_FALSE(convex_decompose(inst, p, {four_cycle_a_optimal()}));
}

TEST(ConvexDecompose, VertexIsItself) {
  const auto inst = fixture_four_cycle();
  const auto dec = convex_decompose(inst, incidence_point(inst, four_cycle_a_optimal()));
  ASSERT_TRUE(dec);
  EXPECT_EQ(dec->weight_of(four_cycle_a_optimal()), Rational(1));
  EXPECT_EQ(dec->weight_of(four_cycle_b_optimal()), Rational(0));
}

TEST(ConvexDecompose, PointOutsideHull) {
  const auto inst = fixture_four_cycle();
  EXPECT_FALSE(convex_decompose(inst, Point{std::vector<Rational>(4, 0)}));
}

TEST(ConvexDecompose, WeightsReproduceThePoint) {
  RandomInstanceGenerator gen({4, 4, 0.7, 23, false});
  for (int k = 0; k < 60; ++k) {
    const auto inst = gen.next();
    const auto stable = enumerate_stable(inst);
    Point p{std::vector<Rational>(inst.edge_count(), 0)};
    for (std::size_t i = 0; i < stable.size(); ++i) {
      const auto chi = incidence_point(inst, stable[i]);
      const Rational w(long(i + 1), long(stable.size() * (stable.size() + 1) / 2));
      for (std::size_t c = 0; c < p.dimension(); ++c) p.coords[c] += w * chi.coords[c];
    }
    const auto dec = convex_decompose(inst, p);
    ASSERT_TRUE(dec);
    Point back{std::vector<Rational>(inst.edge_count(), 0)};
    Rational total = 0;
    for (std::size_t i = 0; i < dec->matchings.size(); ++i) {
      EXPECT_GE(dec->weights[i], Rational(0));
      total += dec->weights[i];
      const auto chi = incidence_point(inst, dec->matchings[i]);
      for (std::size_t c = 0; c < p.dimension(); ++c) back.coords[c] += dec->weights[i] * chi.coords[c];
    }
    EXPECT_EQ(total, Rational(1));
    EXPECT_EQ(back, p);
  }
}

TEST(MaxWeightOn, FourCycle) {
  const auto inst = fixture_four_cycle();
  const auto stable = enumerate_stable(inst);
  const auto p = midpoint(inst, four_cycle_a_optimal(), four_cycle_b_optimal());
  EXPECT_EQ(max_weight_on(inst, stable, p, four_cycle_a_optimal()), Rational(1, 2));
}

TEST(MatchingsOf, VerticesMapToStableMatchings) {
  const auto inst = fixture_four_cycle();
  const auto q = build_q(inst);
  const auto report = enumerate_vertices(q);
  const auto ms = matchings_of(inst, q, report);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(*ms[0], four_cycle_b_optimal());
  EXPECT_EQ(*ms[1], four_cycle_a_optimal());
}

}  // namespace
}  // namespace smpoly
