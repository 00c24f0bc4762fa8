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
#include "smpoly/linalg.hpp"
#include "smpoly/symdiff.hpp"
#include "smpoly/vertex_enum.hpp"
#include "support.hpp"

namespace smpoly {
namespace {

constexpr VertexEnumOptions kBasis{kDefaultVertexEnumerationBound, VertexMethod::BasisEnumeration};
constexpr VertexEnumOptions kDd{kDefaultVertexEnumerationBound, VertexMethod::DoubleDescription};

std::vector<Point> stable_points(const Instance& inst) {
  std::vector<Point> out;
  for (auto mask : oracle::stable_matchings(inst)) out.push_back(Point{oracle::incidence(inst, mask)});
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Vertices, FourCycle) {
  const auto inst = fixture_four_cycle();
  const auto q = build_q(inst);
  for (const auto& opts : {kDd, kBasis}) {
    const auto report = enumerate_vertices(q, opts);
    ASSERT_EQ(report.vertices.size(), 2u);
    EXPECT_EQ(report.integral_count(), 2u);
    EXPECT_TRUE(report.fractional_certificates().empty());
    EXPECT_EQ(report.points(), stable_points(inst));
    EXPECT_EQ(report.points(), oracle::brute_vertices(q));
  }
}

TEST(Vertices, SingleEdge) {
  const auto report = enumerate_vertices(build_q(fixture_single_edge()));
  ASSERT_EQ(report.vertices.size(), 1u);
  EXPECT_EQ(report.vertices.front().point.coords, std::vector<Rational>{1});
}

TEST(Vertices, NoEdges) {
  const auto inst = Instance::from_indices({{}}, {{}});
  const auto report = enumerate_vertices(build_q(inst));
  ASSERT_EQ(report.vertices.size(), 1u);
  EXPECT_EQ(report.vertices.front().point.dimension(), 0u);
}

TEST(Vertices, AllCompleteTwoByTwo) {
  for (const auto& inst : exhaustive_complete(2)) {
    const auto q = build_q(inst);
    const auto dd = enumerate_vertices(q, kDd);
    EXPECT_EQ(dd.points(), stable_points(inst));
    EXPECT_EQ(dd.points(), oracle::brute_vertices(q));
    const auto basis = enumerate_vertices(q, kBasis);
    ASSERT_EQ(basis.vertices.size(), dd.vertices.size());
    for (std::size_t i = 0; i < dd.vertices.size(); ++i) {
      EXPECT_EQ(basis.vertices[i].point, dd.vertices[i].point);
      EXPECT_EQ(basis.vertices[i].basis, dd.vertices[i].basis);
    }
  }
}

TEST(Vertices, MethodsAgreeWithBruteForceOnSmallRandomInstances) {
  RandomInstanceGenerator gen({3, 3, 0.6, 5, false});
  for (int k = 0; k < 40; ++k) {
    const auto inst = gen.next();
    if (inst.edge_count() > 6) continue;
    const auto q = build_q(inst);
    const auto dd = enumerate_vertices(q, kDd);
    const auto basis = enumerate_vertices(q, kBasis);
    EXPECT_EQ(dd.points(), oracle::brute_vertices(q));
    EXPECT_EQ(basis.points(), dd.points());
    for (std::size_t i = 0; i < dd.vertices.size(); ++i) {
      EXPECT_EQ(basis.vertices[i].basis, dd.vertices[i].basis);
    }
  }
}

TEST(Vertices, CertificatesAreIndependentTightRows) {
  RandomInstanceGenerator gen({4, 4, 0.55, 19, false});
  for (int k = 0; k < 60; ++k) {
    const auto inst = gen.next();
    if (inst.edge_count() > kDefaultVertexEnumerationBound) continue;
    const auto q = build_q(inst);
    const auto report = enumerate_vertices(q);
    for (const auto& v : report.vertices) {
      EXPECT_TRUE(contains(q, v.point).inside);
      ASSERT_EQ(v.basis.size(), q.dimension());
      linalg::Matrix rows;
      for (auto r : v.basis) {
        EXPECT_TRUE(q.rows()[r].tight_at(v.point.coords));
        rows.push_back(q.rows()[r].dense(q.dimension()));
      }
      EXPECT_EQ(oracle::gauss_rank(rows), q.dimension());
      EXPECT_EQ(v.basis, tight_basis(q, v.point));
      EXPECT_EQ(v.integral, v.point.is_integral_01());
    }
    EXPECT_EQ(report.points(), stable_points(inst));
  }
}

TEST(Vertices, FractionalVerticesOfOtherPolytopes) {
  // x + y <= 1, x - y <= 0, x, y >= 0 has the vertex (1/2, 1/2).
  const auto row = [](std::vector<std::pair<std::size_t, Rational>> c, Relation rel, Rational rhs) {
    return Constraint{std::move(c), rel, rhs, {}, false};
  };
  const ConstraintSystem triangle({EdgeId{0, 0}, EdgeId{0, 1}},
                                  {row({{0, 1}, {1, 1}}, Relation::LessEqual, 1),
                                   row({{0, 1}, {1, -1}}, Relation::LessEqual, 0),
                                   row({{0, 1}}, Relation::GreaterEqual, 0), row({{1, 1}}, Relation::GreaterEqual, 0)});
  for (const auto& opts : {kDd, kBasis}) {
    const auto report = enumerate_vertices(triangle, opts);
    EXPECT_EQ(report.points(), oracle::brute_vertices(triangle));
    ASSERT_EQ(report.fractional_certificates().size(), 1u);
    EXPECT_EQ(report.fractional_certificates().front().point.coords,
              (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  }
}

TEST(Vertices, UnboundedRejected) {
  const ConstraintSystem ray({EdgeId{0, 0}}, {Constraint{{{0, Rational(1)}}, Relation::GreaterEqual, 0, {}, false}});
  EXPECT_THROW(enumerate_vertices(ray), std::domain_error);
  EXPECT_THROW(enumerate_vertices(ray, kBasis), std::domain_error);
}

TEST(Vertices, BoundEnforced) {
  RandomInstanceGenerator gen({4, 4, 1.0, 1, false});
  const auto q = build_q(gen.next());
  EXPECT_THROW(enumerate_vertices(q), BoundExceeded);
  EXPECT_NO_THROW(enumerate_vertices(build_q(fixture_four_cycle()), {4, VertexMethod::DoubleDescription}));
  EXPECT_THROW(enumerate_vertices(build_q(fixture_four_cycle()), {3, VertexMethod::DoubleDescription}), BoundExceeded);
}

}  // namespace
}  // namespace smpoly
