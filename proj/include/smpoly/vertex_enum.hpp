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
#include <vector>

#include "smpoly/constraint_system.hpp"
#include "smpoly/errors.hpp"

namespace smpoly {

enum class VertexMethod {
  /// Incremental double description on the homogenized cone.
  DoubleDescription,
  /// Every dimension-sized set of rows solved as equalities.
  BasisEnumeration,
};

inline constexpr std::size_t kDefaultVertexEnumerationBound = 10;

struct VertexEnumOptions {
  std::size_t max_dimension = kDefaultVertexEnumerationBound;
  VertexMethod method = VertexMethod::DoubleDescription;
};

struct Vertex {
  Point point;
  bool integral = false;  // every coordinate is 0 or 1
  /// Lexicographically first set of dimension() linearly independent rows
  /// tight at `point`.
  std::vector<std::size_t> basis;
};

struct FractionalCertificate {
  Point point;
  std::vector<std::size_t> basis;
};

struct VertexReport {
  std::vector<Vertex> vertices;  // sorted by point

  std::size_t integral_count() const;
  std::vector<FractionalCertificate> fractional_certificates() const;
  std::vector<Point> points() const;
};

/// All vertices of the polyhedron described by `system`. Both methods return
/// identical reports. Throws BoundExceeded past options.max_dimension and
/// std::domain_error if the polyhedron is unbounded or not pointed.
VertexReport enumerate_vertices(const ConstraintSystem& system, const VertexEnumOptions& options = {});

/// Lexicographically first maximal independent subset of the rows tight at
/// `p`.
std::vector<std::size_t> tight_basis(const ConstraintSystem& system, const Point& p);

}  // namespace smpoly
