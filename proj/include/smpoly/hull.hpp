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

#include <optional>
#include <set>
#include <vector>

#include "smpoly/constraint_system.hpp"
#include "smpoly/matching.hpp"
#include "smpoly/rational.hpp"
#include "smpoly/symdiff.hpp"
#include "smpoly/vertex_enum.hpp"

namespace smpoly {

/// Weights over the stable matchings of an instance, in enumeration order.
struct ConvexDecomposition {
  std::vector<Matching> matchings;
  std::vector<Rational> weights;  // >= 0, sum to 1; zero for forbidden ones

  Rational weight_of(const Matching& m) const;
};

/// Finds λ >= 0 over stable matchings with Σλ = 1, Σ λ_M χ(M) = p and
/// λ_M = 0 for every forbidden M, by exact phase-one simplex. nullopt if no
/// such weights exist.
std::optional<ConvexDecomposition> convex_decompose(const Instance& inst, const Point& p,
                                                    const std::set<Matching>& forbidden = {},
                                                    std::size_t max_edges = kDefaultStableEnumerationBound);

/// Largest weight any decomposition of `p` can put on `target`; nullopt if
/// `p` has no decomposition at all.
std::optional<Rational> max_weight_on(const Instance& inst, const std::vector<Matching>& stable, const Point& p,
                                      const Matching& target);

Point incidence_point(const Instance& inst, const Matching& m);

/// For each vertex: the matching it is the incidence vector of, if it is
/// integral and its support forms a stable matching; nullopt otherwise.
std::vector<std::optional<Matching>> matchings_of(const Instance& inst, const ConstraintSystem& system,
                                                  const VertexReport& report);

}  // namespace smpoly
