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

#include <cstdint>
#include <optional>

#include "smpoly/hull.hpp"
#include "smpoly/matching.hpp"
#include "smpoly/symdiff.hpp"

namespace smpoly {

/// True iff every component of m1 △ m2 has the same orientation, which is
/// necessary for χ(m1), χ(m2) to span an edge of the stable matching
/// polytope. Throws std::invalid_argument when m1 == m2.
bool orientation_uniform(const Instance& inst, const Matching& m1, const Matching& m2);

/// An edge ab such that the `preferred` matching hits both δ^{>a}(b) and
/// δ^{>b}(a) while the other matching misses both; such a pair of
/// matchings never spans an edge of the polytope.
struct SeparatingEdge {
  EdgeId edge;
  bool first_preferred = true;  // m1 plays the preferred role
};

/// First separating edge in canonical edge order, trying m1 in the
/// preferred role before m2.
///
/// For stable m1, m2 this never finds a witness: stability of the other
/// matching at ab forces ab into it, and then a and b would both prefer the
/// same matching inside one component. Use find_separating_edge_removed for the
/// non-vacuous form.
std::optional<SeparatingEdge> find_separating_edge(const Instance& inst, const Matching& m1, const Matching& m2);

/// The separating condition for a pair ab that is not an edge of the
/// instance: m1, m2 are stable in parent.without_edge(removed), and a, b
/// keep the ranks they have in `parent`. Tries m1 in the preferred role
/// before m2.
std::optional<SeparatingEdge> find_separating_edge_removed(const Instance& parent, EdgeId removed, const Matching& m1,
                                                  const Matching& m2);

struct ExactAdjacency {
  bool adjacent = true;
  /// First stable matching (canonical order) that some decomposition of the
  /// midpoint uses with positive weight, and that maximum weight.
  std::optional<Matching> witness;
  Rational witness_weight;
};

/// Decides adjacency of χ(m1) and χ(m2) in the stable matching polytope:
/// adjacent iff no convex decomposition of their midpoint gives positive
/// weight to a third stable matching. Each third matching's weight is
/// maximized separately by exact LP.
ExactAdjacency exact_adjacency(const Instance& inst, const Matching& m1, const Matching& m2,
                               std::size_t max_edges = kDefaultStableEnumerationBound);

struct AdjacencyVerdict {
  bool uniform_orientation = false;
  std::optional<SeparatingEdge> separating_witness;
  bool exact_adjacent = false;
  ComponentDecomposition decomposition;
  MeetJoin lattice;
  ExactAdjacency exact;
};

/// All three adjacency tests with their traces. Throws UnstableMatching for
/// unstable inputs and std::invalid_argument when m1 == m2.
AdjacencyVerdict assess_adjacency(const Instance& inst, const Matching& m1, const Matching& m2,
                                  std::size_t max_edges = kDefaultStableEnumerationBound);

/// A pair of stable matchings of parent.without_edge(removed) whose
/// symmetric difference has components of both orientations, separated by
/// the removed edge.
struct OpposedPair {
  Instance parent;
  EdgeId removed;
  Instance instance;  // parent without the removed edge
  Matching first;
  Matching second;
  SeparatingEdge witness;
  std::uint64_t attempts = 0;
};

struct OpposedPairSearch {
  std::size_t side = 4;
  double edge_prob = 1.0;
  std::uint64_t seed = 2;
  std::uint64_t max_attempts = 100000;
  /// Only accept symmetric differences made of exactly two 4-cycles.
  bool two_four_cycles = true;
};

/// Seeded brute-force search over random parents and each of their edges.
/// nullopt if nothing is found within max_attempts parents.
std::optional<OpposedPair> find_opposed_pair(const OpposedPairSearch& search);

}  // namespace smpoly
