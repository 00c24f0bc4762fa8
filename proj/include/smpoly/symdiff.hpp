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
#include <span>
#include <stdexcept>
#include <vector>

#include "smpoly/errors.hpp"
#include "smpoly/instance.hpp"
#include "smpoly/matching.hpp"

namespace smpoly {

enum class ComponentKind { Path, Cycle };

/// Which of the two matchings every A-node of a component prefers.
enum class Orientation { FirstPreferredByA, SecondPreferredByA };

/// A connected component of M1 △ M2: an alternating path or even cycle.
struct Component {
  ComponentKind kind = ComponentKind::Cycle;
  /// Walk order. Paths start at their smaller endpoint; cycles start at their
  /// smallest node and leave it along its first-matching edge.
  std::vector<NodeId> nodes;
  /// edges[i] joins nodes[i] and nodes[i + 1] (cyclically for cycles).
  std::vector<EdgeId> edges;
  /// in_first[i]: edges[i] belongs to the first matching.
  std::vector<bool> in_first;
  Orientation orientation = Orientation::FirstPreferredByA;
};

struct ComponentDecomposition {
  Matching first;
  Matching second;
  std::vector<Component> components;
  std::vector<std::size_t> first_preferred;   // A-nodes prefer `first`
  std::vector<std::size_t> second_preferred;  // A-nodes prefer `second`
};

/// Raised when an operation that requires stable matchings receives an
/// unstable one.
class UnstableMatching : public std::invalid_argument {
 public:
  UnstableMatching(const std::string& what, std::vector<EdgeId> blocking)
      : std::invalid_argument(what), blocking_(std::move(blocking)) {}
  const std::vector<EdgeId>& blocking() const { return blocking_; }

 private:
  std::vector<EdgeId> blocking_;
};

/// A component whose nodes disagree on which matching A prefers. For stable
/// inputs this never happens; the exception carries the offending walk.
class OrientationConflict : public std::logic_error {
 public:
  OrientationConflict(Component component, NodeId designated, NodeId dissenting);
  const Component& component() const { return component_; }
  NodeId designated() const { return designated_; }
  NodeId dissenting() const { return dissenting_; }

 private:
  Component component_;
  NodeId designated_;
  NodeId dissenting_;
};

/// Splits first △ second into components and orients each one. The
/// orientation is read at the component's first A-node (first B-node,
/// inverted, if it has none) and then checked at every other node.
ComponentDecomposition decompose(const Instance& inst, const Matching& first, const Matching& second);

struct SwapResult {
  Matching matching;
  bool stable = false;
  std::vector<EdgeId> blocking;
};

/// first △ (edges of the selected components). Selecting exactly the
/// first-preferred or exactly the second-preferred components must give a
/// stable matching; std::logic_error is thrown otherwise. Other subsets
/// report their stability without any such expectation.
SwapResult swap_components(const Instance& inst, const ComponentDecomposition& dec,
                           std::span<const std::size_t> subset);

struct MeetJoin {
  Matching meet;  // every A-node gets its less preferred partner of the two
  Matching join;  // every A-node gets its more preferred partner of the two
};

MeetJoin meet_join(const Instance& inst, const Matching& first, const Matching& second);

/// χ(m1) + χ(m2) == χ(m3) + χ(m4) edge by edge.
bool same_incidence_sum(const Instance& inst, const Matching& m1, const Matching& m2,
                        const Matching& m3, const Matching& m4);

inline constexpr std::size_t kDefaultStableEnumerationBound = 16;

/// All stable matchings, canonical order, by exhaustive search over
/// matchings followed by a stability filter. Throws BoundExceeded when the
/// instance has more than `max_edges` edges.
std::vector<Matching> enumerate_stable(const Instance& inst,
                                       std::size_t max_edges = kDefaultStableEnumerationBound);

/// Every matching of `inst`, stable or not, canonical order.
std::vector<Matching> enumerate_matchings(const Instance& inst,
                                          std::size_t max_edges = kDefaultStableEnumerationBound);

}  // namespace smpoly
