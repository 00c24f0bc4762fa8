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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smpoly {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

struct NodeId {
  Side side = Side::A;
  std::uint32_t index = 0;

  static constexpr NodeId a(std::uint32_t i) { return {Side::A, i}; }
  static constexpr NodeId b(std::uint32_t i) { return {Side::B, i}; }

  friend constexpr auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Canonical edge: `a` indexes side A, `b` indexes side B.
struct EdgeId {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  constexpr NodeId a_node() const { return NodeId::a(a); }
  constexpr NodeId b_node() const { return NodeId::b(b); }
  /// Endpoint of the edge on side `s`.
  constexpr NodeId end(Side s) const { return s == Side::A ? a_node() : b_node(); }

  friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Edge joining `u` and `v`, which must lie on opposite sides.
EdgeId make_edge(NodeId u, NodeId v);

/// One invariant violation found by validate().
struct Violation {
  enum class Kind {
    EdgePrefMismatch,
    NotStrictOrder,
    CrossSide,
    OutOfRange,
    UnknownName,
    DuplicateName,
  };
  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

/// Raw, unchecked instance data. Edges are listed explicitly so that an
/// inconsistency between the edge set and the preference lists can be
/// represented and reported.
struct InstanceParts {
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::vector<NodeId>> a_prefs;  // best first
  std::vector<std::vector<NodeId>> b_prefs;  // best first
  std::vector<std::string> a_names;          // optional; defaults a1.., b1..
  std::vector<std::string> b_names;

  /// Parts whose edge set is the union of pairs named by either side.
  static InstanceParts from_prefs(std::vector<std::vector<NodeId>> a_prefs,
                                  std::vector<std::vector<NodeId>> b_prefs);
};

/// All invariant violations of `parts`; empty iff the data forms a valid
/// instance.
std::vector<Violation> validate(const InstanceParts& parts);

class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated stable marriage instance. Immutable; all queries are reads.
class Instance {
 public:
  /// Throws InvalidInstance when validate(parts) is non-empty.
  static Instance build(InstanceParts parts);

  /// Convenience: preferences given as indices of the opposite side.
  static Instance from_indices(const std::vector<std::vector<std::uint32_t>>& a_prefs,
                               const std::vector<std::vector<std::uint32_t>>& b_prefs);

  std::size_t a_count() const { return prefs_[0].size(); }
  std::size_t b_count() const { return prefs_[1].size(); }
  std::size_t count(Side s) const { return prefs_[side_slot(s)].size(); }
  std::size_t node_count() const { return a_count() + b_count(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in canonical (a, b) order; position is the edge's column.
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(EdgeId e) const;
  bool has_edge(EdgeId e) const { return edge_index(e).has_value(); }
  bool adjacent(NodeId u, NodeId v) const;

  /// Neighbours of `u`, best first, as indices on the opposite side.
  std::span<const std::uint32_t> prefs(NodeId u) const;
  std::size_t degree(NodeId u) const { return prefs(u).size(); }
  /// Zero-based position of `v` in prefs(u); throws if not a neighbour.
  std::size_t rank(NodeId u, NodeId v) const;

  /// v1 >_u v2 with nullopt (unmatched) as the least element. Throws
  /// std::invalid_argument if an argument is neither a neighbour nor nullopt.
  bool prefers(NodeId u, std::optional<NodeId> v1, std::optional<NodeId> v2) const;

  /// Edges at `v` to neighbours that `v` strictly prefers to `u`; uv must
  /// be an edge.
  std::vector<EdgeId> better_edges(NodeId u, NodeId v) const;

  /// Edges incident to `v`.
  std::vector<EdgeId> incident_edges(NodeId v) const;

  NodeId n_max(NodeId v) const;
  NodeId n_min(NodeId v) const;

  const std::string& name(NodeId u) const;
  std::optional<NodeId> find(std::string_view name) const;
  std::string edge_name(EdgeId e) const;

  /// Nodes in canonical order: A nodes by index, then B nodes.
  std::vector<NodeId> nodes() const;

  /// The same instance with `e` dropped from both preference lists; the
  /// remaining order and all names are kept. Throws if `e` is not an edge.
  Instance without_edge(EdgeId e) const;

  bool operator==(const Instance& other) const;

 private:
  Instance() = default;
  static constexpr std::size_t side_slot(Side s) { return s == Side::A ? 0 : 1; }
  void check_node(NodeId u) const;

  std::vector<std::vector<std::uint32_t>> prefs_[2];
  // rank_[side][i][j]: position of opposite node j in prefs of (side, i), or -1.
  std::vector<std::vector<std::int32_t>> rank_[2];
  std::vector<EdgeId> edges_;
  std::vector<std::int32_t> column_;  // a * b_count + b -> edge column or -1
  std::vector<std::string> names_[2];
};

std::size_t hash_value(const Instance& inst);

/// Canonical two-node fixtures used throughout the tests and docs.
/// I1: a single acceptable pair.
Instance fixture_single_edge();
/// I2: complete 2x2, a1: b1>b2, a2: b2>b1, b1: a2>a1, b2: a1>a2.
Instance fixture_four_cycle();

}  // namespace smpoly

template <>
struct std::hash<smpoly::Instance> {
  std::size_t operator()(const smpoly::Instance& inst) const { return smpoly::hash_value(inst); }
};
