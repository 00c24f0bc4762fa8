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
#include <optional>
#include <stdexcept>
#include <vector>

#include "smpoly/instance.hpp"

namespace smpoly {

class InvalidMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of node-disjoint edges of an instance, with O(1) partner lookup.
class Matching {
 public:
  Matching() = default;

  /// Throws InvalidMatching if an edge is not in `inst` or two edges share
  /// a node. Duplicate entries are merged.
  static Matching from_edges(const Instance& inst, std::vector<EdgeId> edges);

  /// Edges in canonical (a, b) order.
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(EdgeId e) const;

  std::optional<NodeId> partner(NodeId u) const;

  /// 0/1 incidence vector indexed by the instance's edge columns.
  std::vector<int> incidence(const Instance& inst) const;

  /// Sizes of the instance this matching was built for.
  std::size_t a_count() const { return partner_[0].size(); }
  std::size_t b_count() const { return partner_[1].size(); }

  friend bool operator==(const Matching& x, const Matching& y) { return x.edges_ == y.edges_; }
  friend std::strong_ordering operator<=>(const Matching& x, const Matching& y) {
    return x.edges_ <=> y.edges_;
  }

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::int32_t> partner_[2];
};

/// How is_stable decides. EdgeSets evaluates the per-edge condition
///   M ∩ (δ^{>u}(v) ∪ δ^{>v}(u) ∪ {uv}) ≠ ∅,
/// BlockingPairs searches for a pair preferring each other to their
/// partners, CrossCheck runs both and throws std::logic_error on
/// disagreement. Default is CrossCheck in debug builds, EdgeSets otherwise.
enum class StabilityCheck { Default, EdgeSets, BlockingPairs, CrossCheck };

bool is_stable(const Instance& inst, const Matching& m, StabilityCheck mode = StabilityCheck::Default);

/// True iff `m` meets the edge-set condition at edge `e`.
bool covers_edge(const Instance& inst, const Matching& m, EdgeId e);

/// Edges violating the edge-set condition, canonical order; empty iff stable.
std::vector<EdgeId> blocking_pairs(const Instance& inst, const Matching& m);

/// Deferred acceptance. The lowest-index free proposer always moves next and
/// proposes to its best neighbour that has not yet rejected it.
Matching gale_shapley(const Instance& inst, Side proposing);

/// Every node of `side` weakly prefers its partner in `x` to its partner in `y`.
bool weakly_dominates(const Instance& inst, Side side, const Matching& x, const Matching& y);

/// Throws InvalidMatching unless `m` is a matching of `inst`.
void check_matching(const Instance& inst, const Matching& m);

}  // namespace smpoly
