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

#include "smpoly/adjacency.hpp"

#include <algorithm>
#include <stdexcept>

#include "smpoly/generate.hpp"

namespace smpoly {

namespace {

void require_distinct(const Matching& m1, const Matching& m2) {
  if (m1 == m2) throw std::invalid_argument("adjacency needs two distinct matchings");
}

void require_stable(const Instance& inst, const Matching& m, const char* which) {
  auto blocking = blocking_pairs(inst, m);
  if (!blocking.empty()) {
    throw UnstableMatching(std::string(which) + " matching is not stable", std::move(blocking));
  }
}

bool hits(const Matching& m, const std::vector<EdgeId>& edges) {
  return std::any_of(edges.begin(), edges.end(), [&](const EdgeId& e) { return m.contains(e); });
}

bool separates(const Matching& preferred, const Matching& other, const std::vector<EdgeId>& at_b,
               const std::vector<EdgeId>& at_a) {
  return hits(preferred, at_b) && hits(preferred, at_a) && !hits(other, at_b) && !hits(other, at_a);
}

}  // namespace

bool orientation_uniform(const Instance& inst, const Matching& m1, const Matching& m2) {
  require_distinct(m1, m2);
  const auto dec = decompose(inst, m1, m2);
  return dec.first_preferred.empty() || dec.second_preferred.empty();
}

std::optional<SeparatingEdge> find_separating_edge(const Instance& inst, const Matching& m1, const Matching& m2) {
  require_stable(inst, m1, "first");
  require_stable(inst, m2, "second");
  for (const EdgeId& e : inst.edges()) {
    const auto at_b = inst.better_edges(e.a_node(), e.b_node());  // δ^{>a}(b)
    const auto at_a = inst.better_edges(e.b_node(), e.a_node());  // δ^{>b}(a)
    if (separates(m1, m2, at_b, at_a)) return SeparatingEdge{e, true};
    if (separates(m2, m1, at_b, at_a)) return SeparatingEdge{e, false};
  }
  return std::nullopt;
}

std::optional<SeparatingEdge> find_separating_edge_removed(const Instance& parent, EdgeId removed, const Matching& m1,
                                                  const Matching& m2) {
  const Instance child = parent.without_edge(removed);
  require_stable(child, m1, "first");
  require_stable(child, m2, "second");
  // The removed edge is never among its own better edges, so these sets
  // are the same in parent and child.
  const auto at_b = parent.better_edges(removed.a_node(), removed.b_node());
  const auto at_a = parent.better_edges(removed.b_node(), removed.a_node());
  if (separates(m1, m2, at_b, at_a)) return SeparatingEdge{removed, true};
  if (separates(m2, m1, at_b, at_a)) return SeparatingEdge{removed, false};
  return std::nullopt;
}

ExactAdjacency exact_adjacency(const Instance& inst, const Matching& m1, const Matching& m2,
                               std::size_t max_edges) {
  require_distinct(m1, m2);
  require_stable(inst, m1, "first");
  require_stable(inst, m2, "second");
  const auto stable = enumerate_stable(inst, max_edges);

  Point mid = incidence_point(inst, m1);
  const Point other = incidence_point(inst, m2);
  for (std::size_t e = 0; e < mid.dimension(); ++e) mid.coords[e] = (mid.coords[e] + other.coords[e]) / 2;

  ExactAdjacency out;
  for (const auto& m : stable) {
    if (m == m1 || m == m2) continue;
    auto best = max_weight_on(inst, stable, mid, m);
    if (!best) throw std::logic_error("midpoint of two stable matchings has no decomposition");
    if (best->sign() > 0) {
      out.adjacent = false;
      out.witness = m;
      out.witness_weight = *best;
      break;
    }
  }
  return out;
}

AdjacencyVerdict assess_adjacency(const Instance& inst, const Matching& m1, const Matching& m2,
                                  std::size_t max_edges) {
  require_distinct(m1, m2);
  AdjacencyVerdict v;
  v.decomposition = decompose(inst, m1, m2);
  v.uniform_orientation = v.decomposition.first_preferred.empty() || v.decomposition.second_preferred.empty();
  v.lattice = meet_join(inst, m1, m2);
  v.separating_witness = find_separating_edge(inst, m1, m2);
  v.exact = exact_adjacency(inst, m1, m2, max_edges);
  v.exact_adjacent = v.exact.adjacent;
  return v;
}

std::optional<OpposedPair> find_opposed_pair(const OpposedPairSearch& search) {
  RandomInstanceGenerator gen({search.side, search.side, search.edge_prob, search.seed, true});
  for (std::uint64_t attempt = 1; attempt <= search.max_attempts; ++attempt) {
    const Instance parent = gen.next();
    for (const EdgeId& removed : parent.edges()) {
      Instance child = parent.without_edge(removed);
      const auto stable = enumerate_stable(child, search.side * search.side);
      for (std::size_t i = 0; i < stable.size(); ++i) {
        for (std::size_t j = i + 1; j < stable.size(); ++j) {
          const auto witness = find_separating_edge_removed(parent, removed, stable[i], stable[j]);
          if (!witness) continue;
          if (search.two_four_cycles) {
            const auto dec = decompose(child, stable[i], stable[j]);
            const bool shape_ok = dec.components.size() == 2 &&
                                  std::all_of(dec.components.begin(), dec.components.end(), [](const auto& c) {
                                    return c.kind == ComponentKind::Cycle && c.nodes.size() == 4;
                                  });
            if (!shape_ok) continue;
          }
          return OpposedPair{parent, removed, std::move(child), stable[i], stable[j], *witness, attempt};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace smpoly
