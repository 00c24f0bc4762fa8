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

#include "smpoly/matching.hpp"

#include <algorithm>

namespace smpoly {

Matching Matching::from_edges(const Instance& inst, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Matching m;
  m.partner_[0].assign(inst.a_count(), -1);
  m.partner_[1].assign(inst.b_count(), -1);
  for (const EdgeId& e : edges) {
    if (!inst.has_edge(e)) {
      throw InvalidMatching("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                            ") is not an edge of the instance");
    }
    if (m.partner_[0][e.a] >= 0 || m.partner_[1][e.b] >= 0) {
      throw InvalidMatching("edges share the node of " + inst.edge_name(e));
    }
    m.partner_[0][e.a] = static_cast<std::int32_t>(e.b);
    m.partner_[1][e.b] = static_cast<std::int32_t>(e.a);
  }
  m.edges_ = std::move(edges);
  return m;
}

bool Matching::contains(EdgeId e) const {
  return e.a < partner_[0].size() && partner_[0][e.a] == static_cast<std::int32_t>(e.b);
}

std::optional<NodeId> Matching::partner(NodeId u) const {
  const auto& table = partner_[u.side == Side::A ? 0 : 1];
  if (u.index >= table.size() || table[u.index] < 0) return std::nullopt;
  return NodeId{other(u.side), static_cast<std::uint32_t>(table[u.index])};
}

std::vector<int> Matching::incidence(const Instance& inst) const {
  std::vector<int> chi(inst.edge_count(), 0);
  for (const EdgeId& e : edges_) {
    auto col = inst.edge_index(e);
    if (!col) throw InvalidMatching("matching does not belong to this instance");
    chi[*col] = 1;
  }
  return chi;
}

void check_matching(const Instance& inst, const Matching& m) {
  if (m.a_count() != inst.a_count() || m.b_count() != inst.b_count()) {
    // An empty default-constructed matching is valid for any instance.
    if (!m.empty() || m.a_count() != 0 || m.b_count() != 0) {
      throw InvalidMatching("matching was built for an instance of a different size");
    }
  }
  for (const EdgeId& e : m.edges()) {
    if (!inst.has_edge(e)) throw InvalidMatching("matching uses an edge outside the instance");
  }
}

bool covers_edge(const Instance& inst, const Matching& m, EdgeId e) {
  if (m.contains(e)) return true;
  const NodeId a = e.a_node();
  const NodeId b = e.b_node();
  for (const EdgeId& f : inst.better_edges(a, b)) {
    if (m.contains(f)) return true;
  }
  for (const EdgeId& f : inst.better_edges(b, a)) {
    if (m.contains(f)) return true;
  }
  return false;
}

std::vector<EdgeId> blocking_pairs(const Instance& inst, const Matching& m) {
  check_matching(inst, m);
  std::vector<EdgeId> out;
  for (const EdgeId& e : inst.edges()) {
    if (!covers_edge(inst, m, e)) out.push_back(e);
  }
  return out;
}

namespace {

bool stable_by_edge_sets(const Instance& inst, const Matching& m) {
  return std::all_of(inst.edges().begin(), inst.edges().end(),
                     [&](const EdgeId& e) { return covers_edge(inst, m, e); });
}

bool stable_by_blocking_pairs(const Instance& inst, const Matching& m) {
  for (const EdgeId& e : inst.edges()) {
    if (m.contains(e)) continue;
    const NodeId a = e.a_node();
    const NodeId b = e.b_node();
    if (inst.prefers(a, b, m.partner(a)) && inst.prefers(b, a, m.partner(b))) return false;
  }
  return true;
}

}  // namespace

bool is_stable(const Instance& inst, const Matching& m, StabilityCheck mode) {
  check_matching(inst, m);
  if (mode == StabilityCheck::Default) {
#ifdef NDEBUG
    mode = StabilityCheck::EdgeSets;
#else
    mode = StabilityCheck::CrossCheck;
#endif
  }
  switch (mode) {
    case StabilityCheck::EdgeSets: return stable_by_edge_sets(inst, m);
    case StabilityCheck::BlockingPairs: return stable_by_blocking_pairs(inst, m);
    default: break;
  }
  const bool by_sets = stable_by_edge_sets(inst, m);
  if (by_sets != stable_by_blocking_pairs(inst, m)) {
    throw std::logic_error("stability formulations disagree");
  }
  return by_sets;
}

Matching gale_shapley(const Instance& inst, Side proposing) {
  const Side receiving = other(proposing);
  const std::size_t n = inst.count(proposing);
  std::vector<std::size_t> next_choice(n, 0);
  std::vector<std::optional<std::uint32_t>> held(inst.count(receiving));  // receiver -> proposer
  std::vector<bool> engaged(n, false);

  for (;;) {
    std::optional<std::uint32_t> proposer;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!engaged[i] && next_choice[i] < inst.degree({proposing, i})) {
        proposer = i;
        break;
      }
    }
    if (!proposer) break;
    const NodeId p{proposing, *proposer};
    const NodeId r{receiving, inst.prefs(p)[next_choice[*proposer]++]};
    auto& current = held[r.index];
    if (!current) {
      current = p.index;
      engaged[p.index] = true;
    } else if (inst.prefers(r, p, NodeId{proposing, *current})) {
      engaged[*current] = false;
      current = p.index;
      engaged[p.index] = true;
    }
  }

  std::vector<EdgeId> edges;
  for (std::uint32_t r = 0; r < held.size(); ++r) {
    if (held[r]) edges.push_back(make_edge(NodeId{receiving, r}, NodeId{proposing, *held[r]}));
  }
  return Matching::from_edges(inst, std::move(edges));
}

bool weakly_dominates(const Instance& inst, Side side, const Matching& x, const Matching& y) {
  for (std::uint32_t i = 0; i < inst.count(side); ++i) {
    const NodeId u{side, i};
    if (inst.prefers(u, y.partner(u), x.partner(u))) return false;
  }
  return true;
}

}  // namespace smpoly
