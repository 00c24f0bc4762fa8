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

#include "smpoly/symdiff.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace smpoly {

namespace {

void require_stable(const Instance& inst, const Matching& m, const char* which) {
  auto blocking = blocking_pairs(inst, m);
  if (!blocking.empty()) {
    throw UnstableMatching(std::string(which) + " matching is not stable", std::move(blocking));
  }
}

std::string node_label(NodeId u) {
  return (u.side == Side::A ? "a" : "b") + std::to_string(u.index + 1);
}

// Vote of a single node: does it indicate that A prefers the first matching?
bool votes_first(const Instance& inst, NodeId u, const Matching& first, const Matching& second) {
  const auto p1 = first.partner(u);
  const auto p2 = second.partner(u);
  return u.side == Side::A ? inst.prefers(u, p1, p2) : inst.prefers(u, p2, p1);
}

}  // namespace

OrientationConflict::OrientationConflict(Component component, NodeId designated, NodeId dissenting)
    : std::logic_error("component orientation is not uniform: " + node_label(designated) + " and " +
                       node_label(dissenting) + " disagree"),
      component_(std::move(component)),
      designated_(designated),
      dissenting_(dissenting) {}

ComponentDecomposition decompose(const Instance& inst, const Matching& first, const Matching& second) {
  require_stable(inst, first, "first");
  require_stable(inst, second, "second");

  // Edge of matching m at u that is not shared with the other matching.
  auto private_edge = [&](NodeId u, const Matching& m, const Matching& other) -> std::optional<NodeId> {
    auto p = m.partner(u);
    if (p && other.partner(u) != p) return p;
    return std::nullopt;
  };
  auto degree = [&](NodeId u) {
    return static_cast<int>(private_edge(u, first, second).has_value()) +
           static_cast<int>(private_edge(u, second, first).has_value());
  };

  ComponentDecomposition dec{first, second, {}, {}, {}};
  std::set<NodeId> visited;
  for (const NodeId seed : inst.nodes()) {
    if (visited.contains(seed) || degree(seed) == 0) continue;

    // Collect the component to find its kind and canonical start.
    std::vector<NodeId> members;
    std::vector<NodeId> stack{seed};
    std::set<NodeId> seen{seed};
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (auto v : {private_edge(u, first, second), private_edge(u, second, first)}) {
        if (v && seen.insert(*v).second) stack.push_back(*v);
      }
    }
    std::sort(members.begin(), members.end());
    Component comp;
    comp.kind = ComponentKind::Cycle;
    NodeId start = members.front();
    for (NodeId u : members) {
      if (degree(u) == 1) {
        comp.kind = ComponentKind::Path;
        start = u;  // members is sorted, so this is the smaller endpoint
        break;
      }
    }

    // Walk, alternating between the two matchings.
    NodeId cur = start;
    bool use_first = private_edge(start, first, second).has_value();
    for (;;) {
      comp.nodes.push_back(cur);
      visited.insert(cur);
      auto next = use_first ? private_edge(cur, first, second) : private_edge(cur, second, first);
      if (!next) break;  // path end
      comp.edges.push_back(make_edge(cur, *next));
      comp.in_first.push_back(use_first);
      use_first = !use_first;
      cur = *next;
      if (cur == start) break;  // cycle closed
    }

    auto designated = std::find_if(comp.nodes.begin(), comp.nodes.end(),
                                   [](NodeId u) { return u.side == Side::A; });
    if (designated == comp.nodes.end()) designated = comp.nodes.begin();
    const bool first_wins = votes_first(inst, *designated, first, second);
    comp.orientation = first_wins ? Orientation::FirstPreferredByA : Orientation::SecondPreferredByA;
    for (NodeId u : comp.nodes) {
      if (votes_first(inst, u, first, second) != first_wins) {
        throw OrientationConflict(comp, *designated, u);
      }
    }

    const std::size_t idx = dec.components.size();
    (first_wins ? dec.first_preferred : dec.second_preferred).push_back(idx);
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

SwapResult swap_components(const Instance& inst, const ComponentDecomposition& dec,
                           std::span<const std::size_t> subset) {
  std::set<std::size_t> chosen;
  for (auto i : subset) {
    if (i >= dec.components.size()) {
      throw std::out_of_range("component index " + std::to_string(i) + " out of range");
    }
    chosen.insert(i);
  }
  std::set<EdgeId> edges(dec.first.edges().begin(), dec.first.edges().end());
  for (auto i : chosen) {
    for (const EdgeId& e : dec.components[i].edges) {
      if (!edges.erase(e)) edges.insert(e);
    }
  }
  SwapResult out;
  out.matching = Matching::from_edges(inst, {edges.begin(), edges.end()});
  out.blocking = blocking_pairs(inst, out.matching);
  out.stable = out.blocking.empty();

  auto equals = [&](const std::vector<std::size_t>& group) {
    return chosen == std::set<std::size_t>(group.begin(), group.end());
  };
  if (!out.stable && (equals(dec.first_preferred) || equals(dec.second_preferred))) {
    throw std::logic_error("swapping a full orientation class produced an unstable matching");
  }
  return out;
}

bool same_incidence_sum(const Instance& inst, const Matching& m1, const Matching& m2,
                        const Matching& m3, const Matching& m4) {
  const auto x1 = m1.incidence(inst), x2 = m2.incidence(inst);
  const auto x3 = m3.incidence(inst), x4 = m4.incidence(inst);
  for (std::size_t e = 0; e < x1.size(); ++e) {
    if (x1[e] + x2[e] != x3[e] + x4[e]) return false;
  }
  return true;
}

MeetJoin meet_join(const Instance& inst, const Matching& first, const Matching& second) {
  const auto dec = decompose(inst, first, second);
  // Swapping the first-preferred components hands those A-nodes their
  // worse partner; swapping the second-preferred ones hands them the better.
  MeetJoin out{swap_components(inst, dec, dec.first_preferred).matching,
               swap_components(inst, dec, dec.second_preferred).matching};
  if (!same_incidence_sum(inst, first, second, out.meet, out.join)) {
    throw std::logic_error("meet and join do not preserve the incidence sum");
  }
  return out;
}

namespace {

void extend(const Instance& inst, std::size_t pos, std::vector<EdgeId>& chosen, std::vector<bool>& a_used,
            std::vector<bool>& b_used, std::vector<Matching>& out) {
  const auto& edges = inst.edges();
  if (pos == edges.size()) {
    out.push_back(Matching::from_edges(inst, chosen));
    return;
  }
  const EdgeId e = edges[pos];
  if (!a_used[e.a] && !b_used[e.b]) {
    a_used[e.a] = b_used[e.b] = true;
    chosen.push_back(e);
    extend(inst, pos + 1, chosen, a_used, b_used, out);
    chosen.pop_back();
    a_used[e.a] = b_used[e.b] = false;
  }
  extend(inst, pos + 1, chosen, a_used, b_used, out);
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Instance& inst, std::size_t max_edges) {
  if (inst.edge_count() > max_edges) {
    throw BoundExceeded("instance has " + std::to_string(inst.edge_count()) +
                        " edges; enumeration bound is " + std::to_string(max_edges));
  }
  std::vector<Matching> out;
  std::vector<EdgeId> chosen;
  std::vector<bool> a_used(inst.a_count(), false), b_used(inst.b_count(), false);
  extend(inst, 0, chosen, a_used, b_used, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_stable(const Instance& inst, std::size_t max_edges) {
  auto all = enumerate_matchings(inst, max_edges);
  std::vector<Matching> out;
  for (auto& m : all) {
    if (is_stable(inst, m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace smpoly
