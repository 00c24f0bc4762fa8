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

#include "smpoly/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace smpoly {

namespace {

std::string default_name(NodeId u) {
  return (u.side == Side::A ? "a" : "b") + std::to_string(u.index + 1);
}

std::string describe(NodeId u) { return default_name(u); }

bool in_range(const InstanceParts& parts, NodeId u) {
  return u.index < (u.side == Side::A ? parts.a_count : parts.b_count);
}

}  // namespace

EdgeId make_edge(NodeId u, NodeId v) {
  if (u.side == v.side) {
    throw std::invalid_argument("edge endpoints must lie on opposite sides");
  }
  return u.side == Side::A ? EdgeId{u.index, v.index} : EdgeId{v.index, u.index};
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::EdgePrefMismatch: return "edge/pref mismatch";
    case Violation::Kind::NotStrictOrder: return "not a strict order";
    case Violation::Kind::CrossSide: return "cross-side reference";
    case Violation::Kind::OutOfRange: return "node out of range";
    case Violation::Kind::UnknownName: return "unknown node name";
    case Violation::Kind::DuplicateName: return "duplicate node name";
  }
  return "unknown violation";
}

InstanceParts InstanceParts::from_prefs(std::vector<std::vector<NodeId>> a_prefs,
                                        std::vector<std::vector<NodeId>> b_prefs) {
  InstanceParts parts;
  parts.a_count = a_prefs.size();
  parts.b_count = b_prefs.size();
  std::set<std::pair<NodeId, NodeId>> seen;
  auto collect = [&](Side side, const std::vector<std::vector<NodeId>>& lists) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      NodeId u{side, static_cast<std::uint32_t>(i)};
      for (NodeId v : lists[i]) {
        auto key = side == Side::A ? std::pair{u, v} : std::pair{v, u};
        if (seen.insert(key).second) parts.edges.push_back(key);
      }
    }
  };
  collect(Side::A, a_prefs);
  collect(Side::B, b_prefs);
  parts.a_prefs = std::move(a_prefs);
  parts.b_prefs = std::move(b_prefs);
  return parts;
}

std::vector<Violation> validate(const InstanceParts& parts) {
  std::vector<Violation> out;
  auto report = [&](Violation::Kind kind, const std::string& detail) {
    out.push_back({kind, std::string(to_string(kind)) + ": " + detail});
  };

  if (parts.a_prefs.size() != parts.a_count || parts.b_prefs.size() != parts.b_count) {
    report(Violation::Kind::OutOfRange, "preference table size differs from node count");
    return out;
  }

  // Normalised edge set; malformed pairs are reported and skipped.
  std::set<EdgeId> edge_set;
  for (const auto& [u, v] : parts.edges) {
    if (u.side == v.side) {
      report(Violation::Kind::CrossSide,
             "edge " + describe(u) + describe(v) + " joins two nodes of the same side");
      continue;
    }
    if (!in_range(parts, u) || !in_range(parts, v)) {
      report(Violation::Kind::OutOfRange, "edge " + describe(u) + describe(v));
      continue;
    }
    edge_set.insert(make_edge(u, v));
  }

  std::set<EdgeId> listed[2];
  auto check_side = [&](Side side, const std::vector<std::vector<NodeId>>& lists) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      NodeId u{side, static_cast<std::uint32_t>(i)};
      std::set<NodeId> seen;
      for (NodeId v : lists[i]) {
        if (v.side == side) {
          report(Violation::Kind::CrossSide,
                 "prefs[" + describe(u) + "] lists " + describe(v) + " on the same side");
          continue;
        }
        if (!in_range(parts, v)) {
          report(Violation::Kind::OutOfRange, "prefs[" + describe(u) + "] lists " + describe(v));
          continue;
        }
        if (!seen.insert(v).second) {
          report(Violation::Kind::NotStrictOrder,
                 "prefs[" + describe(u) + "] lists " + describe(v) + " more than once");
          continue;
        }
        listed[side == Side::A ? 0 : 1].insert(make_edge(u, v));
      }
    }
  };
  check_side(Side::A, parts.a_prefs);
  check_side(Side::B, parts.b_prefs);

  std::set<EdgeId> all = edge_set;
  all.insert(listed[0].begin(), listed[0].end());
  all.insert(listed[1].begin(), listed[1].end());
  for (const EdgeId& e : all) {
    const bool in_e = edge_set.contains(e);
    const bool in_a = listed[0].contains(e);
    const bool in_b = listed[1].contains(e);
    if (in_e && in_a && in_b) continue;
    std::ostringstream msg;
    msg << describe(e.a_node()) << describe(e.b_node()) << " (edge " << (in_e ? "present" : "absent")
        << ", listed by " << describe(e.a_node()) << ": " << (in_a ? "yes" : "no") << ", by "
        << describe(e.b_node()) << ": " << (in_b ? "yes" : "no") << ")";
    report(Violation::Kind::EdgePrefMismatch, msg.str());
  }

  auto check_names = [&](const std::vector<std::string>& names, std::size_t count, const char* side) {
    if (names.empty()) return;
    if (names.size() != count) {
      report(Violation::Kind::OutOfRange, std::string("name list for side ") + side + " has wrong length");
    }
  };
  check_names(parts.a_names, parts.a_count, "A");
  check_names(parts.b_names, parts.b_count, "B");
  std::set<std::string> names;
  for (const auto* list : {&parts.a_names, &parts.b_names}) {
    for (const auto& n : *list) {
      if (!names.insert(n).second) report(Violation::Kind::DuplicateName, n);
    }
  }
  return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "invalid instance";
  for (const auto& v : violations) msg += "\n  " + v.message;
  return msg;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

Instance Instance::build(InstanceParts parts) {
  if (auto violations = validate(parts); !violations.empty()) {
    throw InvalidInstance(std::move(violations));
  }
  Instance inst;
  const std::size_t counts[2] = {parts.a_count, parts.b_count};
  const std::vector<std::vector<NodeId>>* lists[2] = {&parts.a_prefs, &parts.b_prefs};
  for (std::size_t s = 0; s < 2; ++s) {
    inst.prefs_[s].resize(counts[s]);
    inst.rank_[s].assign(counts[s], std::vector<std::int32_t>(counts[1 - s], -1));
    for (std::size_t i = 0; i < counts[s]; ++i) {
      const auto& list = (*lists[s])[i];
      for (std::size_t r = 0; r < list.size(); ++r) {
        inst.prefs_[s][i].push_back(list[r].index);
        inst.rank_[s][i][list[r].index] = static_cast<std::int32_t>(r);
      }
    }
  }
  inst.column_.assign(parts.a_count * parts.b_count, -1);
  for (std::uint32_t a = 0; a < parts.a_count; ++a) {
    for (std::uint32_t b = 0; b < parts.b_count; ++b) {
      if (inst.rank_[0][a][b] >= 0) {
        inst.column_[a * parts.b_count + b] = static_cast<std::int32_t>(inst.edges_.size());
        inst.edges_.push_back({a, b});
      }
    }
  }
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& given = s == 0 ? parts.a_names : parts.b_names;
    for (std::uint32_t i = 0; i < counts[s]; ++i) {
      inst.names_[s].push_back(given.empty() ? default_name({s == 0 ? Side::A : Side::B, i})
                                             : given[i]);
    }
  }
  return inst;
}

Instance Instance::from_indices(const std::vector<std::vector<std::uint32_t>>& a_prefs,
                                const std::vector<std::vector<std::uint32_t>>& b_prefs) {
  auto lift = [](const std::vector<std::vector<std::uint32_t>>& lists, Side target) {
    std::vector<std::vector<NodeId>> out(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
      for (auto j : lists[i]) out[i].push_back({target, j});
    }
    return out;
  };
  return build(InstanceParts::from_prefs(lift(a_prefs, Side::B), lift(b_prefs, Side::A)));
}

Instance Instance::without_edge(EdgeId e) const {
  if (!has_edge(e)) throw std::invalid_argument("cannot remove non-edge " + default_name(e.a_node()) + ":" + default_name(e.b_node()));
  InstanceParts parts;
  parts.a_count = a_count();
  parts.b_count = b_count();
  parts.a_names = names_[0];
  parts.b_names = names_[1];
  for (const EdgeId& f : edges_) {
    if (f != e) parts.edges.emplace_back(f.a_node(), f.b_node());
  }
  for (std::size_t s = 0; s < 2; ++s) {
    auto& lists = s == 0 ? parts.a_prefs : parts.b_prefs;
    const Side self = s == 0 ? Side::A : Side::B;
    const Side other = s == 0 ? Side::B : Side::A;
    lists.resize(prefs_[s].size());
    for (std::uint32_t i = 0; i < prefs_[s].size(); ++i) {
      for (auto j : prefs_[s][i]) {
        const NodeId u{self, i}, v{other, j};
        if (make_edge(u, v) != e) lists[i].push_back(v);
      }
    }
  }
  return build(std::move(parts));
}

void Instance::check_node(NodeId u) const {
  if (u.index >= count(u.side)) {
    throw std::out_of_range("node " + default_name(u) + " is not in the instance");
  }
}

std::optional<std::size_t> Instance::edge_index(EdgeId e) const {
  if (e.a >= a_count() || e.b >= b_count()) return std::nullopt;
  const auto col = column_[e.a * b_count() + e.b];
  if (col < 0) return std::nullopt;
  return static_cast<std::size_t>(col);
}

bool Instance::adjacent(NodeId u, NodeId v) const {
  if (u.side == v.side) return false;
  return has_edge(make_edge(u, v));
}

std::span<const std::uint32_t> Instance::prefs(NodeId u) const {
  check_node(u);
  return prefs_[side_slot(u.side)][u.index];
}

std::size_t Instance::rank(NodeId u, NodeId v) const {
  check_node(u);
  if (v.side == u.side || v.index >= count(v.side)) {
    throw std::invalid_argument(name(u) + " has no neighbour " + default_name(v));
  }
  const auto r = rank_[side_slot(u.side)][u.index][v.index];
  if (r < 0) throw std::invalid_argument(name(v) + " is not a neighbour of " + name(u));
  return static_cast<std::size_t>(r);
}

bool Instance::prefers(NodeId u, std::optional<NodeId> v1, std::optional<NodeId> v2) const {
  // Unmatched ranks below every neighbour.
  const auto position = [&](std::optional<NodeId> v) -> std::size_t {
    return v ? rank(u, *v) : degree(u);
  };
  return position(v1) < position(v2);
}

std::vector<EdgeId> Instance::better_edges(NodeId u, NodeId v) const {
  const std::size_t r = rank(v, u);
  std::vector<EdgeId> out;
  const auto list = prefs(v);
  for (std::size_t i = 0; i < r; ++i) {
    out.push_back(make_edge(v, NodeId{u.side, list[i]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> Instance::incident_edges(NodeId v) const {
  std::vector<EdgeId> out;
  for (auto w : prefs(v)) out.push_back(make_edge(v, NodeId{other(v.side), w}));
  std::sort(out.begin(), out.end());
  return out;
}

NodeId Instance::n_max(NodeId v) const {
  const auto list = prefs(v);
  if (list.empty()) throw std::invalid_argument(name(v) + " is isolated");
  return {other(v.side), list.front()};
}

NodeId Instance::n_min(NodeId v) const {
  const auto list = prefs(v);
  if (list.empty()) throw std::invalid_argument(name(v) + " is isolated");
  return {other(v.side), list.back()};
}

const std::string& Instance::name(NodeId u) const {
  check_node(u);
  return names_[side_slot(u.side)][u.index];
}

std::optional<NodeId> Instance::find(std::string_view name) const {
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < names_[s].size(); ++i) {
      if (names_[s][i] == name) return NodeId{s == 0 ? Side::A : Side::B, static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::string Instance::edge_name(EdgeId e) const {
  return name(e.a_node()) + ":" + name(e.b_node());
}

std::vector<NodeId> Instance::nodes() const {
  std::vector<NodeId> out;
  out.reserve(node_count());
  for (std::uint32_t i = 0; i < a_count(); ++i) out.push_back(NodeId::a(i));
  for (std::uint32_t j = 0; j < b_count(); ++j) out.push_back(NodeId::b(j));
  return out;
}

bool Instance::operator==(const Instance& other) const {
  return prefs_[0] == other.prefs_[0] && prefs_[1] == other.prefs_[1];
}

std::size_t hash_value(const Instance& inst) {
  std::size_t h = inst.a_count() * 1000003u ^ inst.b_count();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& u : inst.nodes()) {
    mix(0xffff);
    for (auto v : inst.prefs(u)) mix(v);
  }
  return h;
}

Instance fixture_single_edge() { return Instance::from_indices({{0}}, {{0}}); }

Instance fixture_four_cycle() {
  return Instance::from_indices({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}});
}

}  // namespace smpoly
