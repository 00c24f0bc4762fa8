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

#include "smpoly/report_json.hpp"

#include <fstream>

namespace smpoly {

ojson edge_to_json(const Instance& inst, EdgeId e) {
  return ojson::array({inst.name(e.a_node()), inst.name(e.b_node())});
}

ojson matching_to_json(const Instance& inst, const Matching& m) {
  ojson out = ojson::array();
  for (const EdgeId& e : m.edges()) out.push_back(edge_to_json(inst, e));
  return out;
}

Matching matching_from_json(const Instance& inst, const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("matching must be a JSON array of [a, b] name pairs");
  std::vector<EdgeId> edges;
  for (const auto& pair : doc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw ParseError("matching entries must be [a, b] name pairs");
    }
    const auto u = inst.find(pair[0].get<std::string>());
    const auto v = inst.find(pair[1].get<std::string>());
    if (!u || !v) throw ParseError("unknown node in matching pair " + pair.dump());
    if (u->side == v->side) throw ParseError("matching pair " + pair.dump() + " joins one side");
    edges.push_back(make_edge(*u, *v));
  }
  return Matching::from_edges(inst, std::move(edges));
}

Matching load_matching(const Instance& inst, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return matching_from_json(inst, doc);
}

ojson point_to_json(const Point& p) {
  ojson out = ojson::array();
  for (const auto& c : p.coords) out.push_back(c.fraction_str());
  return out;
}

namespace {

std::string_view orientation_name(Orientation o) {
  return o == Orientation::FirstPreferredByA ? "first_preferred_by_a" : "second_preferred_by_a";
}

ojson columns_json(const Instance& inst, const ConstraintSystem& system) {
  ojson cols = ojson::array();
  for (const EdgeId& e : system.columns()) cols.push_back(inst.edge_name(e));
  return cols;
}

}  // namespace

ojson decomposition_to_json(const Instance& inst, const ComponentDecomposition& dec) {
  ojson out;
  out["first"] = matching_to_json(inst, dec.first);
  out["second"] = matching_to_json(inst, dec.second);
  ojson comps = ojson::array();
  for (const auto& c : dec.components) {
    ojson j;
    j["kind"] = c.kind == ComponentKind::Cycle ? "cycle" : "path";
    ojson nodes = ojson::array();
    for (NodeId u : c.nodes) nodes.push_back(inst.name(u));
    j["nodes"] = std::move(nodes);
    j["orientation"] = orientation_name(c.orientation);
    ojson from_first = ojson::array(), from_second = ojson::array();
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      (c.in_first[i] ? from_first : from_second).push_back(edge_to_json(inst, c.edges[i]));
    }
    j["first_edges"] = std::move(from_first);
    j["second_edges"] = std::move(from_second);
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  out["first_preferred"] = dec.first_preferred;
  out["second_preferred"] = dec.second_preferred;
  return out;
}

ojson vertex_report_to_json(const Instance& inst, const ConstraintSystem& system, const VertexReport& report,
                            const std::vector<std::optional<Matching>>& labels) {
  ojson out;
  out["columns"] = columns_json(inst, system);
  ojson verts = ojson::array();
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    const auto& v = report.vertices[i];
    ojson j;
    j["point"] = point_to_json(v.point);
    j["integral"] = v.integral;
    j["basis"] = v.basis;
    if (i < labels.size() && labels[i]) j["matching"] = matching_to_json(inst, *labels[i]);
    verts.push_back(std::move(j));
  }
  out["vertices"] = std::move(verts);
  ojson certs = ojson::array();
  for (const auto& c : report.fractional_certificates()) {
    ojson j;
    j["point"] = point_to_json(c.point);
    ojson rows = ojson::array();
    for (auto r : c.basis) rows.push_back(describe(inst, system.rows()[r].tag));
    j["tight_basis"] = std::move(rows);
    certs.push_back(std::move(j));
  }
  out["fractional_certificates"] = std::move(certs);
  return out;
}

ojson verdict_to_json(const Instance& inst, const AdjacencyVerdict& v) {
  ojson out;
  out["uniform_orientation"] = v.uniform_orientation;
  if (v.separating_witness) {
    ojson w;
    w["edge"] = edge_to_json(inst, v.separating_witness->edge);
    w["preferred"] = v.separating_witness->first_preferred ? "first" : "second";
    out["separating_witness"] = std::move(w);
  } else {
    out["separating_witness"] = nullptr;
  }
  out["exact_adjacent"] = v.exact_adjacent;
  ojson explanation;
  explanation["decomposition"] = decomposition_to_json(inst, v.decomposition);
  explanation["meet"] = matching_to_json(inst, v.lattice.meet);
  explanation["join"] = matching_to_json(inst, v.lattice.join);
  if (v.exact.witness) {
    explanation["midpoint_witness"] = matching_to_json(inst, *v.exact.witness);
    explanation["midpoint_witness_weight"] = v.exact.witness_weight.fraction_str();
  } else {
    explanation["midpoint_witness"] = nullptr;
  }
  out["explanation"] = std::move(explanation);
  return out;
}

std::vector<Rational> weights_from_json(const Instance& inst, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("weights must be a JSON object of edge name -> fraction string");
  std::vector<Rational> w(inst.edge_count());
  for (const auto& [key, value] : doc.items()) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw ParseError("weight key '" + key + "' is not of the form a:b");
    const auto u = inst.find(key.substr(0, colon));
    const auto v = inst.find(key.substr(colon + 1));
    if (!u || !v || u->side == v->side) throw ParseError("weight key '" + key + "' names no edge");
    const auto col = inst.edge_index(make_edge(*u, *v));
    if (!col) throw ParseError("weight key '" + key + "' names no edge");
    try {
      w[*col] = value.is_string() ? Rational::parse(value.get<std::string>())
                                  : Rational(value.get<long>());
    } catch (const std::exception& e) {
      throw ParseError("weight for '" + key + "': " + e.what());
    }
  }
  return w;
}

}  // namespace smpoly
