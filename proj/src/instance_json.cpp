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

#include "smpoly/instance_json.hpp"

#include <fstream>
#include <map>

namespace smpoly {

Instance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("a") || !doc.contains("b") || !doc.contains("prefs")) {
    throw ParseError("instance must be an object with keys \"a\", \"b\" and \"prefs\"");
  }
  InstanceParts parts;
  std::vector<Violation> violations;
  std::map<std::string, NodeId> by_name;
  try {
    for (const auto& [key, side] : {std::pair{"a", Side::A}, std::pair{"b", Side::B}}) {
      auto& names = side == Side::A ? parts.a_names : parts.b_names;
      for (const auto& entry : doc.at(key)) {
        const auto name = entry.get<std::string>();
        NodeId id{side, static_cast<std::uint32_t>(names.size())};
        by_name.emplace(name, id);  // duplicates are reported by validate()
        names.push_back(name);
      }
    }
    parts.a_count = parts.a_names.size();
    parts.b_count = parts.b_names.size();
    std::vector<std::vector<NodeId>> a_prefs(parts.a_count), b_prefs(parts.b_count);
    for (const auto& [owner, list] : doc.at("prefs").items()) {
      auto it = by_name.find(owner);
      if (it == by_name.end()) {
        violations.push_back({Violation::Kind::UnknownName,
                              std::string(to_string(Violation::Kind::UnknownName)) + ": prefs key " + owner});
        continue;
      }
      const NodeId u = it->second;
      auto& target = u.side == Side::A ? a_prefs[u.index] : b_prefs[u.index];
      for (const auto& entry : list) {
        const auto name = entry.get<std::string>();
        auto jt = by_name.find(name);
        if (jt == by_name.end()) {
          violations.push_back({Violation::Kind::UnknownName, std::string(to_string(Violation::Kind::UnknownName)) +
                                                                  ": " + name + " in prefs of " + owner});
          continue;
        }
        target.push_back(jt->second);
      }
    }
    auto names_a = std::move(parts.a_names);
    auto names_b = std::move(parts.b_names);
    parts = InstanceParts::from_prefs(std::move(a_prefs), std::move(b_prefs));
    parts.a_names = std::move(names_a);
    parts.b_names = std::move(names_b);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  auto more = validate(parts);
  violations.insert(violations.end(), more.begin(), more.end());
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return Instance::build(std::move(parts));
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return instance_from_json(doc);
}

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["a"] = nlohmann::ordered_json::array();
  doc["b"] = nlohmann::ordered_json::array();
  nlohmann::ordered_json prefs = nlohmann::ordered_json::object();
  for (const NodeId u : inst.nodes()) {
    doc[u.side == Side::A ? "a" : "b"].push_back(inst.name(u));
    auto& list = prefs[inst.name(u)] = nlohmann::ordered_json::array();
    for (auto v : inst.prefs(u)) list.push_back(inst.name({other(u.side), v}));
  }
  doc["prefs"] = std::move(prefs);
  return doc;
}

}  // namespace smpoly
