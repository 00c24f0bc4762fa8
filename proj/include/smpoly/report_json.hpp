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

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "smpoly/adjacency.hpp"
#include "smpoly/constraint_system.hpp"
#include "smpoly/instance_json.hpp"
#include "smpoly/matching.hpp"
#include "smpoly/symdiff.hpp"
#include "smpoly/vertex_enum.hpp"

namespace smpoly {

using ojson = nlohmann::ordered_json;

/// [["a1","b1"], ...] in canonical edge order.
ojson matching_to_json(const Instance& inst, const Matching& m);
/// Accepts the format above in any order. Throws ParseError on unknown names
/// or malformed pairs, InvalidMatching on non-edges or shared nodes.
Matching matching_from_json(const Instance& inst, const nlohmann::json& doc);
Matching load_matching(const Instance& inst, const std::filesystem::path& path);

ojson edge_to_json(const Instance& inst, EdgeId e);

/// Fraction strings "p/q" in column order.
ojson point_to_json(const Point& p);

ojson decomposition_to_json(const Instance& inst, const ComponentDecomposition& dec);

ojson vertex_report_to_json(const Instance& inst, const ConstraintSystem& system, const VertexReport& report,
                            const std::vector<std::optional<Matching>>& labels);

ojson verdict_to_json(const Instance& inst, const AdjacencyVerdict& verdict);

/// {"a1:b1": "3/4", ...}; edges not named get weight 0. Throws ParseError.
std::vector<Rational> weights_from_json(const Instance& inst, const nlohmann::json& doc);

}  // namespace smpoly
