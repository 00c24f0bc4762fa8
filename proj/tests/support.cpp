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

#include "support.hpp"

#include <fstream>

#include "smpoly/instance_json.hpp"
#include "smpoly/report_json.hpp"

namespace testing_support {

using smpoly::EdgeId;
using smpoly::Matching;

Matching four_cycle_a_optimal() {
  return Matching::from_edges(smpoly::fixture_four_cycle(), {EdgeId{0, 0}, EdgeId{1, 1}});
}

Matching four_cycle_b_optimal() {
  return Matching::from_edges(smpoly::fixture_four_cycle(), {EdgeId{0, 1}, EdgeId{1, 0}});
}

OpposedFixture load_opposed_fixture() {
  std::ifstream in(kFixtureDir + "/opposed_pair.json");
  const auto doc = nlohmann::json::parse(in);
  smpoly::OpposedPairSearch search;
  search.seed = doc["search"]["seed"].get<std::uint64_t>();
  search.side = doc["search"]["side"].get<std::size_t>();
  search.edge_prob = doc["search"]["edge_prob"].get<double>();
  const auto attempts = doc["search"]["attempts"].get<std::uint64_t>();

  auto parent = smpoly::instance_from_json(doc["parent"]);
  const auto a = parent.find(doc["removed"][0].get<std::string>());
  const auto b = parent.find(doc["removed"][1].get<std::string>());
  const EdgeId removed = smpoly::make_edge(*a, *b);
  auto child = smpoly::instance_from_json(doc["instance"]);
  auto m1 = smpoly::matching_from_json(child, doc["m1"]);
  auto m2 = smpoly::matching_from_json(child, doc["m2"]);
  return OpposedFixture{search, attempts,
                        smpoly::OpposedPair{std::move(parent), removed, std::move(child), std::move(m1),
                                            std::move(m2), {}, attempts}};
}

}  // namespace testing_support
