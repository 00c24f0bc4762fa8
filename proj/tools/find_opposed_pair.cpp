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

// Searches random instances, minus one edge, for a stable pair whose
// symmetric difference has components of both orientations separated by the
// removed edge, and writes it as a test fixture.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "smpoly/adjacency.hpp"
#include "smpoly/report_json.hpp"

int main(int argc, char** argv) {
  smpoly::OpposedPairSearch search;
  std::string output;
  CLI::App app{"find a stable pair with opposed components"};
  app.add_option("--seed", search.seed, "generator seed");
  app.add_option("--side", search.side, "nodes per side");
  app.add_option("--edge-prob", search.edge_prob, "edge probability");
  app.add_option("--max-attempts", search.max_attempts, "random instances to try");
  app.add_option("-o,--output", output, "write the pair as JSON");
  CLI11_PARSE(app, argc, argv);

  const auto found = smpoly::find_opposed_pair(search);
  if (!found) {
    std::cerr << "no pair found in " << search.max_attempts << " attempts\n";
    return 1;
  }
  smpoly::ojson doc;
  doc["search"] = {{"seed", search.seed},
                   {"side", search.side},
                   {"edge_prob", search.edge_prob},
                   {"attempts", found->attempts}};
  doc["parent"] = smpoly::instance_to_json(found->parent);
  doc["removed"] = smpoly::edge_to_json(found->parent, found->removed);
  doc["instance"] = smpoly::instance_to_json(found->instance);
  doc["m1"] = smpoly::matching_to_json(found->instance, found->first);
  doc["m2"] = smpoly::matching_to_json(found->instance, found->second);
  if (output.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream(output) << doc.dump(2) << '\n';
  }
  return 0;
}
