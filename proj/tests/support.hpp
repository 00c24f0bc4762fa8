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

// Shared fixtures for the unit and acceptance tests.

#include <string>

#include "smpoly/adjacency.hpp"
#include "smpoly/instance.hpp"
#include "smpoly/matching.hpp"

namespace testing_support {

inline const std::string kFixtureDir = SMPOLY_FIXTURE_DIR;

/// The A-optimal and B-optimal matchings of the four-cycle fixture.
smpoly::Matching four_cycle_a_optimal();
smpoly::Matching four_cycle_b_optimal();

/// The cached opposed-components fixture (fixtures/opposed_pair.json).
struct OpposedFixture {
  smpoly::OpposedPairSearch search;
  std::uint64_t attempts = 0;
  smpoly::OpposedPair pair;
};
OpposedFixture load_opposed_fixture();

}  // namespace testing_support
