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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "smpoly/instance.hpp"

namespace smpoly {

/// Largest n accepted by ExhaustiveCompleteGenerator; (n!)^(2n) instances.
inline constexpr std::size_t kMaxExhaustiveSide = 3;

/// Every complete n x n instance exactly once, in odometer order over the
/// per-node preference permutations (last B node varies fastest).
class ExhaustiveCompleteGenerator {
 public:
  explicit ExhaustiveCompleteGenerator(std::size_t n);

  std::optional<Instance> next();
  static std::uint64_t total(std::size_t n);

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

struct RandomInstanceSpec {
  std::size_t a_count = 3;
  std::size_t b_count = 3;
  double edge_prob = 1.0;
  std::uint64_t seed = 0;
  /// Redraw instances without any edge.
  bool require_edges = false;
};

/// Reproducible stream of random instances: each pair is an edge with
/// probability edge_prob, preference lists are uniform shuffles.
class RandomInstanceGenerator {
 public:
  explicit RandomInstanceGenerator(const RandomInstanceSpec& spec);

  Instance next();

 private:
  RandomInstanceSpec spec_;
  std::mt19937_64 rng_;
};

/// Materialised exhaustive family; n <= kMaxExhaustiveSide.
std::vector<Instance> exhaustive_complete(std::size_t n);

}  // namespace smpoly
