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

#include "smpoly/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smpoly {

ExhaustiveCompleteGenerator::ExhaustiveCompleteGenerator(std::size_t n) : n_(n) {
  if (n > kMaxExhaustiveSide) {
    throw std::invalid_argument("exhaustive generation limited to n <= " +
                                std::to_string(kMaxExhaustiveSide) + ", got " + std::to_string(n));
  }
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  digits_.assign(2 * n, 0);
}

std::uint64_t ExhaustiveCompleteGenerator::total(std::size_t n) {
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) out *= fact;
  return out;
}

std::optional<Instance> ExhaustiveCompleteGenerator::next() {
  if (done_) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> a_prefs(n_), b_prefs(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    a_prefs[i] = perms_[digits_[i]];
    b_prefs[i] = perms_[digits_[n_ + i]];
  }
  Instance inst = Instance::from_indices(a_prefs, b_prefs);

  std::size_t pos = digits_.size();
  while (pos > 0) {
    --pos;
    if (++digits_[pos] < perms_.size()) break;
    digits_[pos] = 0;
    if (pos == 0) done_ = true;
  }
  if (digits_.empty()) done_ = true;
  return inst;
}

RandomInstanceGenerator::RandomInstanceGenerator(const RandomInstanceSpec& spec)
    : spec_(spec), rng_(spec.seed) {
  if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (spec.require_edges && (spec.a_count == 0 || spec.b_count == 0 || spec.edge_prob == 0.0)) {
    throw std::invalid_argument("require_edges cannot be met with these parameters");
  }
}

Instance RandomInstanceGenerator::next() {
  std::bernoulli_distribution coin(spec_.edge_prob);
  for (;;) {
    std::vector<std::vector<std::uint32_t>> a_prefs(spec_.a_count), b_prefs(spec_.b_count);
    std::size_t edges = 0;
    for (std::uint32_t a = 0; a < spec_.a_count; ++a) {
      for (std::uint32_t b = 0; b < spec_.b_count; ++b) {
        if (coin(rng_)) {
          a_prefs[a].push_back(b);
          b_prefs[b].push_back(a);
          ++edges;
        }
      }
    }
    if (spec_.require_edges && edges == 0) continue;
    for (auto& list : a_prefs) std::shuffle(list.begin(), list.end(), rng_);
    for (auto& list : b_prefs) std::shuffle(list.begin(), list.end(), rng_);
    return Instance::from_indices(a_prefs, b_prefs);
  }
}

std::vector<Instance> exhaustive_complete(std::size_t n) {
  ExhaustiveCompleteGenerator gen(n);
  std::vector<Instance> out;
  while (auto inst = gen.next()) out.push_back(std::move(*inst));
  return out;
}

}  // namespace smpoly
