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

#include <cstddef>
#include <span>
#include <vector>

#include "smpoly/constraint_system.hpp"
#include "smpoly/linalg.hpp"
#include "smpoly/rational.hpp"

namespace smpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(LpStatus status);

/// minimize c·x subject to a x = b, x >= 0.
struct StandardFormLp {
  linalg::Matrix a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;  // basic feasible solution when Optimal
  Rational value;
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

/// Two-phase tableau simplex in exact arithmetic. Bland's rule picks both the
/// entering column (lowest index with negative reduced cost) and the leaving
/// row (lowest basic index among minimum ratios), so it terminates on
/// degenerate problems. The optimum returned is a basic solution.
LpSolution solve_standard_form(const StandardFormLp& lp);

enum class Sense { Maximize, Minimize };

struct OptimizationResult {
  LpStatus status = LpStatus::Infeasible;
  Point point;
  Rational value;
};

/// Optimizes a linear objective (one coefficient per column) over the
/// system. Columns carrying an explicit x_j >= 0 row are bounded directly;
/// any other column is split into a difference of two nonnegative parts.
OptimizationResult optimize(const ConstraintSystem& system, std::span<const Rational> objective, Sense sense);

}  // namespace smpoly
