// Copyright 2026 The polywit Authors.
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

#ifndef POLYWIT_EXACT_LP_HPP_
#define POLYWIT_EXACT_LP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace polywit {

using Rational = mpq_class;

// minimize cost . x  subject to  rows[i] . x = rhs[i],  x >= 0.
// Rows are sparse (column, coefficient) lists.
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
  // One multiplier per row with cost - A^T y >= 0 componentwise and
  // rhs . y = objective at an optimum.
  std::vector<Rational> duals;
  int pivots = 0;
};

// Dense two-phase tableau simplex over the rationals. Bland's rule picks
// both the entering and the leaving variable, so the method terminates on
// degenerate problems; ties are broken by lowest index.
LpResult solve_lp(const LpProblem& problem);

// lcm of the denominators of `values` (1 for an empty range).
mpz_class denominator_lcm(const std::vector<Rational>& values);

// Checked conversion; throws InternalError when the value does not fit.
std::int64_t to_int64(const mpz_class& value);

}  // namespace polywit

#endif  // POLYWIT_EXACT_LP_HPP_
