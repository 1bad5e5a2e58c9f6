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

#include "polywit/exact_lp.hpp"

#include "polywit/error.hpp"

namespace polywit {
namespace {

// Columns [0, n) are the problem variables, [n, n + m) one artificial per
// row. Artificials stay in the tableau after phase 1 so that their reduced
// costs yield the row duals at the end.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p)
      : m(p.rows.size()), n(static_cast<std::size_t>(p.num_vars)), width(n + m) {
    a.assign(m, std::vector<Rational>(width));
    rhs.resize(m);
    flipped.assign(m, false);
    basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (const auto& [col, coef] : p.rows[i]) {
        if (col < 0 || static_cast<std::size_t>(col) >= n) {
          throw PreconditionError("LP row references an unknown column");
        }
        a[i][col] += coef;
      }
      rhs[i] = p.rhs[i];
      if (rhs[i] < 0) {
        flipped[i] = true;
        for (std::size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
        rhs[i] = -rhs[i];
      }
      a[i][n + i] = 1;
      basis[i] = n + i;
    }
  }

  void price(const std::vector<Rational>& cost) {
    reduced = cost;
    objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(a[i][j]) != 0) reduced[j] -= cb * a[i][j];
      }
      objective += cb * rhs[i];
    }
  }

  // Bland's rule over entering columns [0, limit). False when unbounded.
  bool optimize(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        Rational ratio = rhs[i] / a[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    ++pivots;
    Rational inv = 1 / a[r][q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(a[r][j]) != 0) {
        a[r][j] *= inv;
        nz.push_back(j);
      }
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(a[i][q]) == 0) continue;
      Rational f = a[i][q];
      for (std::size_t j : nz) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (sgn(reduced[q]) != 0) {
      Rational f = reduced[q];
      for (std::size_t j : nz) reduced[j] -= f * a[r][j];
      objective += f * rhs[r];
    }
    basis[r] = q;
  }

  // Zero-level artificials are pivoted out where some real column allows
  // it; rows with none are redundant and keep their artificial.
  void expel_artificials() {
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t m, n, width;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<bool> flipped;
  std::vector<std::size_t> basis;
  std::vector<Rational> reduced;
  Rational objective;
  int pivots = 0;
};

}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  if (problem.rhs.size() != problem.rows.size() ||
      static_cast<int>(problem.cost.size()) != problem.num_vars) {
    throw PreconditionError("LP dimensions are inconsistent");
  }
  Tableau t(problem);
  LpResult result;

  std::vector<Rational> phase1(t.width);
  for (std::size_t i = 0; i < t.m; ++i) phase1[t.n + i] = 1;
  t.price(phase1);
  t.optimize(t.width);
  if (sgn(t.objective) > 0) {
    result.status = LpStatus::kInfeasible;
    result.pivots = t.pivots;
    return result;
  }
  t.expel_artificials();

  std::vector<Rational> phase2(t.width);
  for (std::size_t j = 0; j < t.n; ++j) phase2[j] = problem.cost[j];
  t.price(phase2);
  bool bounded = t.optimize(t.n);
  result.pivots = t.pivots;
  if (!bounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.objective = t.objective;
  result.x.assign(t.n, Rational(0));
  for (std::size_t i = 0; i < t.m; ++i) {
    if (t.basis[i] < t.n) result.x[t.basis[i]] = t.rhs[i];
  }
  result.duals.resize(t.m);
  for (std::size_t i = 0; i < t.m; ++i) {
    Rational y = -t.reduced[t.n + i];
    result.duals[i] = t.flipped[i] ? Rational(-y) : y;
  }
  return result;
}

mpz_class denominator_lcm(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const Rational& v : values) {
    mpz_class d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::int64_t to_int64(const mpz_class& value) {
  if (!value.fits_slong_p()) throw InternalError("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace polywit
