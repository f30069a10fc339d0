// Copyright 2026 The cfgkit Authors
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

#ifndef CFGKIT_SIMPLEX_HPP
#define CFGKIT_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/linear_system.hpp"

namespace cfgkit {

namespace detail {

// Dense phase-one tableau over exact rationals. Columns are the structural
// variables, then one slack per inequality row, then one artificial per row
// lacking a natural basic variable. Pivoting follows Bland's rule, so the
// method terminates without cycling.
class PhaseOne {
 public:
  explicit PhaseOne(const IneqSystem& sys) : structural_(sys.variables().size()) {
    const auto& cons = sys.constraints();
    const std::size_t rows = cons.size();

    std::vector<int> sense(rows);  // -1: <=, +1: >=, 0: =
    std::vector<Rational> rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      sense[i] = cons[i].relation == Relation::LessEq ? -1 : cons[i].relation == Relation::GreaterEq ? 1 : 0;
      rhs[i] = Rational(cons[i].rhs);
    }
    std::size_t slacks = 0;
    for (int s : sense) slacks += s != 0;

    // Rows are flipped to a nonnegative right-hand side; a <= row with
    // b >= 0 starts with its slack basic, every other row gets an artificial.
    std::vector<bool> flip(rows), needs_art(rows);
    std::size_t arts = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      flip[i] = rhs[i] < 0;
      int eff = flip[i] ? -sense[i] : sense[i];
      needs_art[i] = eff != -1;
      arts += needs_art[i];
    }
    first_art_ = structural_ + slacks;
    cols_ = first_art_ + arts;
    tab_.assign(rows, std::vector<Rational>(cols_, Rational(0)));
    rhs_.assign(rows, Rational(0));
    basis_.assign(rows, 0);

    std::size_t slack_col = structural_, art_col = first_art_;
    for (std::size_t i = 0; i < rows; ++i) {
      const Rational sign = flip[i] ? -1 : 1;
      for (const auto& [v, c] : cons[i].lhs) tab_[i][sys.position(v)] += sign * Rational(c);
      rhs_[i] = sign * rhs[i];
      if (sense[i] != 0) {
        tab_[i][slack_col] = sign * (sense[i] < 0 ? 1 : -1);
        if (!needs_art[i]) basis_[i] = slack_col;
        ++slack_col;
      }
      if (needs_art[i]) {
        tab_[i][art_col] = 1;
        basis_[i] = art_col++;
      }
    }

    cost_.assign(cols_, Rational(0));
    infeasibility_ = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis_[i] < first_art_) continue;
      for (std::size_t j = 0; j < first_art_; ++j) cost_[j] -= tab_[i][j];
      infeasibility_ += rhs_[i];
    }
  }

  /// Runs to optimality; returns the structural values when the minimum
  /// total artificial value is zero.
  std::optional<std::vector<Rational>> run() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols_) break;

      std::size_t leave = tab_.size();
      Rational best;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == tab_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // The phase-one objective is bounded below by zero.
      CFGKIT_ENSURE(leave != tab_.size(), "unbounded phase-one objective");
      pivot(leave, enter);
    }
    if (infeasibility_ != 0) return std::nullopt;
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const Rational p = tab_[r][e];
    for (auto& a : tab_[r]) a /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r || tab_[i][e] == 0) continue;
      const Rational f = tab_[i][e];
      for (std::size_t j = 0; j < cols_; ++j)
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    const Rational d = cost_[e];
    for (std::size_t j = 0; j < cols_; ++j)
      if (tab_[r][j] != 0) cost_[j] -= d * tab_[r][j];
    infeasibility_ += d * rhs_[r];
    basis_[r] = e;
  }

  std::size_t structural_;
  std::size_t first_art_ = 0, cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational infeasibility_;
};

}  // namespace detail

/// Decides whether `sys` has a nonnegative rational solution and returns one.
/// Strict constraints must be eliminated first (see make_nonstrict).
inline std::optional<Solution> solve_nonneg(const IneqSystem& sys) {
  if (sys.has_strict()) throw PreconditionError("solve_nonneg: system still has strict constraints");
  auto x = detail::PhaseOne(sys).run();
  if (!x) return std::nullopt;
  Solution sol;
  for (std::size_t k = 0; k < sys.variables().size(); ++k) sol.values.emplace(sys.variables()[k], (*x)[k]);
  CFGKIT_ENSURE(sol.satisfies(sys), "simplex returned a non-solution");
  return sol;
}

}  // namespace cfgkit

#endif  // CFGKIT_SIMPLEX_HPP
