// Copyright 2026 The effecta Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "effecta/polytope.hpp"
#include "effecta/rational.hpp"

namespace effecta {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    RationalVector point;
};

namespace detail {

/// Dense simplex tableau over the rationals. Bland's rule on both the
/// entering and leaving choice, so it terminates on degenerate problems.
class Tableau {
  public:
    Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols) {}

    /// Maximizes cost . x over columns with allowed[j]; returns false if unbounded.
    bool maximize(const RationalVector &cost, const std::vector<bool> &allowed) {
        for (;;) {
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_ && entering == cols_; ++j) {
                if (!allowed[j] || is_basic(j)) continue;
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows_.size(); ++i) {
                    if (sgn(rows_[i][j]) != 0) reduced -= cost[basis_[i]] * rows_[i][j];
                }
                if (sgn(reduced) > 0) entering = j;
            }
            if (entering == cols_) return true;
            std::size_t leaving = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (sgn(rows_[i][entering]) <= 0) continue;
                Rational ratio = rows_[i][cols_] / rows_[i][entering];
                if (leaving == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / rows_[r][c];
        for (auto &x : rows_[r]) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || sgn(rows_[i][c]) == 0) continue;
            Rational f = rows_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j) {
                if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
            }
        }
        basis_[r] = c;
    }

    [[nodiscard]] bool is_basic(std::size_t j) const {
        for (auto b : basis_) {
            if (b == j) return true;
        }
        return false;
    }

    [[nodiscard]] Rational column_value(std::size_t j) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] == j) return rows_[i][cols_];
        }
        return 0;
    }

    std::vector<RationalVector> &rows() { return rows_; }
    std::vector<std::size_t> &basis() { return basis_; }

  private:
    std::vector<RationalVector> rows_; // each row: cols_ coefficients then rhs
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

} // namespace detail

/// Exact two-phase simplex: maximize objective . y subject to the half-spaces
/// and y >= 0.
inline LpResult maximize(const RationalVector &objective, const std::vector<HalfSpace> &constraints) {
    const std::size_t d = objective.size();
    const std::size_t m = constraints.size();
    // Columns: y (d), slacks (m), artificials (m).
    const std::size_t cols = d + 2 * m;
    std::vector<RationalVector> rows(m, RationalVector(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto &h = constraints[i];
        int sign = sgn(h.bound) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < d; ++j) rows[i][j] = sign * h.normal.at(j);
        rows[i][d + i] = sign;
        rows[i][cols] = sign * h.bound;
        if (sign < 0) {
            rows[i][d + m + i] = 1;
            basis[i] = d + m + i;
        } else {
            basis[i] = d + i;
        }
    }
    detail::Tableau tab(std::move(rows), std::move(basis), cols);

    std::vector<bool> all(cols, true);
    RationalVector phase1(cols, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[d + m + i] = -1;
    tab.maximize(phase1, all);
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(tab.column_value(d + m + i)) != 0) return {LpStatus::Infeasible, 0, {}};
    }
    // Pivot zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis()[r] < d + m) continue;
        for (std::size_t j = 0; j < d + m; ++j) {
            if (sgn(tab.rows()[r][j]) != 0 && !tab.is_basic(j)) {
                tab.pivot(r, j);
                break;
            }
        }
    }
    std::vector<bool> allowed(cols, false);
    for (std::size_t j = 0; j < d + m; ++j) allowed[j] = true;
    RationalVector phase2(cols, Rational(0));
    for (std::size_t j = 0; j < d; ++j) phase2[j] = objective[j];
    if (!tab.maximize(phase2, allowed)) return {LpStatus::Unbounded, 0, {}};
    LpResult out{LpStatus::Optimal, 0, RationalVector(d)};
    for (std::size_t j = 0; j < d; ++j) {
        out.point[j] = tab.column_value(j);
        out.value += objective[j] * out.point[j];
    }
    return out;
}

inline LpResult minimize(const RationalVector &objective, const std::vector<HalfSpace> &constraints) {
    RationalVector neg(objective.size());
    for (std::size_t j = 0; j < objective.size(); ++j) neg[j] = -objective[j];
    LpResult r = maximize(neg, constraints);
    r.value = -r.value;
    return r;
}

} // namespace effecta
