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
#include <utility>
#include <vector>

#include "effecta/rational.hpp"

namespace effecta {

/// constant + sum_j coeffs[j] * y_j over the free variables y of a reduced system.
struct AffineExpr {
    Rational constant;
    RationalVector coeffs;

    [[nodiscard]] Rational at(const RationalVector &y) const {
        Rational v = constant;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (sgn(coeffs[j]) != 0) v += coeffs[j] * y[j];
        }
        return v;
    }
};

/// Solution set of A x = b written over its free variables: every variable
/// is an affine function of y = (x_f for f in free_vars).
struct ReducedSystem {
    bool consistent = true;
    std::vector<std::size_t> free_vars;
    std::vector<AffineExpr> exprs;

    [[nodiscard]] std::size_t dimension() const { return free_vars.size(); }

    [[nodiscard]] RationalVector point(const RationalVector &y) const {
        RationalVector x;
        x.reserve(exprs.size());
        for (const auto &e : exprs) x.push_back(e.at(y));
        return x;
    }
};

/// Gauss-Jordan elimination of [rows | rhs] with pivots taken left to right.
inline ReducedSystem reduce_equalities(std::vector<RationalVector> rows, RationalVector rhs, std::size_t num_vars) {
    ReducedSystem out;
    const std::size_t m = rows.size();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(num_vars, false);
    std::size_t r = 0;
    for (std::size_t col = 0; col < num_vars && r < m; ++col) {
        std::size_t sel = m;
        for (std::size_t i = r; i < m; ++i) {
            if (sgn(rows[i][col]) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == m) continue;
        std::swap(rows[r], rows[sel]);
        std::swap(rhs[r], rhs[sel]);
        Rational inv = 1 / rows[r][col];
        for (std::size_t j = col; j < num_vars; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < num_vars; ++j) {
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
            }
            rhs[i] -= f * rhs[r];
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = true;
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (sgn(rhs[i]) != 0) {
            out.consistent = false;
            return out;
        }
    }
    std::vector<std::size_t> free_index(num_vars, num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) {
        if (!is_pivot[v]) {
            free_index[v] = out.free_vars.size();
            out.free_vars.push_back(v);
        }
    }
    const std::size_t d = out.free_vars.size();
    out.exprs.assign(num_vars, AffineExpr{Rational(0), RationalVector(d, Rational(0))});
    for (std::size_t v = 0; v < num_vars; ++v) {
        if (!is_pivot[v]) out.exprs[v].coeffs[free_index[v]] = 1;
    }
    for (std::size_t i = 0; i < r; ++i) {
        AffineExpr &e = out.exprs[pivot_col_of_row[i]];
        e.constant = rhs[i];
        for (std::size_t k = 0; k < d; ++k) {
            e.coeffs[k] = -rows[i][out.free_vars[k]];
        }
    }
    return out;
}

/// Rank of a set of row vectors.
inline std::size_t matrix_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves the square system B x = rhs; nullopt-like empty vector when singular.
inline RationalVector solve_square(std::vector<RationalVector> b, RationalVector rhs) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = col; i < n; ++i) {
            if (sgn(b[i][col]) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == n) return {};
        std::swap(b[col], b[sel]);
        std::swap(rhs[col], rhs[sel]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || sgn(b[i][col]) == 0) continue;
            Rational f = b[i][col] / b[col][col];
            for (std::size_t j = col; j < n; ++j) b[i][j] -= f * b[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= b[i][i];
    return rhs;
}

} // namespace effecta
