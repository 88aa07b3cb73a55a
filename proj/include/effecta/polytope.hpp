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

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "effecta/error.hpp"
#include "effecta/linalg.hpp"
#include "effecta/rational.hpp"

namespace effecta {

/// normal . y <= bound
struct HalfSpace {
    RationalVector normal;
    Rational bound;
};

struct VertexEnumeration {
    /// Sorted lexicographically, without duplicates.
    std::vector<RationalVector> vertices;
    /// True when the homogenized cone has rays at infinity (polyhedron unbounded).
    bool unbounded = false;
};

namespace detail {

using TightSet = boost::dynamic_bitset<>;

struct Ray {
    RationalVector coords; // (t, y_1, ..., y_d)
    TightSet tight;
};

/// Scales to a primitive integer vector with the same direction.
inline void make_primitive(RationalVector &v) {
    mpz_class lcm = 1;
    for (const auto &x : v) {
        if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    mpz_class g = 0;
    for (auto &x : v) {
        x *= lcm;
        if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g > 1) {
        for (auto &x : v) x /= g;
    }
}

inline Rational dot(const RationalVector &a, const RationalVector &b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

} // namespace detail

/// Vertices of {y in Q^dim : normal_i . y <= bound_i} by the double
/// description method on the homogenized cone
/// {(t, y) : t >= 0, bound_i t - normal_i . y >= 0}.
///
/// The initial simplicial cone comes from the first dim + 1 independent rows;
/// remaining rows are added one at a time, combining adjacent ray pairs
/// across the new hyperplane. Adjacency is the combinatorial test: no third
/// extreme ray is tight on every row both candidates share.
inline VertexEnumeration enumerate_vertices(const std::vector<HalfSpace> &halfspaces, std::size_t dim) {
    using detail::Ray;
    std::vector<RationalVector> rows;
    rows.reserve(halfspaces.size() + 1);
    {
        RationalVector t_row(dim + 1, Rational(0));
        t_row[0] = 1;
        rows.push_back(std::move(t_row));
    }
    for (const auto &h : halfspaces) {
        RationalVector r(dim + 1);
        r[0] = h.bound;
        for (std::size_t j = 0; j < dim; ++j) r[j + 1] = -h.normal.at(j);
        rows.push_back(std::move(r));
    }
    const std::size_t m = rows.size();

    // Greedy independent subset for the initial cone.
    std::vector<std::size_t> basis;
    std::vector<RationalVector> chosen;
    for (std::size_t i = 0; i < m && basis.size() < dim + 1; ++i) {
        chosen.push_back(rows[i]);
        if (matrix_rank(chosen) == chosen.size()) {
            basis.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (basis.size() < dim + 1) {
        throw Error(ErrorKind::PreconditionFailed, "constraint system has a lineality space");
    }
    std::vector<Ray> rays;
    for (std::size_t k = 0; k <= dim; ++k) {
        RationalVector e(dim + 1, Rational(0));
        e[k] = 1;
        RationalVector r = solve_square(chosen, e);
        detail::make_primitive(r);
        rays.push_back({std::move(r), detail::TightSet(m)});
    }
    std::vector<bool> processed(m, false);
    for (std::size_t i : basis) processed[i] = true;
    for (auto &ray : rays) {
        for (std::size_t i : basis) {
            if (sgn(detail::dot(rows[i], ray.coords)) == 0) ray.tight.set(i);
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (processed[i]) continue;
        processed[i] = true;
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = detail::dot(rows[i], rays[k].coords);
            int s = sgn(val[k]);
            if (s > 0) pos.push_back(k);
            else if (s < 0) neg.push_back(k);
            else rays[k].tight.set(i);
        }
        if (neg.empty()) continue;
        std::vector<Ray> next;
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                detail::TightSet common = rays[p].tight & rays[q].tight;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k != p && k != q && common.is_subset_of(rays[k].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                RationalVector c(dim + 1);
                for (std::size_t j = 0; j <= dim; ++j) {
                    c[j] = val[p] * rays[q].coords[j] - val[q] * rays[p].coords[j];
                }
                detail::make_primitive(c);
                common.set(i);
                next.push_back({std::move(c), std::move(common)});
            }
        }
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (sgn(val[k]) >= 0) next.push_back(std::move(rays[k]));
        }
        rays = std::move(next);
    }

    VertexEnumeration out;
    for (const auto &ray : rays) {
        if (sgn(ray.coords[0]) == 0) {
            out.unbounded = true;
            continue;
        }
        RationalVector y(dim);
        for (std::size_t j = 0; j < dim; ++j) y[j] = ray.coords[j + 1] / ray.coords[0];
        out.vertices.push_back(std::move(y));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    return out;
}

} // namespace effecta
