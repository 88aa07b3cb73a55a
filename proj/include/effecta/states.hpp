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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "effecta/algebra.hpp"
#include "effecta/linalg.hpp"
#include "effecta/polytope.hpp"
#include "effecta/rational.hpp"
#include "effecta/zoo.hpp"

namespace effecta {

/// Values s(a) indexed by element id.
struct State {
    RationalVector values;

    [[nodiscard]] const Rational &operator()(Element a) const { return values.at(a); }
    friend bool operator==(const State &, const State &) = default;
    friend bool operator<(const State &x, const State &y) { return x.values < y.values; }
};

enum class Relation { Eq, Le, Ge };

/// coeffs . s (relation) rhs
struct LinearConstraint {
    RationalVector coeffs;
    Relation relation = Relation::Eq;
    Rational rhs;
};

struct StatePolytope {
    std::vector<LinearConstraint> constraints;
    /// Extremal states, lexicographic on value vectors.
    std::vector<State> vertices;
    /// Affine dimension; -1 when empty.
    int dimension = -1;

    [[nodiscard]] bool empty() const { return vertices.empty(); }
};

/// s(1) = 1 and s(a) + s(b) - s(a + b) = 0 for every defined sum (a <= b by id).
inline void state_equalities(const EffectAlgebra &m, std::vector<RationalVector> &rows, RationalVector &rhs) {
    const std::size_t n = m.size();
    RationalVector norm(n, Rational(0));
    norm[m.one()] = 1;
    rows.push_back(std::move(norm));
    rhs.emplace_back(1);
    for (const auto &[a, b, c] : m.defined_sums()) {
        RationalVector r(n, Rational(0));
        r[a] += 1;
        r[b] += 1;
        r[c] -= 1;
        rows.push_back(std::move(r));
        rhs.emplace_back(0);
    }
}

/// Bounds 0 <= x_v <= 1 rewritten over the free variables of `sys`.
inline std::vector<HalfSpace> unit_bounds(const ReducedSystem &sys) {
    std::vector<HalfSpace> hs;
    const std::size_t d = sys.dimension();
    for (const auto &e : sys.exprs) {
        RationalVector neg(d);
        for (std::size_t j = 0; j < d; ++j) neg[j] = -e.coeffs[j];
        hs.push_back({std::move(neg), e.constant});   // -(c.y) <= constant
        hs.push_back({e.coeffs, 1 - e.constant});      // c.y <= 1 - constant
    }
    return hs;
}

/// Exact H-representation and vertex set of S(M).
inline StatePolytope state_polytope(const EffectAlgebra &m, std::size_t max_size = configured_max_size()) {
    const std::size_t n = m.size();
    if (n > max_size) {
        throw Error(ErrorKind::SizeLimitExceeded,
                    "state system has " + std::to_string(n) + " variables, bound is " + std::to_string(max_size));
    }
    StatePolytope poly;
    std::vector<RationalVector> rows;
    RationalVector rhs;
    state_equalities(m, rows, rhs);
    for (std::size_t i = 0; i < rows.size(); ++i) poly.constraints.push_back({rows[i], Relation::Eq, rhs[i]});
    for (Element a = 0; a < n; ++a) {
        RationalVector unit(n, Rational(0));
        unit[a] = 1;
        poly.constraints.push_back({unit, Relation::Ge, 0});
        poly.constraints.push_back({std::move(unit), Relation::Le, 1});
    }

    ReducedSystem sys = reduce_equalities(rows, rhs, n);
    if (!sys.consistent) return poly;
    std::vector<RationalVector> points;
    if (sys.dimension() == 0) {
        RationalVector x = sys.point({});
        if (std::all_of(x.begin(), x.end(), in_unit_interval)) points.push_back(std::move(x));
    } else {
        for (auto &y : enumerate_vertices(unit_bounds(sys), sys.dimension()).vertices) {
            points.push_back(sys.point(y));
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (auto &p : points) poly.vertices.push_back(State{std::move(p)});
    if (!poly.vertices.empty()) {
        std::vector<RationalVector> diffs;
        for (std::size_t k = 1; k < poly.vertices.size(); ++k) {
            RationalVector d(n);
            for (std::size_t j = 0; j < n; ++j) d[j] = poly.vertices[k].values[j] - poly.vertices[0].values[j];
            diffs.push_back(std::move(d));
        }
        poly.dimension = static_cast<int>(matrix_rank(diffs));
    }
    return poly;
}

/// First violated state law, if any.
struct StateViolation {
    enum class Law { Coverage, Normalization, Bounds, Additivity };
    Law law;
    std::vector<Element> witnesses; // Normalization/Bounds: {a}; Additivity: {a, b, a + b}
};

struct StateCheck {
    bool ok = true;
    std::optional<StateViolation> violation;
};

/// Exact check of s(1) = 1, 0 <= s <= 1 and additivity, in that order; sums
/// are scanned lexicographically.
inline StateCheck is_state(const EffectAlgebra &m, const RationalVector &values) {
    using Law = StateViolation::Law;
    if (values.size() != m.size()) return {false, StateViolation{Law::Coverage, {}}};
    if (values[m.one()] != 1) return {false, StateViolation{Law::Normalization, {m.one()}}};
    for (Element a = 0; a < m.size(); ++a) {
        if (!in_unit_interval(values[a])) return {false, StateViolation{Law::Bounds, {a}}};
    }
    for (const auto &[a, b, c] : m.defined_sums()) {
        if (values[a] + values[b] != values[c]) return {false, StateViolation{Law::Additivity, {a, b, c}}};
    }
    return {};
}

/// On a finite algebra every increasing sequence is eventually constant at
/// its supremum, so sigma-additivity reduces to being a state. The predicate
/// also confirms monotonicity, which that reduction relies on.
inline bool is_sigma_additive(const EffectAlgebra &m, const RationalVector &values) {
    if (!is_state(m, values).ok) return false;
    for (Element a = 0; a < m.size(); ++a) {
        for (Element b = 0; b < m.size(); ++b) {
            if (m.leq(a, b) && values[a] > values[b]) return false;
        }
    }
    return true;
}

/// Restriction of a-hat to the extremal states.
struct Evaluation {
    Element element = 0;
    RationalVector values;
};

inline Evaluation evaluate(const StatePolytope &poly, Element a) {
    if (poly.empty()) throw Error(ErrorKind::EmptyStateSpace, "no states to evaluate on");
    Evaluation e{a, {}};
    for (const auto &v : poly.vertices) e.values.push_back(v.values.at(a));
    return e;
}

inline Evaluation evaluate(const EffectAlgebra &m, const StatePolytope &poly, Element a) {
    if (a >= m.size()) throw Error(ErrorKind::PreconditionFailed, "element out of range", {a});
    return evaluate(poly, a);
}

/// True iff a -> a-hat restricted to the vertices is injective.
inline bool separating(const StatePolytope &poly) {
    if (poly.empty()) return false;
    const std::size_t n = poly.vertices.front().values.size();
    std::vector<RationalVector> evals;
    for (Element a = 0; a < n; ++a) evals.push_back(evaluate(poly, a).values);
    std::sort(evals.begin(), evals.end());
    return std::adjacent_find(evals.begin(), evals.end()) == evals.end();
}

/// Convex combination of the vertices with positive integer weights drawn
/// from `rng`; exact, so the result is a state.
template <class Rng>
State random_mixture(const StatePolytope &poly, Rng &rng) {
    if (poly.empty()) throw Error(ErrorKind::EmptyStateSpace, "no vertices to mix");
    std::uniform_int_distribution<int> weight(1, 10);
    std::vector<int> w(poly.vertices.size());
    int total = 0;
    for (auto &x : w) {
        x = weight(rng);
        total += x;
    }
    const std::size_t n = poly.vertices.front().values.size();
    State s{RationalVector(n, Rational(0))};
    for (std::size_t k = 0; k < w.size(); ++k) {
        Rational lambda(w[k], total);
        lambda.canonicalize();
        for (std::size_t j = 0; j < n; ++j) s.values[j] += lambda * poly.vertices[k].values[j];
    }
    return s;
}

} // namespace effecta
