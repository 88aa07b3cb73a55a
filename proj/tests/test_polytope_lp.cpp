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

#include <random>

#include <catch_amalgamated.hpp>

#include "effecta/lp.hpp"
#include "effecta/polytope.hpp"

using namespace effecta;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
    RationalVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

/// 0 <= y_j <= hi for every coordinate.
std::vector<HalfSpace> box(std::size_t d, int hi) {
    std::vector<HalfSpace> hs;
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector e(d, Rational(0));
        e[j] = 1;
        hs.push_back({e, Rational(hi)});
        e[j] = -1;
        hs.push_back({e, Rational(0)});
    }
    return hs;
}

Rational inner(const RationalVector &a, const RationalVector &b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

TEST_CASE("unit square has four vertices") {
    auto r = enumerate_vertices(box(2, 1), 2);
    CHECK_FALSE(r.unbounded);
    CHECK(r.vertices == std::vector<RationalVector>{vec({0, 0}), vec({0, 1}), vec({1, 0}), vec({1, 1})});
}

TEST_CASE("cut square") {
    auto hs = box(2, 1);
    hs.push_back({vec({1, 1}), Rational(3, 2)});
    auto r = enumerate_vertices(hs, 2);
    std::vector<RationalVector> expected{vec({0, 0}), vec({0, 1}), {Rational(1, 2), Rational(1)},
                                         vec({1, 0}), {Rational(1), Rational(1, 2)}};
    std::sort(expected.begin(), expected.end());
    CHECK(r.vertices == expected);
}

TEST_CASE("empty and unbounded polyhedra") {
    auto hs = box(1, 1);
    hs.push_back({vec({-1}), Rational(-2)}); // y >= 2
    CHECK(enumerate_vertices(hs, 1).vertices.empty());
    std::vector<HalfSpace> ray{{vec({-1}), Rational(0)}};
    CHECK(enumerate_vertices(ray, 1).unbounded);
}

TEST_CASE("textbook LP") {
    // max x + y s.t. x + 2y <= 4, 3x + y <= 6.
    auto r = maximize(vec({1, 1}), {{vec({1, 2}), Rational(4)}, {vec({3, 1}), Rational(6)}});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.point == RationalVector{Rational(8, 5), Rational(6, 5)});
}

TEST_CASE("LP detects infeasible and unbounded problems") {
    CHECK(maximize(vec({1}), {{vec({1}), Rational(1)}, {vec({-1}), Rational(-2)}}).status == LpStatus::Infeasible);
    CHECK(maximize(vec({1}), {{vec({-1}), Rational(1)}}).status == LpStatus::Unbounded);
    auto r = minimize(vec({1, 1}), {{vec({-1, -1}), Rational(-3)}});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 3);
}

TEST_CASE("LP optimum equals the best enumerated vertex on random polytopes") {
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto hs = box(d, 2);
        for (int k = 0; k < 3; ++k) {
            RationalVector a(d);
            for (auto &x : a) x = coef(rng);
            hs.push_back({a, Rational(coef(rng) + 3)});
        }
        RationalVector c(d);
        for (auto &x : c) x = coef(rng);
        auto vertices = enumerate_vertices(hs, d).vertices;
        auto lp = maximize(c, hs);
        if (vertices.empty()) {
            REQUIRE(lp.status == LpStatus::Infeasible);
            continue;
        }
        REQUIRE(lp.status == LpStatus::Optimal);
        Rational best = inner(c, vertices.front());
        for (const auto &v : vertices) best = std::max(best, inner(c, v));
        REQUIRE(lp.value == best);
        // Every vertex satisfies every half-space.
        for (const auto &v : vertices) {
            for (const auto &h : hs) REQUIRE(inner(h.normal, v) <= h.bound);
        }
    }
}
