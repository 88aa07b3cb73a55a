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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace effecta;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ParseError;
}

FuzzyFunction fn(std::initializer_list<Rational> xs) { return FuzzyFunction(xs); }

} // namespace

TEST_CASE("support on Omega0") {
    PointSet all{0, 1, 2};
    CHECK(support(fn({0, 0, 0}), all).empty());
    CHECK(support(fn({1, 0, 1}), PointSet{0, 1}) == PointSet{0});
    CHECK(support(fn({Rational(1, 2), 0, Rational(1, 4)}), all) == PointSet{0, 2});
}

TEST_CASE("effect-tribe validation") {
    CHECK_NOTHROW(fixtures::thirds_tribe());
    // (2/3, 1/3) without its complement.
    CHECK(kind_of([] {
              (void)EffectTribe::make({"w1", "w2"}, {fn({0, 0}), fn({Rational(2, 3), Rational(1, 3)}), fn({1, 1})});
          }) == ErrorKind::NotATribe);
    // 1/4 + 1/4 = 1/2 is missing.
    CHECK(kind_of([] {
              (void)EffectTribe::make({"w"}, {fn({0}), fn({Rational(1, 4)}), fn({Rational(3, 4)}), fn({1})});
          }) == ErrorKind::NotATribe);
    CHECK(kind_of([] { (void)EffectTribe::make({"w"}, {fn({0}), fn({2}), fn({1})}); }) == ErrorKind::NotATribe);
}

TEST_CASE("canonical representation of Boolean 2^2") {
    auto m = generate(FamilySpec::boolean(2));
    auto rep = canonical_representation(m);
    CHECK(rep.points() == 2);
    CHECK(rep.tribe().carrier() == std::vector<std::string>{"s1", "s2"});
    std::vector<FuzzyFunction> expected{fn({0, 0}), fn({0, 1}), fn({1, 0}), fn({1, 1})};
    auto got = rep.tribe().functions();
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    for (Element a = 0; a < m.size(); ++a) CHECK(rep.h(a) == a);
    auto sigma = b0(rep);
    CHECK(sigma.sets.size() == 4);
    CHECK(sigma.atoms == std::vector<PointSet>{{0}, {1}});
    CHECK(sharp_image(rep).holds);
}

TEST_CASE("canonical representation of C3") {
    auto m = generate(FamilySpec::chain(3));
    auto rep = canonical_representation(m);
    CHECK(rep.points() == 1);
    for (Element k = 0; k <= 3; ++k) CHECK(rep.tribe().function(k) == fn({fixtures::ratio(static_cast<long>(k), 3)}));
    auto sigma = b0(rep);
    CHECK(sigma.sets == std::vector<PointSet>{{}, {0}});
    auto img = sharp_image(rep, sigma);
    CHECK(img.holds);
    CHECK(img.image == std::vector<Element>{0, 3});
}

TEST_CASE("canonical representation preconditions") {
    auto mo2 = generate(parse_family("hsum(boolean2,boolean2)"));
    CHECK(kind_of([&] { (void)canonical_representation(mo2); }) == ErrorKind::RdpRequired);
    auto c3 = generate(FamilySpec::chain(3));
    StatePolytope none;
    CHECK(kind_of([&] { (void)canonical_representation(c3, none); }) == ErrorKind::EmptyStateSpace);
    // A hand-made vertex list that gives 1 and 2 the same value.
    StatePolytope collapsed;
    collapsed.vertices.push_back(State{{0, Rational(1, 2), Rational(1, 2), 1}});
    CHECK(kind_of([&] { (void)canonical_representation(c3, collapsed); }) == ErrorKind::NonSeparatingStates);
}

TEST_CASE("B0 of the thirds tribe is trivial and its non-constant member is not measurable") {
    auto rep = identity_representation(fixtures::thirds_tribe());
    auto sigma = b0(rep);
    CHECK(sigma.sets == std::vector<PointSet>{{}, {0, 1}});
    CHECK(sigma.atoms.size() == 1);
    CHECK_FALSE(measurable(sigma, fn({Rational(2, 3), Rational(1, 3)})));
    CHECK(measurable(sigma, fn({1, 1})));
    CHECK(measurable(sigma, fn({0, 0})));
    // The 4-element algebra is Boolean: f is sharp there, but h(B0) = {0, 1}.
    auto img = sharp_image(rep, sigma);
    CHECK_FALSE(img.holds);
    CHECK(img.missing.size() == 2);
    CHECK_FALSE(regular_hypotheses(rep, sigma).all_measurable);
}

TEST_CASE("measurability of characteristic functions of B0 sets") {
    for (const auto &m : fixtures::rdp_zoo()) {
        auto rep = canonical_representation(m);
        auto sigma = b0(rep);
        for (const auto &a : sigma.sets) REQUIRE(measurable(sigma, indicator(rep.points(), a)));
    }
}

TEST_CASE("sandwich") {
    auto m = generate(FamilySpec::boolean(2));
    auto rep = canonical_representation(m);
    auto &t = rep.tribe();
    auto zero = *t.find(fn({0, 0}));
    auto one = *t.find(fn({1, 1}));
    auto a = *m.find("10");
    auto s = sandwich(rep, zero, one, a);
    CHECK(t.function(s) == evaluate(state_polytope(m), a).values);
    CHECK(sandwich(rep, s, s, a) == s);
    CHECK(kind_of([&] { (void)sandwich(rep, one, zero, a); }) == ErrorKind::PreconditionFailed);
    CHECK(kind_of([&] { (void)sandwich(rep, s, s, m.one()); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("sandwich returns a member of T between f and g on every zoo instance") {
    for (const auto &m : fixtures::rdp_zoo()) {
        if (m.size() > 16) continue;
        auto rep = canonical_representation(m);
        const auto &t = rep.tribe();
        for (std::size_t f = 0; f < t.size(); ++f) {
            for (std::size_t g = 0; g < t.size(); ++g) {
                if (!pointwise_leq(t.function(f), t.function(g))) continue;
                for (Element c = 0; c < m.size(); ++c) {
                    if (!m.leq(rep.h(f), c) || !m.leq(c, rep.h(g))) continue;
                    auto s = sandwich(rep, f, g, c);
                    REQUIRE(rep.h(s) == c);
                    REQUIRE(pointwise_leq(t.function(f), t.function(s)));
                    REQUIRE(pointwise_leq(t.function(s), t.function(g)));
                }
            }
        }
    }
}

TEST_CASE("regularity") {
    auto r = check_regular(fixtures::nonregular_rep());
    REQUIRE_FALSE(r.holds);
    CHECK(fixtures::nonregular_rep().tribe().function(*r.witness) == fn({Rational(1, 2), Rational(1, 2), 0}));

    // Constants {0, 1/3, 2/3, 1} on two points onto C3.
    std::vector<FuzzyFunction> constants;
    for (int k = 0; k <= 3; ++k) constants.push_back(constant_function(2, fixtures::ratio(k, 3)));
    auto rep = Representation::make(EffectTribe::make({"w1", "w2"}, constants), generate(FamilySpec::chain(3)),
                                    {0, 1, 2, 3}, {0, 1}, {{}});
    CHECK(check_regular(rep).holds);
    CHECK(check_regular(fixtures::quotient_rep()).holds);
}

TEST_CASE("ideal congruence") {
    CHECK(check_ideal_congruence(fixtures::quotient_rep()).holds);
    auto too_big = fixtures::quotient_rep({{}, {0}, {1}, {0, 1}});
    auto r = check_ideal_congruence(too_big);
    REQUIRE_FALSE(r.holds);
    auto [f, g] = *r.witness;
    CHECK(too_big.h(f) != too_big.h(g));
}

TEST_CASE("the quotient representation satisfies the sharp-image hypotheses") {
    auto rep = fixtures::quotient_rep();
    auto sigma = b0(rep);
    CHECK(sigma.sets.size() == 4);
    CHECK(regular_hypotheses(rep, sigma).all());
    CHECK(sharp_image(rep, sigma).holds);
    CHECK(check_regular(rep).holds);
}

TEST_CASE("canonical representations are bijective, regular and congruent on the zoo") {
    for (const auto &m : fixtures::rdp_zoo()) {
        auto rep = canonical_representation(m);
        auto sigma = b0(rep);
        INFO(m.size());
        for (Element a = 0; a < m.size(); ++a) REQUIRE(rep.preimage(a).size() == 1);
        REQUIRE(check_regular(rep).holds);
        REQUIRE(check_ideal_congruence(rep).holds);
        REQUIRE(sharp_image(rep, sigma).holds);
        REQUIRE(sigma.sets == sigma.s0);
        REQUIRE(sigma_algebra_failure(rep.points(), sigma.sets) == std::nullopt);
        // max{f, g} in T maps to the join.
        const auto &t = rep.tribe();
        for (std::size_t f = 0; f < t.size(); ++f) {
            for (std::size_t g = 0; g < t.size(); ++g) {
                FuzzyFunction mx(rep.points());
                for (std::size_t p = 0; p < mx.size(); ++p) mx[p] = std::max(t.function(f)[p], t.function(g)[p]);
                auto idx = t.find(mx);
                auto join = m.join(rep.h(f), rep.h(g));
                if (idx && join) REQUIRE(rep.h(*idx) == *join);
            }
        }
    }
}

TEST_CASE("representation validation") {
    auto tribe = fixtures::thirds_tribe();
    auto c1 = fixtures::chain1();
    // h(1) = 0.
    CHECK(kind_of([&] { (void)Representation::make(tribe, c1, {0, 0, 0, 0}, {0, 1}, {{}}); }) ==
          ErrorKind::InvalidRepresentation);
    // f + g = 1 but h(f) + h(g) = 1 + 1 is undefined in the two-element chain.
    CHECK(kind_of([&] { (void)Representation::make(tribe, c1, {0, 1, 1, 1}, {0, 1}, {{}}); }) ==
          ErrorKind::InvalidRepresentation);
    // Ideal not hereditary.
    CHECK(kind_of([&] { (void)fixtures::quotient_rep({{}, {0, 1}}); }) == ErrorKind::InvalidRepresentation);
}

TEST_CASE("adding a null point keeps the representation regular") {
    auto m = generate(FamilySpec::boolean(2));
    auto ext = extend_with_null_point(canonical_representation(m));
    CHECK(ext.points() == 3);
    CHECK(ext.tribe().size() == 8);
    CHECK(check_regular(ext).holds);
    // Functions differing only at the null point differ outside Omega0.
    CHECK(check_ideal_congruence(ext).holds);
    CHECK(sharp_image(ext).holds);
}
