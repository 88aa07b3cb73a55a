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
#include <set>

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

struct Setup {
    EffectAlgebra m;
    StatePolytope poly;
    Representation rep;
    SigmaAlgebraB0 sigma;
    SharpSet sharp;

    explicit Setup(EffectAlgebra alg)
        : m(std::move(alg)), poly(state_polytope(m)), rep(canonical_representation(m, poly)), sigma(b0(rep)),
          sharp(sharp_elements(m)) {}
};

std::vector<State> test_states(const StatePolytope &poly, std::uint64_t seed) {
    std::vector<State> out = poly.vertices;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10; ++i) out.push_back(random_mixture(poly, rng));
    return out;
}

} // namespace

TEST_CASE("spectral measures of the named examples") {
    Setup c3(generate(FamilySpec::chain(3)));
    auto mu = spectral_measure(c3.rep, c3.sigma, 1);
    CHECK(mu.support == RationalVector{Rational(1, 3)});
    CHECK(mu.masses == std::vector<Element>{c3.m.one()});
    CHECK(spectral_integral(mu, c3.poly.vertices[0]) == Rational(1, 3));

    Setup b2(generate(FamilySpec::boolean(2)));
    // The element whose evaluation is (1, 0) on the vertex order.
    Element a = b2.m.zero();
    for (Element e = 0; e < b2.m.size(); ++e) {
        if (evaluate(b2.poly, e).values == RationalVector{1, 0}) a = e;
    }
    auto mu2 = spectral_measure(b2.rep, b2.sigma, a);
    CHECK(mu2.support == RationalVector{0, 1});
    CHECK(mu2.masses == std::vector<Element>{b2.m.supplement(a), a});
    const auto &s1 = b2.poly.vertices[0];
    CHECK(spectral_integral(mu2, s1) == s1(a));

    auto mu0 = spectral_measure(b2.rep, b2.sigma, b2.m.zero());
    CHECK(mu0.support == RationalVector{0});
    CHECK(mu0.masses == std::vector<Element>{b2.m.one()});
    CHECK(mu0.at(b2.m, BorelSet::point(0)) == b2.m.one());
    CHECK(mu0.at(b2.m, BorelSet::interval(Rational(0), false, std::nullopt, false)) == b2.m.zero());

    auto top = spectral_measure(b2.rep, b2.sigma, b2.m.one());
    CHECK(spectral_integral(top, s1) == 1);
}

TEST_CASE("level sets outside B0 are a spectral obstruction") {
    // The thirds tribe as its own representation: (2/3, 1/3) has level sets {w1}, {w2}.
    auto rep = identity_representation(fixtures::thirds_tribe());
    CHECK(kind_of([&] { (void)spectral_measure(rep, 1); }) == ErrorKind::SpectralObstruction);
}

TEST_CASE("spectral injectivity on C3 and Boolean 2^2") {
    Setup c3(generate(FamilySpec::chain(3)));
    auto measures = spectral_measures(c3.rep, c3.sigma);
    CHECK(spectral_injectivity(measures).holds);
    std::set<RationalVector> supports;
    for (const auto &mu : measures) supports.insert(mu.support);
    CHECK(supports.size() == 4);
    Setup b2(generate(FamilySpec::boolean(2)));
    CHECK(spectral_injectivity(spectral_measures(b2.rep, b2.sigma)).holds);
    auto dup = measures;
    dup[2] = dup[1];
    dup[2].element = 2;
    auto r = spectral_injectivity(dup);
    CHECK_FALSE(r.holds);
    CHECK(r.collision == std::pair<Element, Element>{1, 2});
}

TEST_CASE("sharp table") {
    Setup b2(generate(FamilySpec::boolean(2)));
    auto a = *b2.m.find("10");
    CHECK(sharp_table(b2.rep, b2.sigma, a, BorelSet::point(1)) == a);
    CHECK(sharp_table(b2.rep, b2.sigma, a, BorelSet::interval(Rational(0), true, Rational(1, 2), false)) ==
          b2.m.supplement(a));
    CHECK(sharp_table(b2.rep, b2.sigma, a, BorelSet::empty()) == b2.m.zero());
    CHECK(sharp_table(b2.rep, b2.sigma, a, BorelSet::points({Rational(0), Rational(1)})) == b2.m.one());
    Setup c3(generate(FamilySpec::chain(3)));
    CHECK(kind_of([&] { (void)sharp_table(c3.m, 1, BorelSet::point(1)); }) == ErrorKind::NotSharp);
}

TEST_CASE("phi tables are validated") {
    using Table = std::vector<std::pair<Rational, Rational>>;
    CHECK(kind_of([] { (void)PhiTransform::make(Table{{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 1}, {Rational(3, 4), Rational(1, 4)}}); }) ==
          ErrorKind::PhiNotMonotone);
    CHECK(kind_of([] { (void)PhiTransform::make(Table{{0, Rational(1, 9)}, {1, 1}}); }) ==
          ErrorKind::PhiEndpointViolation);
    CHECK(kind_of([] { (void)PhiTransform::make(Table{{0, 0}}); }) == ErrorKind::PhiEndpointViolation);
    auto phi = PhiTransform::power({Rational(1, 3)}, 2);
    CHECK(phi(Rational(1, 3)) == Rational(1, 9));
    CHECK(kind_of([&] { (void)phi(Rational(1, 2)); }) == ErrorKind::SupportNotCovered);
}

TEST_CASE("the square map moves the C3 spectral integral") {
    Setup c3(generate(FamilySpec::chain(3)));
    auto measures = spectral_measures(c3.rep, c3.sigma);
    RationalVector points{Rational(1, 3), Rational(2, 3)};
    auto phi = PhiTransform::power(points, 2);
    auto r = transform_spectral(measures, 1, phi, c3.poly);
    CHECK(r.transformed.support == RationalVector{Rational(1, 9)});
    CHECK_FALSE(r.integral_preserved);
    REQUIRE(r.witness_vertex);
    CHECK(*r.witness_vertex == 0);
    CHECK(r.witness_integral == Rational(1, 9));
    CHECK(r.witness_value == Rational(1, 3));
    CHECK(r.injective);

    auto id = transform_spectral(measures, 1, PhiTransform::identity(points), c3.poly);
    CHECK(id.transformed.same_measure(measures[1]));
    CHECK(id.integral_preserved);
}

TEST_CASE("phi cannot move spectral integrals of sharp elements") {
    Setup b2(generate(FamilySpec::boolean(2)));
    auto measures = spectral_measures(b2.rep, b2.sigma);
    for (unsigned k = 1; k <= 4; ++k) {
        auto phi = PhiTransform::power({Rational(1, 2)}, k);
        for (auto a : b2.sharp.members()) CHECK(transform_spectral(measures, a, phi, b2.poly).integral_preserved);
    }
}

TEST_CASE("spectral measures reproduce every state and determine the element") {
    for (const auto &alg : fixtures::rdp_zoo()) {
        Setup s(alg);
        auto measures = spectral_measures(s.rep, s.sigma);
        REQUIRE(spectral_injectivity(measures).holds);
        auto states = test_states(s.poly, 5);
        RationalVector points;
        for (const auto &mu : measures) {
            REQUIRE(s.m.sum_all(mu.masses) == s.m.one());
            for (auto mass : mu.masses) REQUIRE(s.sharp.contains(mass));
            for (const auto &st : states) REQUIRE(spectral_integral(mu, st) == st(mu.element));
            // Additivity over disjoint subsets of the support.
            const std::size_t k = mu.support.size();
            for (std::size_t e = 0; e < (std::size_t{1} << k) && k <= 6; ++e) {
                for (std::size_t f = 0; f < (std::size_t{1} << k); ++f) {
                    if (e & f) continue;
                    auto set = [&](std::size_t mask) {
                        RationalVector pts;
                        for (std::size_t i = 0; i < k; ++i) {
                            if (mask >> i & 1) pts.push_back(mu.support[i]);
                        }
                        return BorelSet::points(pts);
                    };
                    REQUIRE(s.m.sum(mu.at(s.m, set(e)), mu.at(s.m, set(f))) == mu.at(s.m, set(e | f)));
                }
            }
            points.insert(points.end(), mu.support.begin(), mu.support.end());
        }
        for (auto a : s.sharp.members()) {
            for (int e = 0; e < 4; ++e) {
                RationalVector pts;
                if (e & 1) pts.emplace_back(0);
                if (e & 2) pts.emplace_back(1);
                REQUIRE_NOTHROW(sharp_table(s.rep, s.sigma, a, BorelSet::points(pts)));
            }
        }
        for (unsigned k = 2; k <= 3; ++k) {
            auto phi = PhiTransform::power(points, k);
            for (const auto &mu : measures) REQUIRE(transform_spectral(measures, mu.element, phi, s.poly).injective);
        }
    }
}

TEST_CASE("state extension from Sh(M) on the named examples") {
    Setup c3(generate(FamilySpec::chain(3)));
    RationalVector forced(4, Rational(0));
    forced[3] = 1;
    auto m = make_state_on_sharp(c3.m, c3.sharp, forced);
    auto ext = extend_state(c3.rep, c3.sigma, c3.sharp, m);
    for (Element k = 0; k <= 3; ++k) CHECK(ext.state(k) == fixtures::ratio(static_cast<long>(k), 3));
    auto u = extension_uniqueness(c3.m, c3.sharp, m);
    CHECK(u.unique);

    Setup b2(generate(FamilySpec::boolean(2)));
    auto atoms = b2.sharp.atoms(b2.m);
    REQUIRE(atoms.size() == 2);
    auto quarter = state_on_sharp_from_atoms(b2.m, b2.sharp, {Rational(1, 4), Rational(3, 4)});
    auto ext2 = extend_state(b2.rep, b2.sigma, b2.sharp, quarter);
    CHECK(ext2.state(atoms[0]) == Rational(1, 4));
    CHECK(ext2.state(atoms[1]) == Rational(3, 4));
    CHECK(extension_uniqueness(b2.m, b2.sharp, quarter).unique);

    // Point mass on an atom of B0: m-hat(a) = f_a on that atom.
    Setup p(generate(parse_family("product(boolean2,chain3)")));
    auto patoms = p.sharp.atoms(p.m);
    for (std::size_t i = 0; i < patoms.size(); ++i) {
        RationalVector w(patoms.size(), Rational(0));
        w[i] = 1;
        auto point = state_on_sharp_from_atoms(p.m, p.sharp, w);
        auto e = extend_state(p.rep, p.sigma, p.sharp, point);
        // Atom i of Sh(M) is h(chi_A) for one atom A of B0(T).
        std::size_t which = p.sigma.atoms.size();
        for (std::size_t j = 0; j < p.sigma.atoms.size(); ++j) {
            if (p.rep.h(*p.rep.tribe().find(indicator(p.rep.points(), p.sigma.atoms[j]))) == patoms[i]) which = j;
        }
        REQUIRE(which < p.sigma.atoms.size());
        for (Element a = 0; a < p.m.size(); ++a) {
            CHECK(e.state(a) == p.rep.tribe().function(a)[p.sigma.atoms[which].front()]);
        }
    }
}

TEST_CASE("states on Sh(M) are validated") {
    Setup b2(generate(FamilySpec::boolean(2)));
    RationalVector bad(4, Rational(1, 2));
    bad[b2.m.zero()] = 0;
    bad[b2.m.one()] = 1;
    bad[*b2.m.find("10")] = Rational(1, 3);
    CHECK(kind_of([&] { (void)make_state_on_sharp(b2.m, b2.sharp, bad); }) == ErrorKind::NotAStateOnSharp);
    CHECK(kind_of([&] { (void)state_on_sharp_from_atoms(b2.m, b2.sharp, {1}); }) == ErrorKind::NotAStateOnSharp);
    // Bypassing validation: no state on M takes these values.
    StateOnSharp impossible{RationalVector{0, 1, 1, 1}};
    CHECK(kind_of([&] { (void)extension_uniqueness(b2.m, b2.sharp, impossible); }) ==
          ErrorKind::InfeasibleExtension);
}

TEST_CASE("extensions restrict back, are unique, and both forms agree on the zoo") {
    for (const auto &alg : fixtures::rdp_zoo()) {
        Setup s(alg);
        for (const auto &st : test_states(s.poly, 11)) {
            auto input = restrict_to_sharp(st, s.sharp);
            auto ext = extend_state(s.rep, s.sigma, s.sharp, input);
            REQUIRE(ext.state == st);
            REQUIRE(ext.spectral_form == st.values);
            REQUIRE(is_sigma_additive(s.m, ext.state.values));
            auto u = extension_uniqueness(s.m, s.sharp, input);
            REQUIRE(u.unique);
            for (Element a = 0; a < s.m.size(); ++a) REQUIRE(u.bounds[a].min == st(a));
        }
    }
}

TEST_CASE("exhaustive search finds no second sharp measure on small instances") {
    for (const auto &alg : fixtures::rdp_zoo()) {
        if (alg.size() > 16) continue;
        Setup s(alg);
        auto atoms = s.sharp.atoms(s.m);
        for (Element a = 0; a < s.m.size(); ++a) {
            auto r = alternative_spectral_measures(s.m, s.sharp, s.poly, a);
            REQUIRE(r.feasible);
            REQUIRE(r.dimension == 0);
            // The unique solution is the spectral measure, read per atom.
            auto mu = spectral_measure(s.rep, s.sigma, a);
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                Rational expected = -1;
                for (std::size_t j = 0; j < mu.support.size(); ++j) {
                    if (s.m.leq(atoms[i], mu.masses[j])) expected = mu.support[j];
                }
                REQUIRE(r.atom_values[i] == expected);
            }
        }
    }
}
