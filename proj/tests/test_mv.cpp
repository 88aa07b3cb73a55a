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

#include <algorithm>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace effecta;

TEST_CASE("C3 is an MV-algebra with truncated addition") {
    auto m = generate(FamilySpec::chain(3));
    auto r = detect_mv(m);
    REQUIRE(r.is_mv());
    for (Element k = 0; k <= 3; ++k) {
        CHECK(r.structure->star[k] == 3 - k);
        for (Element l = 0; l <= 3; ++l) CHECK(r.structure->add(k, l) == std::min<Element>(k + l, 3));
    }
}

TEST_CASE("Boolean 2^2 is MV with oplus = join") {
    auto m = generate(FamilySpec::boolean(2));
    auto r = detect_mv(m);
    REQUIRE(r.is_mv());
    for (Element a = 0; a < 4; ++a) {
        for (Element b = 0; b < 4; ++b) CHECK(r.structure->add(a, b) == *m.join(a, b));
    }
}

TEST_CASE("MO2 is not MV and fails axiom (viii)") {
    auto m = generate(parse_family("hsum(boolean2,boolean2)"));
    auto r = detect_mv(m);
    CHECK_FALSE(r.is_mv());
    CHECK_FALSE(r.not_lattice);
    CHECK(r.failed(8));
}

TEST_CASE("products of chains are MV and oplus extends the partial sum") {
    for (const auto &e : standard_zoo()) {
        auto kind = e.spec.kind;
        bool chains = kind == FamilySpec::Kind::Chain ||
                      (kind == FamilySpec::Kind::Product &&
                       std::all_of(e.spec.parts.begin(), e.spec.parts.end(),
                                   [](const FamilySpec &p) { return p.kind == FamilySpec::Kind::Chain; }));
        if (!chains) continue;
        INFO(e.id);
        auto m = generate(e.spec);
        auto r = detect_mv(m);
        REQUIRE(r.is_mv());
        for (Element a = 0; a < m.size(); ++a) {
            for (Element b = 0; b < m.size(); ++b) {
                bool orthogonal = m.leq(a, r.structure->star[b]);
                REQUIRE(m.defined(a, b) == orthogonal);
                if (orthogonal) REQUIRE(r.structure->add(a, b) == m.sum_or_undefined(a, b));
            }
        }
    }
}

TEST_CASE("every RDP instance in the zoo is MV; the RDP failures are not") {
    // Empirical answer on the zoo only; nothing else depends on it.
    for (const auto &e : standard_zoo()) {
        auto m = generate(e.spec);
        INFO(e.id);
        CHECK(detect_mv(m).is_mv() == check_rdp(m).holds);
    }
}

TEST_CASE("axiom checker flags a broken structure") {
    auto m = generate(FamilySpec::chain(2));
    auto mv = detect_mv(m).structure.value();
    mv.oplus[1 * 3 + 1] = 1; // 1 is its own supplement, so 1 (+) 1* must be 2
    auto failures = mv_axiom_failures(mv, m.zero(), m.one());
    REQUIRE_FALSE(failures.empty());
    CHECK(std::any_of(failures.begin(), failures.end(), [](const MVAxiomFailure &f) { return f.axiom == 6; }));
}
