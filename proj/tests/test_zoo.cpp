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

#include <cstdlib>

#include <catch_amalgamated.hpp>

#include "effecta/zoo.hpp"

using namespace effecta;

TEST_CASE("family specs parse in several spellings") {
    CHECK(parse_family("chain(3)").to_string() == "chain(3)");
    CHECK(parse_family("chain3").to_string() == "chain(3)");
    CHECK(parse_family("chain 3").to_string() == "chain(3)");
    CHECK(parse_family("interval(1,2)").to_string() == "interval(1,2)");
    CHECK(parse_family("product(chain2,chain3)").to_string() == "product(chain(2),chain(3))");
    CHECK(parse_family("hsum(boolean2,boolean2)").to_string() == "horizontal-sum(boolean(2),boolean(2))");
    CHECK(parse_family_words({"product", "chain2", "chain3"}).to_string() == "product(chain(2),chain(3))");
    CHECK(parse_family_words({"chain", "3"}).to_string() == "chain(3)");
    CHECK_THROWS_AS(parse_family("tree(3)"), Error);
    CHECK_THROWS_AS(parse_family("chain("), Error);
}

TEST_CASE("chain(1) is the two-element algebra") {
    auto m = generate(FamilySpec::chain(1));
    CHECK(m.size() == 2);
    CHECK(m.supplement(m.zero()) == m.one());
}

TEST_CASE("interval(1,2) is the 6-element box with componentwise sums") {
    auto m = generate(FamilySpec::interval({1, 2}));
    REQUIRE(m.size() == 6);
    for (int i = 0; i <= 1; ++i) {
        for (int j = 0; j <= 2; ++j) {
            auto a = m.find("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            REQUIRE(a);
            for (int k = 0; k <= 1; ++k) {
                for (int l = 0; l <= 2; ++l) {
                    auto b = *m.find("(" + std::to_string(k) + "," + std::to_string(l) + ")");
                    auto s = m.sum(*a, b);
                    bool fits = i + k <= 1 && j + l <= 2;
                    REQUIRE(s.has_value() == fits);
                    if (fits) {
                        REQUIRE(m.label(*s) == "(" + std::to_string(i + k) + "," + std::to_string(j + l) + ")");
                    }
                }
            }
        }
    }
}

TEST_CASE("horizontal sum of two four-element Boolean algebras is MO2") {
    auto m = generate(parse_family("horizontal-sum(boolean(2),boolean(2))"));
    CHECK(m.labels() == std::vector<std::string>{"0", "10_1", "01_1", "10_2", "01_2", "1"});
    // Only a + a' = 1 and b + b' = 1 besides sums with 0.
    std::size_t nontrivial = 0;
    for (const auto &[a, b, c] : m.defined_sums()) nontrivial += a != m.zero() && b != m.zero();
    CHECK(nontrivial == 2);
}

TEST_CASE("product sizes multiply") {
    CHECK(generate(parse_family("product(chain2,chain3)")).size() == 12);
    CHECK(generate(parse_family("product(boolean2,chain3)")).size() == 16);
}

TEST_CASE("predicted sizes match generated algebras") {
    for (const auto &e : standard_zoo()) {
        INFO(e.id);
        CHECK(e.spec.predicted_size() == generate(e.spec).size());
    }
}

TEST_CASE("size bound") {
    CHECK_THROWS_AS(generate(FamilySpec::chain(64)), Error);
    CHECK(generate(FamilySpec::chain(63)).size() == 64);
    try {
        (void)generate(FamilySpec::chain(5), 4);
        FAIL("expected SizeLimitExceeded");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SizeLimitExceeded);
    }
    ::setenv("EFFECTA_MAX_SIZE", "200", 1);
    CHECK(configured_max_size() == 200);
    CHECK(generate(FamilySpec::chain(100)).size() == 101);
    ::setenv("EFFECTA_MAX_SIZE", "junk", 1);
    CHECK(configured_max_size() == kDefaultMaxSize);
    ::unsetenv("EFFECTA_MAX_SIZE");
    CHECK(configured_max_size() == kDefaultMaxSize);
}

TEST_CASE("zoo covers the required families") {
    auto zoo = standard_zoo();
    auto has = [&](const std::string &id) {
        return std::any_of(zoo.begin(), zoo.end(), [&](const ZooEntry &e) { return e.id == id; });
    };
    for (int n = 1; n <= 8; ++n) CHECK(has("C" + std::to_string(n)));
    for (int k = 2; k <= 4; ++k) CHECK(has("B" + std::to_string(k)));
    CHECK(has("MO2"));
    std::size_t largest = 0;
    for (const auto &e : zoo) largest = std::max(largest, e.spec.predicted_size());
    CHECK(largest == 64);
}
