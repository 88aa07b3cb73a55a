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
    return ErrorKind::MalformedTable;
}

} // namespace

TEST_CASE("rationals print as p/q and parse back") {
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(fixtures::ratio(2, 6)) == "1/3");
    CHECK(parse_rational("4/6") == fixtures::ratio(2, 3));
    CHECK(parse_rational("-3") == -3);
    CHECK(kind_of([] { (void)parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void)parse_rational("x"); }) == ErrorKind::ParseError);
}

TEST_CASE("algebra documents round-trip losslessly") {
    for (const auto &e : standard_zoo()) {
        auto m = generate(e.spec);
        INFO(e.id);
        CHECK(algebra_from_json(to_json(m)) == m);
        CHECK(algebra_from_json(parse_json(dump_algebra(m))) == m);
    }
}

TEST_CASE("algebra document layout") {
    auto c1 = generate(FamilySpec::chain(1));
    CHECK(to_json(c1).dump() == R"({"elements":["0","1"],"zero":"0","one":"1","sum":[["0","0","0"],["0","1","1"]]})");
}

TEST_CASE("malformed documents") {
    CHECK(kind_of([] { (void)parse_json("{"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { (void)algebra_from_json(parse_json(R"({"elements":["0","1"],"zero":"0"})")); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] {
              (void)algebra_from_json(parse_json(R"({"elements":["0","1"],"zero":"0","one":"1","sum":[["0","x","1"]]})"));
          }) == ErrorKind::ParseError);
    CHECK(kind_of([] {
              (void)algebra_from_json(parse_json(R"({"elements":["0","1"],"zero":"0","one":"1","sum":[["0","1"]]})"));
          }) == ErrorKind::ParseError);
    // Well-formed JSON, but not an effect algebra.
    CHECK(kind_of([] {
              (void)algebra_from_json(parse_json(R"({"elements":["0","1"],"zero":"0","one":"1","sum":[]})"));
          }) == ErrorKind::AxiomViolation);
    CHECK(kind_of([] { (void)read_json_file("/nonexistent/file.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("states and polytopes serialize with p/q strings") {
    auto c3 = generate(FamilySpec::chain(3));
    auto poly = state_polytope(c3);
    auto j = to_json(c3, poly.vertices[0]);
    CHECK(j.dump() == R"({"values":{"0":"0/1","1":"1/3","2":"2/3","3":"1/1"}})");
    CHECK(state_values_from_json(c3, j) == poly.vertices[0].values);
    auto partial = parse_json(R"({"values":{"0":"0/1","1":"1/3"}})");
    CHECK_FALSE(is_state(c3, state_values_from_json(c3, partial)).ok);
    auto pj = to_json(c3, poly);
    CHECK(pj["dimension"] == 0);
    CHECK(pj["vertices"].size() == 1);
    CHECK(pj["constraints"].size() == poly.constraints.size());
    CHECK(pj["constraints"][0]["relation"] == "=");
}

TEST_CASE("observables serialize") {
    auto c3 = generate(FamilySpec::chain(3));
    auto x = observable_from_json(c3, parse_json(R"({"support":["0/1","1/1"],"values":["2","1"]})"));
    CHECK(x.values() == std::vector<Element>{2, 1});
    CHECK(to_json(c3, x).dump() == R"({"support":["0/1","1/1"],"values":["2","1"]})");
    CHECK(kind_of([&] { (void)observable_from_json(c3, parse_json(R"({"support":["0/1"],"values":["9"]})")); }) ==
          ErrorKind::ParseError);
}

TEST_CASE("representations round-trip") {
    auto check = [](const Representation &rep) {
        auto back = representation_from_json(to_json(rep));
        CHECK(back.tribe().functions() == rep.tribe().functions());
        CHECK(back.tribe().carrier() == rep.tribe().carrier());
        CHECK(back.h_map() == rep.h_map());
        CHECK(back.omega0() == rep.omega0());
        CHECK(back.ideal() == rep.ideal());
        CHECK(back.target() == rep.target());
    };
    check(canonical_representation(generate(FamilySpec::boolean(2))));
    check(fixtures::quotient_rep());
    check(fixtures::nonregular_rep());
}

TEST_CASE("spectral report format") {
    auto b2 = generate(FamilySpec::boolean(2));
    auto rep = canonical_representation(b2);
    auto a = *b2.find("10");
    auto j = to_json(b2, spectral_measure(rep, a));
    CHECK(j["element"] == "10");
    CHECK(j["support"] == Json::array({"0/1", "1/1"}));
    CHECK(j["masses"]["1/1"] == "10");
    CHECK(j["masses"]["0/1"] == "01");
}

TEST_CASE("suite selection") {
    CHECK(parse_suites("all") == suite_names());
    CHECK(parse_suites("rdp,states") == std::vector<std::string>{"rdp", "states"});
    CHECK(kind_of([] { (void)parse_suites("rdp,nope"); }) == ErrorKind::ParseError);
}

TEST_CASE("C3 passes every suite") {
    auto r = run_checks(generate(FamilySpec::chain(3)), "C3", suite_names());
    CHECK_FALSE(r.any_failed());
    for (const auto &rec : r.records()) CHECK(rec.status != Status::Skip);
}

TEST_CASE("MO2 fails RDP with the quadruple and skips downstream suites") {
    auto r = run_checks(generate(parse_family("hsum(boolean2,boolean2)")), "MO2", suite_names());
    CHECK(r.any_failed());
    bool saw_rdp = false;
    for (const auto &rec : r.records()) {
        if (rec.suite == "rdp") {
            saw_rdp = true;
            CHECK(rec.status == Status::Fail);
            CHECK(rec.detail == "10_1 + 01_1 = 10_2 + 01_2 has no refinement");
        }
        if (rec.suite == "representation" || rec.suite == "spectral") CHECK(rec.status == Status::Skip);
    }
    CHECK(saw_rdp);
}

TEST_CASE("Boolean 2^2 spectral suite lists four measures") {
    auto r = run_checks(generate(FamilySpec::boolean(2)), "B2", {"spectral"});
    CHECK_FALSE(r.any_failed());
    std::size_t measures = 0;
    for (const auto &rec : r.records()) measures += rec.check.rfind("measure ", 0) == 0;
    CHECK(measures == 4);
}

TEST_CASE("reports are deterministic and canonically ordered") {
    auto m = generate(parse_family("product(boolean2,chain3)"));
    CheckOptions opt;
    opt.seed = 42;
    auto a = run_checks(m, "p", {"extension", "axioms", "smearing"}, opt).jsonl();
    auto b = run_checks(m, "p", {"axioms", "smearing", "extension"}, opt).jsonl();
    CHECK(a == b);
    auto r = run_checks(m, "p", suite_names(), opt);
    for (std::size_t i = 1; i < r.records().size(); ++i) {
        const auto &x = r.records()[i - 1];
        const auto &y = r.records()[i];
        REQUIRE(std::tuple(suite_rank(x.suite), x.instance, x.check) <= std::tuple(suite_rank(y.suite), y.instance, y.check));
    }
    opt.seed = 43;
    CHECK_FALSE(run_checks(m, "p", suite_names(), opt).any_failed());
}

TEST_CASE("text rendering ends with a tally") {
    auto r = run_checks(generate(FamilySpec::chain(2)), "C2", {"rdp"});
    CHECK(r.text() == "[PASS] rdp C2 rdp: " + r.records()[0].detail.substr(0) + "\n1 passed, 0 failed, 0 skipped, 0 info\n");
}
