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

// Command-line front end: generate zoo algebras, run check suites and emit
// reports. Exit status: 0 all checks pass, 1 some check fails, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "effecta/effecta.hpp"

namespace {

using namespace effecta;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
    std::vector<std::string> family;
    std::string input;
    std::string observable;
    std::string suite = "all";
    std::string format = "text";
    std::string output;
    std::string element;
    std::uint64_t seed = 1;
    std::optional<std::size_t> max_size;
};

std::size_t size_bound(const Options &o) { return o.max_size ? *o.max_size : configured_max_size(); }

void emit(const Options &o, const std::string &text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + o.output);
    out << text;
}

EffectAlgebra load_algebra(const Options &o) {
    if (o.input.empty()) throw Error(ErrorKind::ParseError, "--input is required");
    auto m = algebra_from_json(read_json_file(o.input));
    if (m.size() > size_bound(o)) {
        throw Error(ErrorKind::SizeLimitExceeded, std::to_string(m.size()) + " elements exceed the bound " +
                                                      std::to_string(size_bound(o)));
    }
    return m;
}

std::string instance_name(const std::string &path) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.rfind('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

std::string render(const Options &o, const Report &r) { return o.format == "jsonl" ? r.jsonl() : r.text(); }

int cmd_generate(const Options &o) {
    auto spec = parse_family_words(o.family);
    emit(o, dump_algebra(generate(spec, size_bound(o))));
    return 0;
}

int cmd_check(const Options &o) {
    auto m = load_algebra(o);
    CheckOptions opt{o.seed, 10, size_bound(o)};
    Report r = run_checks(m, instance_name(o.input), parse_suites(o.suite), opt);
    emit(o, render(o, r));
    return r.any_failed() ? kExitFail : 0;
}

int cmd_smear(const Options &o) {
    auto m = load_algebra(o);
    if (o.observable.empty()) throw Error(ErrorKind::ParseError, "--observable is required");
    Observable x = observable_from_json(m, read_json_file(o.observable));
    const std::string instance = instance_name(o.input);
    Report r;
    auto poly = state_polytope(m, size_bound(o));
    auto rep = canonical_representation(m, poly);
    auto sigma = b0(rep);
    auto xi = sharp_observable(rep, sigma);
    auto kernel = smear(rep, sigma, x);
    std::vector<State> states = poly.vertices;
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < 10; ++i) states.push_back(random_mixture(poly, rng));
    for (std::size_t s = 0; s < states.size(); ++s) {
        auto check = verify_smearing(rep, x, kernel, xi, states[s]);
        std::string residuals;
        for (const auto &q : check.residuals) residuals += (residuals.empty() ? "" : " ") + to_string(q);
        std::string name = (s < poly.vertices.size() ? "vertex-" + std::to_string(s + 1)
                                                     : "mixture-" + std::to_string(s + 1 - poly.vertices.size()));
        r.add("smearing", instance, name, check.ok ? Status::Pass : Status::Fail, "residuals " + residuals);
    }
    emit(o, render(o, r));
    return r.any_failed() ? kExitFail : 0;
}

int cmd_states(const Options &o) {
    auto m = load_algebra(o);
    emit(o, to_json(m, state_polytope(m, size_bound(o))).dump(2) + "\n");
    return 0;
}

int cmd_represent(const Options &o) {
    auto m = load_algebra(o);
    emit(o, to_json(canonical_representation(m, state_polytope(m, size_bound(o)))).dump(2) + "\n");
    return 0;
}

int cmd_check_rep(const Options &o) {
    if (o.input.empty()) throw Error(ErrorKind::ParseError, "--input is required");
    Representation rep = representation_from_json(read_json_file(o.input));
    const std::string instance = instance_name(o.input);
    Report r;
    auto add = [&](const std::string &check, bool ok, std::string detail = {}) {
        r.add("representation", instance, check, ok ? Status::Pass : Status::Fail, std::move(detail));
    };
    auto sigma = b0(rep);
    std::string sets;
    for (const auto &a : sigma.sets) sets += (sets.empty() ? "" : " ") + point_set_json(rep, a).dump();
    r.add("representation", instance, "b0", Status::Info, sets);
    auto reg = check_regular(rep);
    add("regular", reg.holds, reg.holds ? "" : format_function(rep.tribe().function(*reg.witness)));
    auto cong = check_ideal_congruence(rep);
    add("ideal-congruence", cong.holds,
        cong.holds ? "" : format_function(rep.tribe().function(cong.witness->first)) + " vs " +
                              format_function(rep.tribe().function(cong.witness->second)));
    auto img = sharp_image(rep, sigma);
    add("sharp-image", img.holds,
        img.holds ? "" : "missing " + detail::join_labels(rep.target(), img.missing) + ", extra " +
                             detail::join_labels(rep.target(), img.extra));
    for (const auto &f : rep.tribe().functions()) {
        if (!measurable(sigma, f)) {
            add("measurable", false, format_function(f));
            break;
        }
    }
    auto hyp = regular_hypotheses(rep, sigma);
    r.add("representation", instance, "sharp-image-hypotheses", Status::Info, hyp.all() ? "all hold" : "not all hold");
    r.sort();
    emit(o, render(o, r));
    return r.any_failed() ? kExitFail : 0;
}

int cmd_spectral(const Options &o) {
    auto m = load_algebra(o);
    auto rep = canonical_representation(m, state_polytope(m, size_bound(o)));
    auto sigma = b0(rep);
    std::string out;
    for (Element a = 0; a < m.size(); ++a) {
        if (!o.element.empty() && m.label(a) != o.element) continue;
        out += to_json(m, spectral_measure(rep, sigma, a)).dump() + "\n";
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "unknown element \"" + o.element + "\"");
    emit(o, out);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Finite effect algebras: states, representations, observables and spectral measures"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App *sub) {
        sub->add_option("--output,-o", o.output, "Write to this file instead of stdout");
        sub->add_option("--max-size", o.max_size, "Element bound (default: EFFECTA_MAX_SIZE or 64)");
    };
    auto add_report = [&](CLI::App *sub) {
        sub->add_option("--seed", o.seed, "Seed for mixture states");
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"jsonl", "text"}));
    };

    auto *gen = app.add_subcommand("generate", "Print a zoo algebra, e.g. `generate product chain2 chain3`");
    gen->add_option("family", o.family, "Family spec")->required()->expected(1, -1);
    add_io(gen);

    auto *check = app.add_subcommand("check", "Run check suites on an algebra file");
    check->add_option("--input,-i", o.input, "Algebra JSON")->required();
    check->add_option("--suite", o.suite,
                      "all, or comma-separated: axioms,rdp,sharp,states,representation,smearing,spectral,extension");
    add_io(check);
    add_report(check);

    auto *sm = app.add_subcommand("smear", "Verify the smearing decomposition of an observable");
    sm->add_option("--input,-i", o.input, "Algebra JSON")->required();
    sm->add_option("--observable", o.observable, "Observable JSON")->required();
    add_io(sm);
    add_report(sm);

    auto *st = app.add_subcommand("states", "Print the state polytope");
    st->add_option("--input,-i", o.input, "Algebra JSON")->required();
    add_io(st);

    auto *rp = app.add_subcommand("represent", "Print the canonical representation");
    rp->add_option("--input,-i", o.input, "Algebra JSON")->required();
    add_io(rp);

    auto *cr = app.add_subcommand("check-rep", "Check a representation file");
    cr->add_option("--input,-i", o.input, "Representation JSON")->required();
    add_io(cr);
    add_report(cr);

    auto *sp = app.add_subcommand("spectral", "Print spectral measures as JSON lines");
    sp->add_option("--input,-i", o.input, "Algebra JSON")->required();
    sp->add_option("--element", o.element, "Only this element");
    add_io(sp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*gen) return cmd_generate(o);
        if (*check) return cmd_check(o);
        if (*sm) return cmd_smear(o);
        if (*st) return cmd_states(o);
        if (*rp) return cmd_represent(o);
        if (*cr) return cmd_check_rep(o);
        if (*sp) return cmd_spectral(o);
    } catch (const Error &e) {
        std::cerr << "effecta: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
