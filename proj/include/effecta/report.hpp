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
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "effecta/io.hpp"
#include "effecta/mv.hpp"
#include "effecta/rdp.hpp"
#include "effecta/sharp.hpp"
#include "effecta/spectral.hpp"

namespace effecta {

enum class Status { Pass, Fail, Skip, Info };

inline const char *to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
    case Status::Info: return "info";
    }
    return "?";
}

struct Record {
    std::string suite;
    std::string instance;
    std::string check;
    Status status = Status::Info;
    std::string detail;
};

inline const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"axioms",         "rdp",      "sharp",    "states",
                                                "representation", "smearing", "spectral", "extension"};
    return names;
}

inline std::size_t suite_rank(const std::string &suite) {
    const auto &names = suite_names();
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), suite) - names.begin());
}

/// "all" or a comma-separated list of suite names.
inline std::vector<std::string> parse_suites(const std::string &text) {
    if (text == "all") return suite_names();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (suite_rank(item) == suite_names().size()) throw Error(ErrorKind::ParseError, "unknown suite \"" + item + "\"");
        out.push_back(item);
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "no suite selected");
    return out;
}

class Report {
  public:
    void add(Record r) { records_.push_back(std::move(r)); }

    void add(const std::string &suite, const std::string &instance, const std::string &check, Status status,
             std::string detail = {}) {
        records_.push_back({suite, instance, check, status, std::move(detail)});
    }

    void append(const Report &other) { records_.insert(records_.end(), other.records_.begin(), other.records_.end()); }

    /// Canonical order: suite, instance, check.
    void sort() {
        std::stable_sort(records_.begin(), records_.end(), [](const Record &a, const Record &b) {
            auto ka = std::tuple(suite_rank(a.suite), a.instance, a.check);
            auto kb = std::tuple(suite_rank(b.suite), b.instance, b.check);
            return ka < kb;
        });
    }

    [[nodiscard]] bool any_failed() const {
        return std::any_of(records_.begin(), records_.end(), [](const Record &r) { return r.status == Status::Fail; });
    }

    [[nodiscard]] const std::vector<Record> &records() const noexcept { return records_; }

    [[nodiscard]] std::string jsonl() const {
        std::string out;
        for (const auto &r : records_) {
            Json j{{"suite", r.suite}, {"instance", r.instance}, {"check", r.check},
                   {"status", to_string(r.status)}, {"detail", r.detail}};
            out += j.dump() + "\n";
        }
        return out;
    }

    [[nodiscard]] std::string text() const {
        std::string out;
        std::size_t counts[4] = {0, 0, 0, 0};
        for (const auto &r : records_) {
            std::string tag = to_string(r.status);
            std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
            out += "[" + tag + "] " + r.suite + " " + r.instance + " " + r.check;
            if (!r.detail.empty()) out += ": " + r.detail;
            out += "\n";
            ++counts[static_cast<int>(r.status)];
        }
        out += std::to_string(counts[0]) + " passed, " + std::to_string(counts[1]) + " failed, " +
               std::to_string(counts[2]) + " skipped, " + std::to_string(counts[3]) + " info\n";
        return out;
    }

  private:
    std::vector<Record> records_;
};

struct CheckOptions {
    std::uint64_t seed = 1;
    std::size_t mixtures = 10;
    std::size_t max_size = kDefaultMaxSize;
};

namespace detail {

inline std::string join_labels(const EffectAlgebra &m, const std::vector<Element> &xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + m.label(xs[i]);
    return out + "}";
}

inline std::string describe(const EffectAlgebra &m, const RdpInstance &q) {
    return m.label(q.a1) + " + " + m.label(q.a2) + " = " + m.label(q.b1) + " + " + m.label(q.b2) +
           " has no refinement";
}

/// Shared, lazily computed analysis of one algebra.
class Context {
  public:
    Context(const EffectAlgebra &m, const CheckOptions &opt) : m_(m), opt_(opt) {}

    const EffectAlgebra &algebra() const { return m_; }

    const RdpResult &rdp() {
        if (!rdp_) rdp_ = check_rdp(m_);
        return *rdp_;
    }

    const SharpSet &sharp() {
        if (!sharp_) sharp_ = sharp_elements(m_, rdp().holds);
        return *sharp_;
    }

    const StatePolytope &polytope() {
        if (!poly_) poly_ = state_polytope(m_, opt_.max_size);
        return *poly_;
    }

    /// Vertices followed by seeded mixtures.
    const std::vector<State> &test_states() {
        if (!states_) {
            states_.emplace(polytope().vertices);
            std::mt19937_64 rng(opt_.seed);
            for (std::size_t i = 0; i < opt_.mixtures; ++i) states_->push_back(random_mixture(polytope(), rng));
        }
        return *states_;
    }

    /// Reason the canonical representation is unavailable, if it is.
    std::optional<std::string> representation_gate() {
        if (!rdp().holds) return "RDP fails";
        if (polytope().empty()) return "state space is empty";
        if (!separating(polytope())) return "states do not separate elements";
        return std::nullopt;
    }

    const Representation &rep() {
        if (!rep_) rep_.emplace(canonical_representation(m_, polytope()));
        return *rep_;
    }

    const SigmaAlgebraB0 &sigma() {
        if (!sigma_) sigma_ = b0(rep());
        return *sigma_;
    }

    const std::vector<SpectralMeasure> &measures() {
        if (!measures_) measures_ = spectral_measures(rep(), sigma());
        return *measures_;
    }

    std::uint64_t seed() const { return opt_.seed; }

  private:
    const EffectAlgebra &m_;
    CheckOptions opt_;
    std::optional<RdpResult> rdp_;
    std::optional<SharpSet> sharp_;
    std::optional<StatePolytope> poly_;
    std::optional<std::vector<State>> states_;
    std::optional<Representation> rep_;
    std::optional<SigmaAlgebraB0> sigma_;
    std::optional<std::vector<SpectralMeasure>> measures_;
};

using Emit = std::function<void(const std::string &check, Status, std::string)>;

inline void axioms_suite(Context &ctx, const Emit &emit) {
    const auto &m = ctx.algebra();
    emit("validate", Status::Pass, std::to_string(m.size()) + " elements");
    for (Element a = 0; a < m.size(); ++a) {
        if (m.supplement(m.supplement(a)) != a) {
            emit("supplement-involution", Status::Fail, "a'' != a for a = " + m.label(a));
            return;
        }
    }
    emit("supplement-involution", Status::Pass, "");
    for (Element a = 0; a < m.size(); ++a) {
        for (Element b = 0; b < m.size(); ++b) {
            std::size_t count = 0;
            for (Element c = 0; c < m.size(); ++c) count += m.sum_or_undefined(a, c) == b;
            if (count != (m.leq(a, b) ? 1U : 0U)) {
                emit("difference-unique", Status::Fail, m.label(b) + " - " + m.label(a) + " has " +
                                                            std::to_string(count) + " solutions");
                return;
            }
        }
    }
    emit("difference-unique", Status::Pass, "");
    auto mv = detect_mv(m);
    if (mv.is_mv()) {
        emit("mv-algebra", Status::Info, "MV-algebra under a (+) b = a + (a' meet b)");
    } else if (mv.not_lattice) {
        emit("mv-algebra", Status::Info,
             "not a lattice: " + m.label(mv.not_lattice->first) + ", " + m.label(mv.not_lattice->second));
    } else {
        std::string axioms;
        for (const auto &f : mv.failures) axioms += (axioms.empty() ? "" : ",") + std::to_string(f.axiom);
        emit("mv-algebra", Status::Info, "not MV; failed axioms " + axioms);
    }
}

inline void rdp_suite(Context &ctx, const Emit &emit) {
    const auto &r = ctx.rdp();
    if (r.holds) {
        emit("rdp", Status::Pass, std::to_string(r.instances_checked) + " equations refined");
    } else {
        emit("rdp", Status::Fail, describe(ctx.algebra(), *r.failure));
    }
}

inline void sharp_suite(Context &ctx, const Emit &emit) {
    const auto &m = ctx.algebra();
    const auto &sh = ctx.sharp();
    emit("members", Status::Info, join_labels(m, sh.members()));
    if (!ctx.rdp().holds) {
        emit("boolean", Status::Info,
             sh.boolean_verified() ? "Boolean although RDP fails" : "not Boolean: " + sh.boolean_failure()->law);
        return;
    }
    emit("boolean", sh.boolean_verified() ? Status::Pass : Status::Fail,
         sh.boolean_verified() ? std::to_string(sh.atoms(m).size()) + " atoms" : sh.boolean_failure()->law);
}

inline void states_suite(Context &ctx, const Emit &emit) {
    const auto &m = ctx.algebra();
    const auto &poly = ctx.polytope();
    if (poly.empty()) {
        emit("nonempty", ctx.rdp().holds ? Status::Fail : Status::Info, "no states");
        return;
    }
    emit("nonempty", Status::Pass, std::to_string(poly.vertices.size()) + " vertices, dimension " +
                                       std::to_string(poly.dimension));
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
        std::string name = "vertex-" + std::to_string(v + 1);
        auto check = is_state(m, poly.vertices[v].values);
        emit(name, check.ok ? Status::Pass : Status::Fail, to_json(m, poly.vertices[v]).dump());
    }
    emit("separating", separating(poly) ? Status::Pass : Status::Info,
         separating(poly) ? "" : "some elements share an evaluation");
}

inline void representation_suite(Context &ctx, const Emit &emit) {
    if (auto why = ctx.representation_gate()) {
        emit("canonical", Status::Skip, *why);
        return;
    }
    const auto &rep = ctx.rep();
    const auto &sigma = ctx.sigma();
    emit("canonical", Status::Pass, std::to_string(rep.points()) + " points, " +
                                        std::to_string(sigma.atoms.size()) + " atoms of B0");
    auto reg = check_regular(rep);
    emit("regular", reg.holds ? Status::Pass : Status::Fail,
         reg.holds ? "" : "function " + format_function(rep.tribe().function(*reg.witness)));
    auto cong = check_ideal_congruence(rep);
    emit("ideal-congruence", cong.holds ? Status::Pass : Status::Fail,
         cong.holds ? "" : "pair " + std::to_string(cong.witness->first) + "," + std::to_string(cong.witness->second));
    auto img = sharp_image(rep, sigma);
    emit("sharp-image", img.holds ? Status::Pass : Status::Fail,
         img.holds ? "" : "missing " + join_labels(rep.target(), img.missing) + ", extra " +
                              join_labels(rep.target(), img.extra));
    bool all = std::all_of(rep.tribe().functions().begin(), rep.tribe().functions().end(),
                           [&](const FuzzyFunction &f) { return measurable(sigma, f); });
    emit("measurable", all ? Status::Pass : Status::Fail, "");
}

inline void smearing_suite(Context &ctx, const Emit &emit) {
    if (auto why = ctx.representation_gate()) {
        emit("smearing", Status::Skip, *why);
        return;
    }
    const auto &m = ctx.algebra();
    const auto &rep = ctx.rep();
    SharpObservable xi = sharp_observable(rep, ctx.sigma());
    auto observables = small_observables(m);
    const auto &states = ctx.test_states();
    for (const auto &x : observables) {
        SmearingKernel k = smear(rep, ctx.sigma(), x);
        for (std::size_t s = 0; s < states.size(); ++s) {
            auto check = verify_smearing(rep, x, k, xi, states[s]);
            if (!check.ok) {
                auto it = std::find_if(check.residuals.begin(), check.residuals.end(),
                                       [](const Rational &r) { return sgn(r) != 0; });
                emit("smearing", Status::Fail,
                     "observable " + to_json(m, x).dump() + ", state " + std::to_string(s) + ", outcome mask " +
                         std::to_string(it - check.residuals.begin()) + ", residual " + to_string(*it));
                return;
            }
        }
    }
    emit("smearing", Status::Pass, std::to_string(observables.size()) + " observables x " +
                                       std::to_string(states.size()) + " states, residual 0");
}

inline void spectral_suite(Context &ctx, const Emit &emit) {
    if (auto why = ctx.representation_gate()) {
        emit("spectral", Status::Skip, *why);
        return;
    }
    const auto &m = ctx.algebra();
    const auto &rep = ctx.rep();
    const auto &measures = ctx.measures();
    for (const auto &mu : measures) emit("measure " + m.label(mu.element), Status::Info, to_json(m, mu).dump());
    const auto &states = ctx.test_states();
    bool integral_ok = true;
    for (const auto &mu : measures) {
        for (std::size_t s = 0; s < states.size() && integral_ok; ++s) {
            Rational v = spectral_integral(mu, states[s]);
            if (v != states[s](mu.element)) {
                integral_ok = false;
                emit("integral", Status::Fail, "element " + m.label(mu.element) + ", state " + std::to_string(s) +
                                                   ": " + to_string(v) + " != " + to_string(states[s](mu.element)));
            }
        }
    }
    if (integral_ok) emit("integral", Status::Pass, std::to_string(states.size()) + " states");
    auto inj = spectral_injectivity(measures);
    emit("injectivity", inj.holds ? Status::Pass : Status::Fail,
         inj.holds ? "" : m.label(inj.collision->first) + " and " + m.label(inj.collision->second));
    const std::vector<BorelSet> probes{BorelSet::empty(), BorelSet::point(0), BorelSet::point(1),
                                       BorelSet::real_line(),
                                       BorelSet::interval(Rational(0), true, Rational(1, 2), false)};
    std::size_t table_checks = 0;
    for (auto a : ctx.sharp().members()) {
        for (const auto &e : probes) {
            sharp_table(rep, ctx.sigma(), a, e);
            ++table_checks;
        }
    }
    emit("sharp-table", Status::Pass, std::to_string(table_checks) + " lookups");
    RationalVector points;
    for (const auto &mu : measures) points.insert(points.end(), mu.support.begin(), mu.support.end());
    PhiTransform square = PhiTransform::power(points, 2);
    std::size_t moved = 0;
    bool injective = true;
    for (const auto &mu : measures) {
        auto r = transform_spectral(measures, mu.element, square, ctx.polytope());
        injective = injective && r.injective;
        moved += !r.integral_preserved;
    }
    emit("phi-injectivity", injective ? Status::Pass : Status::Fail, "phi(t) = t^2");
    emit("phi-integral", Status::Info,
         std::to_string(moved) + " of " + std::to_string(measures.size()) + " elements change their integral");
    std::size_t unique = 0;
    for (Element a = 0; a < m.size(); ++a) {
        auto alt = alternative_spectral_measures(m, ctx.sharp(), ctx.polytope(), a);
        unique += alt.feasible && alt.dimension == 0;
    }
    emit("alternatives", Status::Info,
         std::to_string(unique) + " of " + std::to_string(m.size()) + " elements admit exactly one sharp measure");
}

inline void extension_suite(Context &ctx, const Emit &emit) {
    if (auto why = ctx.representation_gate()) {
        emit("extension", Status::Skip, *why);
        return;
    }
    const auto &m = ctx.algebra();
    const auto &sharp = ctx.sharp();
    std::vector<StateOnSharp> inputs;
    for (const auto &s : ctx.test_states()) inputs.push_back(restrict_to_sharp(s, sharp));
    std::mt19937_64 rng(ctx.seed() ^ 0x5eedULL);
    std::uniform_int_distribution<int> weight(0, 10);
    auto atoms = sharp.atoms(m);
    for (int k = 0; k < 5; ++k) {
        std::vector<int> w(atoms.size());
        int total = 0;
        for (auto &x : w) total += x = weight(rng);
        if (total == 0) w[0] = total = 1;
        RationalVector weights;
        for (auto x : w) {
            Rational q(x, total);
            q.canonicalize();
            weights.push_back(q);
        }
        inputs.push_back(state_on_sharp_from_atoms(m, sharp, weights));
    }
    std::size_t unique = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto ext = extend_state(ctx.rep(), ctx.sigma(), sharp, inputs[i]);
        auto u = extension_uniqueness(m, sharp, inputs[i]);
        for (Element a = 0; a < m.size(); ++a) {
            if (u.bounds[a].min != ext.state(a) || u.bounds[a].max != ext.state(a)) {
                emit("unique", Status::Fail,
                     "input " + std::to_string(i) + ": " + to_json(m, u).dump());
                return;
            }
        }
        unique += u.unique;
    }
    emit("extend", Status::Pass, std::to_string(inputs.size()) + " states on Sh(M) extended and restricted back");
    emit("unique", Status::Pass, std::to_string(unique) + " extension polytopes are single points");
}

} // namespace detail

/// Runs the selected suites on one algebra. Exceptions raised inside a
/// suite become failing records carrying the error kind.
inline Report run_checks(const EffectAlgebra &m, const std::string &instance, const std::vector<std::string> &suites,
                         const CheckOptions &opt = {}) {
    Report report;
    detail::Context ctx(m, opt);
    for (const auto &suite : suites) {
        detail::Emit emit = [&](const std::string &check, Status s, std::string detail) {
            report.add(suite, instance, check, s, std::move(detail));
        };
        try {
            if (suite == "axioms") detail::axioms_suite(ctx, emit);
            else if (suite == "rdp") detail::rdp_suite(ctx, emit);
            else if (suite == "sharp") detail::sharp_suite(ctx, emit);
            else if (suite == "states") detail::states_suite(ctx, emit);
            else if (suite == "representation") detail::representation_suite(ctx, emit);
            else if (suite == "smearing") detail::smearing_suite(ctx, emit);
            else if (suite == "spectral") detail::spectral_suite(ctx, emit);
            else if (suite == "extension") detail::extension_suite(ctx, emit);
            else throw Error(ErrorKind::ParseError, "unknown suite \"" + suite + "\"");
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::SizeLimitExceeded) throw;
            emit("error", Status::Fail, e.what());
        }
    }
    report.sort();
    return report;
}

} // namespace effecta
