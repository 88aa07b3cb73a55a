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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effecta/linalg.hpp"
#include "effecta/lp.hpp"
#include "effecta/observables.hpp"
#include "effecta/representation.hpp"
#include "effecta/states.hpp"

namespace effecta {

/// Lambda_a stored as its finite support and the sharp mass at each point.
struct SpectralMeasure {
    Element element = 0;
    RationalVector support; // ascending
    std::vector<Element> masses;

    /// Lambda_a(E).
    [[nodiscard]] Element at(const EffectAlgebra &m, const BorelSet &e) const {
        std::vector<Element> parts;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (e.contains(support[i])) parts.push_back(masses[i]);
        }
        return *m.sum_all(parts);
    }

    /// Comparison key: the measure itself, not the element it came from.
    [[nodiscard]] bool same_measure(const SpectralMeasure &o) const {
        return support == o.support && masses == o.masses;
    }
};

/// mass(lambda) = h(chi of {w : f_a(w) = lambda}) for each value lambda of
/// f_a on Omega0.
inline SpectralMeasure spectral_measure(const Representation &rep, const SigmaAlgebraB0 &sigma, Element a) {
    const auto &m = rep.target();
    if (a >= m.size()) throw Error(ErrorKind::PreconditionFailed, "element out of range", {a});
    const auto &f = rep.tribe().function(rep.representative(a));
    SpectralMeasure out{a, {}, {}};
    for (auto p : rep.omega0()) out.support.push_back(f[p]);
    std::sort(out.support.begin(), out.support.end());
    out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
    for (const auto &lambda : out.support) {
        PointSet level;
        for (std::size_t p = 0; p < rep.points(); ++p) {
            if (f[p] == lambda) level.push_back(p);
        }
        if (!sigma.contains(level)) {
            throw Error(ErrorKind::SpectralObstruction, "level set of " + to_string(lambda) + " is not in B0(T)", {a});
        }
        out.masses.push_back(rep.h(*rep.tribe().find(indicator(rep.points(), level))));
    }
    auto total = m.sum_all(out.masses);
    if (!total || *total != m.one()) {
        throw Error(ErrorKind::TheoremViolation, "spectral masses do not sum to 1", {a});
    }
    return out;
}

inline SpectralMeasure spectral_measure(const Representation &rep, Element a) {
    return spectral_measure(rep, b0(rep), a);
}

inline std::vector<SpectralMeasure> spectral_measures(const Representation &rep, const SigmaAlgebraB0 &sigma) {
    std::vector<SpectralMeasure> out;
    for (Element a = 0; a < rep.target().size(); ++a) out.push_back(spectral_measure(rep, sigma, a));
    return out;
}

/// Sum over the support of lambda * m(mass(lambda)).
inline Rational spectral_integral(const SpectralMeasure &mu, const State &m) {
    Rational total = 0;
    for (std::size_t i = 0; i < mu.support.size(); ++i) total += mu.support[i] * m(mu.masses[i]);
    return total;
}

struct InjectivityResult {
    bool holds = true;
    std::optional<std::pair<Element, Element>> collision;
};

inline InjectivityResult spectral_injectivity(const std::vector<SpectralMeasure> &measures) {
    for (std::size_t i = 0; i < measures.size(); ++i) {
        for (std::size_t j = i + 1; j < measures.size(); ++j) {
            if (measures[i].same_measure(measures[j])) {
                return {false, std::pair{measures[i].element, measures[j].element}};
            }
        }
    }
    return {};
}

/// Lambda_a(E) for a sharp: a if only 1 is in E, a' if only 0, and 0 or 1
/// when E misses or holds both.
inline Element sharp_table(const EffectAlgebra &m, Element a, const BorelSet &e) {
    if (!is_sharp(m, a)) throw Error(ErrorKind::NotSharp, m.label(a) + " is not sharp", {a});
    bool has0 = e.contains(Rational(0));
    bool has1 = e.contains(Rational(1));
    if (has0 && has1) return m.one();
    if (has1) return a;
    if (has0) return m.supplement(a);
    return m.zero();
}

/// sharp_table checked against the spectral measure of a.
inline Element sharp_table(const Representation &rep, const SigmaAlgebraB0 &sigma, Element a, const BorelSet &e) {
    Element expected = sharp_table(rep.target(), a, e);
    Element actual = spectral_measure(rep, sigma, a).at(rep.target(), e);
    if (expected != actual) {
        throw Error(ErrorKind::TheoremViolation, "Lambda_a(E) differs from the sharp table", {a, expected, actual});
    }
    return expected;
}

/// Strictly increasing table on [0,1] fixing 0 and 1.
class PhiTransform {
  public:
    static PhiTransform make(std::vector<std::pair<Rational, Rational>> table) {
        std::sort(table.begin(), table.end());
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!in_unit_interval(table[i].first) || !in_unit_interval(table[i].second)) {
                throw Error(ErrorKind::PhiEndpointViolation, "phi must map [0,1] into [0,1]", {i});
            }
            if (i > 0 && (table[i].first == table[i - 1].first || table[i].second <= table[i - 1].second)) {
                throw Error(ErrorKind::PhiNotMonotone, "phi is not strictly increasing at " + to_string(table[i].first),
                            {i});
            }
        }
        auto fixed = [&](const Rational &t) {
            auto it = std::find_if(table.begin(), table.end(), [&](const auto &e) { return e.first == t; });
            return it != table.end() && it->second == t;
        };
        if (!fixed(Rational(0)) || !fixed(Rational(1))) {
            throw Error(ErrorKind::PhiEndpointViolation, "phi must fix 0 and 1");
        }
        PhiTransform phi;
        phi.table_ = std::move(table);
        return phi;
    }

    /// Identity sampled on `points` together with 0 and 1.
    static PhiTransform identity(const RationalVector &points) {
        return power(points, 1);
    }

    /// t -> t^k sampled on `points` together with 0 and 1.
    static PhiTransform power(const RationalVector &points, unsigned k) {
        std::vector<Rational> ts(points);
        ts.emplace_back(0);
        ts.emplace_back(1);
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::vector<std::pair<Rational, Rational>> table;
        for (const auto &t : ts) {
            Rational v = 1;
            for (unsigned i = 0; i < k; ++i) v *= t;
            table.emplace_back(t, v);
        }
        return make(std::move(table));
    }

    [[nodiscard]] bool covers(const Rational &t) const { return lookup(t).has_value(); }

    [[nodiscard]] Rational operator()(const Rational &t) const {
        auto v = lookup(t);
        if (!v) throw Error(ErrorKind::SupportNotCovered, "phi undefined at " + to_string(t));
        return *v;
    }

    [[nodiscard]] const std::vector<std::pair<Rational, Rational>> &table() const noexcept { return table_; }

  private:
    [[nodiscard]] std::optional<Rational> lookup(const Rational &t) const {
        auto it = std::lower_bound(table_.begin(), table_.end(), t,
                                   [](const auto &e, const Rational &x) { return e.first < x; });
        if (it == table_.end() || it->first != t) return std::nullopt;
        return it->second;
    }

    std::vector<std::pair<Rational, Rational>> table_;
};

/// phi(Lambda_a)(E) = Lambda_a(phi^{-1}(E)): same masses at moved points.
inline SpectralMeasure transform(const SpectralMeasure &mu, const PhiTransform &phi) {
    SpectralMeasure out = mu;
    for (auto &t : out.support) t = phi(t);
    return out;
}

struct TransformReport {
    SpectralMeasure transformed;
    /// a -> phi(Lambda_a) over the elements whose support phi covers.
    bool injective = true;
    std::optional<std::pair<Element, Element>> collision;
    /// integral of lambda d m(phi(Lambda_a)) equals m(a) for all vertex states.
    bool integral_preserved = true;
    std::optional<std::size_t> witness_vertex;
    Rational witness_integral;
    Rational witness_value;
};

inline TransformReport transform_spectral(const std::vector<SpectralMeasure> &measures, Element a,
                                          const PhiTransform &phi, const StatePolytope &poly) {
    TransformReport out{transform(measures.at(a), phi), true, std::nullopt, true, std::nullopt, 0, 0};
    std::vector<SpectralMeasure> moved;
    for (const auto &mu : measures) {
        bool covered = std::all_of(mu.support.begin(), mu.support.end(), [&](const Rational &t) { return phi.covers(t); });
        if (covered) moved.push_back(transform(mu, phi));
    }
    auto inj = spectral_injectivity(moved);
    out.injective = inj.holds;
    out.collision = inj.collision;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
        Rational lhs = spectral_integral(out.transformed, poly.vertices[v]);
        const Rational &rhs = poly.vertices[v](a);
        if (lhs != rhs) {
            out.integral_preserved = false;
            out.witness_vertex = v;
            out.witness_integral = lhs;
            out.witness_value = rhs;
            break;
        }
    }
    return out;
}

/// State on the Boolean algebra Sh(M); values indexed by element, only sharp
/// entries meaningful.
struct StateOnSharp {
    RationalVector values;

    [[nodiscard]] const Rational &operator()(Element a) const { return values.at(a); }
};

/// Checks normalization, bounds and additivity on Sh(M).
inline StateOnSharp make_state_on_sharp(const EffectAlgebra &m, const SharpSet &sharp, RationalVector values) {
    if (values.size() != m.size()) throw Error(ErrorKind::NotAStateOnSharp, "one value per element expected");
    if (values[m.one()] != 1) throw Error(ErrorKind::NotAStateOnSharp, "m(1) != 1", {m.one()});
    for (auto a : sharp.members()) {
        if (!in_unit_interval(values[a])) throw Error(ErrorKind::NotAStateOnSharp, "value outside [0,1]", {a});
        for (auto b : sharp.members()) {
            auto ab = m.sum(a, b);
            if (ab && sharp.contains(*ab) && values[a] + values[b] != values[*ab]) {
                throw Error(ErrorKind::NotAStateOnSharp, "not additive on Sh(M)", {a, b});
            }
        }
    }
    for (Element a = 0; a < m.size(); ++a) {
        if (!sharp.contains(a)) values[a] = 0;
    }
    return {std::move(values)};
}

/// Probability weights on the atoms of Sh(M) (in SharpSet::atoms order),
/// extended additively.
inline StateOnSharp state_on_sharp_from_atoms(const EffectAlgebra &m, const SharpSet &sharp,
                                              const RationalVector &weights) {
    auto atoms = sharp.atoms(m);
    if (weights.size() != atoms.size()) throw Error(ErrorKind::NotAStateOnSharp, "one weight per atom expected");
    RationalVector values(m.size(), Rational(0));
    for (auto s : sharp.members()) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (m.leq(atoms[i], s)) values[s] += weights[i];
        }
    }
    return make_state_on_sharp(m, sharp, std::move(values));
}

inline StateOnSharp restrict_to_sharp(const State &s, const SharpSet &sharp) {
    RationalVector values(s.values.size(), Rational(0));
    for (auto a : sharp.members()) values[a] = s(a);
    return {std::move(values)};
}

struct Extension {
    State state;          // atom form
    RationalVector spectral_form;
};

/// m-hat(a) = sum over atoms A of B0(T) of f_a(A) * m(h(chi_A)), checked to
/// restrict to m on Sh(M) and to agree with sum of lambda * m(Lambda_a({lambda})).
inline Extension extend_state(const Representation &rep, const SigmaAlgebraB0 &sigma, const SharpSet &sharp,
                              const StateOnSharp &m) {
    const auto &alg = rep.target();
    SharpObservable xi = sharp_observable(rep, sigma);
    Extension out{State{RationalVector(alg.size(), Rational(0))}, RationalVector(alg.size(), Rational(0))};
    for (Element a = 0; a < alg.size(); ++a) {
        const auto &f = rep.tribe().function(rep.representative(a));
        Rational total = 0;
        for (std::size_t i = 0; i < xi.values.size(); ++i) {
            const auto &atom = sigma.atoms[i];
            for (auto p : atom) {
                if (f[p] != f[atom.front()]) throw Error(ErrorKind::NotMeasurable, "f_a not constant on an atom", {a});
            }
            total += f[atom.front()] * m(xi.values[i]);
        }
        out.state.values[a] = total;
        SpectralMeasure mu = spectral_measure(rep, sigma, a);
        for (std::size_t i = 0; i < mu.support.size(); ++i) out.spectral_form[a] += mu.support[i] * m(mu.masses[i]);
        if (out.spectral_form[a] != total) {
            throw Error(ErrorKind::TheoremViolation, "atom and spectral forms of m-hat differ", {a});
        }
    }
    for (auto s : sharp.members()) {
        if (out.state(s) != m(s)) throw Error(ErrorKind::TheoremViolation, "m-hat does not restrict to m", {s});
    }
    if (auto check = is_state(alg, out.state.values); !check.ok) {
        throw Error(ErrorKind::TheoremViolation, "m-hat is not a state");
    }
    return out;
}

struct CoordinateBounds {
    Rational min;
    Rational max;
};

struct UniquenessReport {
    bool unique = true;
    std::vector<CoordinateBounds> bounds; // per element
};

/// Decides whether exactly one state on M restricts to m on Sh(M) by
/// minimizing and maximizing every coordinate over that polytope.
inline UniquenessReport extension_uniqueness(const EffectAlgebra &alg, const SharpSet &sharp, const StateOnSharp &m) {
    const std::size_t n = alg.size();
    std::vector<RationalVector> rows;
    RationalVector rhs;
    state_equalities(alg, rows, rhs);
    for (auto s : sharp.members()) {
        RationalVector r(n, Rational(0));
        r[s] = 1;
        rows.push_back(std::move(r));
        rhs.push_back(m(s));
    }
    ReducedSystem sys = reduce_equalities(rows, rhs, n);
    if (!sys.consistent) throw Error(ErrorKind::InfeasibleExtension, "no state extends m");
    // Free variables are element values, hence already >= 0 as the LP assumes.
    auto constraints = unit_bounds(sys);
    UniquenessReport out;
    for (Element a = 0; a < n; ++a) {
        const auto &e = sys.exprs[a];
        CoordinateBounds b;
        if (sys.dimension() == 0) {
            if (!in_unit_interval(e.constant)) throw Error(ErrorKind::InfeasibleExtension, "no state extends m", {a});
            b = {e.constant, e.constant};
        } else {
            auto lo = minimize(e.coeffs, constraints);
            auto hi = maximize(e.coeffs, constraints);
            if (lo.status == LpStatus::Infeasible || hi.status == LpStatus::Infeasible) {
                throw Error(ErrorKind::InfeasibleExtension, "no state extends m", {a});
            }
            if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal) {
                throw Error(ErrorKind::TheoremViolation, "state coordinates are unbounded", {a});
            }
            b = {e.constant + lo.value, e.constant + hi.value};
        }
        if (b.min != b.max) out.unique = false;
        out.bounds.push_back(std::move(b));
    }
    return out;
}

/// Every sharp-valued measure reproducing m(a) by the spectral integral
/// for all vertex states m is a map from the atoms of Sh(M) to [0,1]
/// (masses being sums of atoms). The solution set of that linear system is
/// reported; dimension 0 means the spectral measure is the only one.
struct AlternativeSearch {
    bool feasible = false;
    std::size_t dimension = 0;
    RationalVector atom_values; // when dimension == 0
};

inline AlternativeSearch alternative_spectral_measures(const EffectAlgebra &alg, const SharpSet &sharp,
                                                       const StatePolytope &poly, Element a) {
    auto atoms = sharp.atoms(alg);
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (const auto &v : poly.vertices) {
        RationalVector r;
        for (auto s : atoms) r.push_back(v(s));
        rows.push_back(std::move(r));
        rhs.push_back(v(a));
    }
    ReducedSystem sys = reduce_equalities(rows, rhs, atoms.size());
    AlternativeSearch out;
    if (!sys.consistent) return out;
    out.dimension = sys.dimension();
    if (out.dimension == 0) {
        out.atom_values = sys.point({});
        out.feasible = std::all_of(out.atom_values.begin(), out.atom_values.end(), in_unit_interval);
    } else {
        std::vector<HalfSpace> hs = unit_bounds(sys);
        RationalVector zero(out.dimension, Rational(0));
        out.feasible = maximize(zero, hs).status == LpStatus::Optimal;
    }
    return out;
}

} // namespace effecta
