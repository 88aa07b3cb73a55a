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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "effecta/algebra.hpp"
#include "effecta/rdp.hpp"
#include "effecta/sharp.hpp"
#include "effecta/states.hpp"
#include "effecta/tribe.hpp"

namespace effecta {

/// Sorted set of carrier indices.
using PointSet = std::vector<std::size_t>;

inline FuzzyFunction indicator(std::size_t points, const PointSet &a) {
    FuzzyFunction f(points, Rational(0));
    for (auto p : a) f.at(p) = 1;
    return f;
}

inline PointSet complement(std::size_t points, const PointSet &a) {
    PointSet out;
    for (std::size_t p = 0, k = 0; p < points; ++p) {
        if (k < a.size() && a[k] == p) {
            ++k;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

inline PointSet set_union(const PointSet &a, const PointSet &b) {
    PointSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline PointSet set_intersection(const PointSet &a, const PointSet &b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// N_{Omega0}(f) = {w in Omega0 : f(w) != 0}.
inline PointSet support(const FuzzyFunction &f, const PointSet &omega0) {
    PointSet out;
    for (auto p : omega0) {
        if (sgn(f.at(p)) != 0) out.push_back(p);
    }
    return out;
}

/// (Omega, T, h) with a distinguished part Omega0 of the carrier and an
/// ideal of negligible subsets of Omega0.
///
/// `h[i]` is the image of tribe function i. Construction through make()
/// checks that h preserves 1 and +, is onto, and that the ideal is a
/// sigma-ideal (nonempty, hereditary, closed under unions).
class Representation {
  public:
    static Representation make(EffectTribe tribe, EffectAlgebra target, std::vector<Element> h, PointSet omega0,
                               std::vector<PointSet> ideal) {
        Representation rep(std::move(tribe), std::move(target), std::move(h), std::move(omega0), std::move(ideal));
        rep.validate();
        return rep;
    }

    [[nodiscard]] const EffectTribe &tribe() const noexcept { return tribe_; }
    [[nodiscard]] const EffectAlgebra &target() const noexcept { return target_; }
    [[nodiscard]] Element h(std::size_t function) const { return h_.at(function); }
    [[nodiscard]] const std::vector<Element> &h_map() const noexcept { return h_; }
    [[nodiscard]] const PointSet &omega0() const noexcept { return omega0_; }
    [[nodiscard]] const std::vector<PointSet> &ideal() const noexcept { return ideal_; }
    [[nodiscard]] std::size_t points() const noexcept { return tribe_.points(); }

    [[nodiscard]] bool in_ideal(const PointSet &a) const {
        return std::binary_search(ideal_.begin(), ideal_.end(), a);
    }

    /// First function (by tribe order) mapped to `a`.
    [[nodiscard]] std::size_t representative(Element a) const {
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] == a) return i;
        }
        throw Error(ErrorKind::InvalidRepresentation, "no function maps to " + target_.label(a), {a});
    }

    [[nodiscard]] std::vector<std::size_t> preimage(Element a) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] == a) out.push_back(i);
        }
        return out;
    }

  private:
    Representation(EffectTribe tribe, EffectAlgebra target, std::vector<Element> h, PointSet omega0,
                   std::vector<PointSet> ideal)
        : tribe_(std::move(tribe)), target_(std::move(target)), h_(std::move(h)), omega0_(std::move(omega0)),
          ideal_(std::move(ideal)) {
        std::sort(omega0_.begin(), omega0_.end());
        for (auto &a : ideal_) std::sort(a.begin(), a.end());
        std::sort(ideal_.begin(), ideal_.end());
        ideal_.erase(std::unique(ideal_.begin(), ideal_.end()), ideal_.end());
    }

    void validate() const {
        auto fail = [](const std::string &what, std::vector<std::size_t> w = {}) {
            throw Error(ErrorKind::InvalidRepresentation, what, std::move(w));
        };
        const auto &t = tribe_.algebra();
        if (h_.size() != tribe_.size()) fail("h must map every tribe function");
        for (std::size_t i = 0; i < h_.size(); ++i) {
            if (h_[i] >= target_.size()) fail("h image out of range", {i});
        }
        if (h_[t.one()] != target_.one()) fail("h(1) != 1");
        for (const auto &[f, g, fg] : t.defined_sums()) {
            if (target_.sum_or_undefined(h_[f], h_[g]) != h_[fg]) fail("h does not preserve +", {f, g});
        }
        std::vector<bool> hit(target_.size(), false);
        for (auto e : h_) hit[e] = true;
        for (Element e = 0; e < target_.size(); ++e) {
            if (!hit[e]) fail("h is not onto: " + target_.label(e) + " missed", {e});
        }
        for (auto p : omega0_) {
            if (p >= tribe_.points()) fail("Omega0 point out of range", {p});
        }
        if (ideal_.empty()) fail("ideal must be nonempty");
        for (const auto &a : ideal_) {
            if (!std::includes(omega0_.begin(), omega0_.end(), a.begin(), a.end())) {
                fail("ideal member not inside Omega0");
            }
            for (std::size_t k = 0; k < a.size(); ++k) {
                PointSet smaller = a;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
                if (!in_ideal(smaller)) fail("ideal not hereditary");
            }
            for (const auto &b : ideal_) {
                if (!in_ideal(set_union(a, b))) fail("ideal not closed under unions");
            }
        }
    }

    EffectTribe tribe_;
    EffectAlgebra target_;
    std::vector<Element> h_;
    PointSet omega0_;
    std::vector<PointSet> ideal_;
};

/// Labels of the canonical carrier: s1, s2, ... in vertex order.
inline std::vector<std::string> vertex_labels(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back("s" + std::to_string(i + 1));
    return out;
}

/// Canonical representation on the extremal states.
///
/// Omega = Omega0 = vertices of S(M); the meager ideal of a finite discrete
/// space is {∅}; T holds exactly the evaluation vectors a-hat, one per
/// ~-class, and h(a-hat) = a.
inline Representation canonical_representation(const EffectAlgebra &m, const StatePolytope &poly) {
    if (auto r = check_rdp(m); !r.holds) {
        const auto &q = *r.failure;
        throw Error(ErrorKind::RdpRequired, "RDP fails", {q.a1, q.a2, q.b1, q.b2});
    }
    if (poly.empty()) throw Error(ErrorKind::EmptyStateSpace, "no states");
    if (!separating(poly)) throw Error(ErrorKind::NonSeparatingStates, "evaluations are not injective");
    std::vector<FuzzyFunction> functions;
    std::vector<Element> h;
    for (Element a = 0; a < m.size(); ++a) {
        functions.push_back(evaluate(poly, a).values);
        h.push_back(a);
    }
    const std::size_t k = poly.vertices.size();
    PointSet omega0(k);
    for (std::size_t i = 0; i < k; ++i) omega0[i] = i;
    return Representation::make(EffectTribe::make(vertex_labels(k), std::move(functions)), m, std::move(h),
                                std::move(omega0), {PointSet{}});
}

inline Representation canonical_representation(const EffectAlgebra &m) {
    return canonical_representation(m, state_polytope(m));
}

/// The tribe as a representation of itself: h = identity, Omega0 = Omega,
/// ideal {∅}.
inline Representation identity_representation(const EffectTribe &tribe) {
    std::vector<Element> h(tribe.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = i;
    PointSet omega0(tribe.points());
    for (std::size_t i = 0; i < omega0.size(); ++i) omega0[i] = i;
    return Representation::make(tribe, tribe.algebra(), std::move(h), std::move(omega0), {PointSet{}});
}

/// Adds a carrier point outside Omega0 where every function may take value
/// 0 or 1: T' = T x {0,1}, h'(f, v) = h(f). The result is regular with the
/// same ideal, and kernels chosen from T' may differ at the new point.
inline Representation extend_with_null_point(const Representation &rep, const std::string &label = "null") {
    std::vector<std::string> carrier = rep.tribe().carrier();
    carrier.push_back(label);
    std::vector<FuzzyFunction> functions;
    std::vector<Element> h;
    for (int v = 0; v <= 1; ++v) {
        for (std::size_t i = 0; i < rep.tribe().size(); ++i) {
            FuzzyFunction f = rep.tribe().function(i);
            f.emplace_back(v);
            functions.push_back(std::move(f));
            h.push_back(rep.h(i));
        }
    }
    return Representation::make(EffectTribe::make(std::move(carrier), std::move(functions)), rep.target(),
                                std::move(h), rep.omega0(), rep.ideal());
}

/// B0(T) = {A : chi_A is a sharp element of T} with its atoms, and
/// S0(T) = {A : chi_A in T}.
struct SigmaAlgebraB0 {
    std::size_t points = 0;
    std::vector<PointSet> sets;  // sorted
    std::vector<PointSet> s0;    // sorted
    std::vector<PointSet> atoms; // partition of the carrier, ordered by least point
    bool tribe_has_rdp = false;

    [[nodiscard]] bool contains(const PointSet &a) const { return std::binary_search(sets.begin(), sets.end(), a); }

    [[nodiscard]] std::size_t atom_of(std::size_t point) const {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (std::binary_search(atoms[i].begin(), atoms[i].end(), point)) return i;
        }
        throw Error(ErrorKind::PreconditionFailed, "point outside carrier", {point});
    }
};

/// First sigma-algebra law broken by `family` on `points` carrier points.
inline std::optional<std::string> sigma_algebra_failure(std::size_t points, const std::vector<PointSet> &family) {
    auto has = [&](const PointSet &a) { return std::binary_search(family.begin(), family.end(), a); };
    PointSet all(points);
    for (std::size_t i = 0; i < points; ++i) all[i] = i;
    if (!has(PointSet{})) return "missing empty set";
    if (!has(all)) return "missing carrier";
    for (const auto &a : family) {
        if (!has(complement(points, a))) return "not closed under complement";
        for (const auto &b : family) {
            if (!has(set_union(a, b))) return "not closed under union";
        }
    }
    return std::nullopt;
}

inline SigmaAlgebraB0 b0(const Representation &rep) {
    const auto &tribe = rep.tribe();
    const std::size_t points = tribe.points();
    SigmaAlgebraB0 out;
    out.points = points;
    out.tribe_has_rdp = check_rdp(tribe.algebra()).holds;
    SharpSet sharp = sharp_elements(tribe.algebra(), out.tribe_has_rdp);
    for (std::size_t i = 0; i < tribe.size(); ++i) {
        const auto &f = tribe.function(i);
        bool characteristic = std::all_of(f.begin(), f.end(), [](const Rational &x) { return x == 0 || x == 1; });
        if (!characteristic) continue;
        PointSet a;
        for (std::size_t p = 0; p < points; ++p) {
            if (f[p] == 1) a.push_back(p);
        }
        out.s0.push_back(a);
        if (sharp.contains(i)) out.sets.push_back(std::move(a));
    }
    std::sort(out.sets.begin(), out.sets.end());
    std::sort(out.s0.begin(), out.s0.end());
    if (auto failure = sigma_algebra_failure(points, out.sets)) {
        throw Error(ErrorKind::TheoremViolation, "B0(T) is not a sigma-algebra: " + *failure);
    }
    if (out.tribe_has_rdp && out.sets != out.s0) {
        throw Error(ErrorKind::TheoremViolation, "tribe has RDP but B0(T) != S0(T)");
    }
    std::set<PointSet> atoms;
    for (std::size_t p = 0; p < points; ++p) {
        PointSet atom(points);
        for (std::size_t i = 0; i < points; ++i) atom[i] = i;
        for (const auto &a : out.sets) {
            if (std::binary_search(a.begin(), a.end(), p)) atom = set_intersection(atom, a);
        }
        atoms.insert(std::move(atom));
    }
    out.atoms.assign(atoms.begin(), atoms.end());
    std::sort(out.atoms.begin(), out.atoms.end(),
              [](const PointSet &x, const PointSet &y) { return x.front() < y.front(); });
    return out;
}

/// f is B0(T)-measurable iff it is constant on every atom.
inline bool measurable(const SigmaAlgebraB0 &sigma, const FuzzyFunction &f) {
    for (const auto &atom : sigma.atoms) {
        for (auto p : atom) {
            if (f.at(p) != f.at(atom.front())) return false;
        }
    }
    return true;
}

inline bool measurable(const Representation &rep, const FuzzyFunction &f) { return measurable(b0(rep), f); }

/// Function s in T with f <= s <= g and h(s) = c, built as
/// max{f, min{g, s1}} from the first s1 with h(s1) = c.
inline std::size_t sandwich(const Representation &rep, std::size_t f, std::size_t g, Element c) {
    const auto &tribe = rep.tribe();
    const auto &m = rep.target();
    const auto &fv = tribe.function(f);
    const auto &gv = tribe.function(g);
    if (!pointwise_leq(fv, gv)) throw Error(ErrorKind::PreconditionFailed, "f <= g fails pointwise", {f, g});
    if (!m.leq(rep.h(f), c) || !m.leq(c, rep.h(g))) {
        throw Error(ErrorKind::PreconditionFailed, "h(f) <= c <= h(g) fails", {f, g, c});
    }
    const auto &s1 = tribe.function(rep.representative(c));
    FuzzyFunction s(fv.size());
    for (std::size_t p = 0; p < s.size(); ++p) s[p] = std::max(fv[p], std::min(gv[p], s1[p]));
    auto idx = tribe.find(s);
    if (!idx || rep.h(*idx) != c) {
        throw Error(ErrorKind::TheoremViolation, "sandwich " + format_function(s) + " not in T or h(s) != c", {f, g, c});
    }
    return *idx;
}

struct RegularityResult {
    bool holds = true;
    std::optional<std::size_t> witness; // first function breaking the biconditional
};

/// h(f) = 0  iff  chi_{N_Omega0(f)} in T and h(chi_{N_Omega0(f)}) = 0, for every f in T.
inline RegularityResult check_regular(const Representation &rep) {
    const auto &tribe = rep.tribe();
    for (std::size_t i = 0; i < tribe.size(); ++i) {
        bool lhs = rep.h(i) == rep.target().zero();
        auto chi = tribe.find(indicator(tribe.points(), support(tribe.function(i), rep.omega0())));
        bool rhs = chi && rep.h(*chi) == rep.target().zero();
        if (lhs != rhs) return {false, i};
    }
    return {};
}

struct CongruenceResult {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// h(f) = h(g)  iff  N_Omega0(f - g) lies in the ideal, for all pairs in T.
inline CongruenceResult check_ideal_congruence(const Representation &rep) {
    const auto &tribe = rep.tribe();
    for (std::size_t i = 0; i < tribe.size(); ++i) {
        for (std::size_t j = 0; j < tribe.size(); ++j) {
            FuzzyFunction diff(tribe.points());
            for (std::size_t p = 0; p < diff.size(); ++p) diff[p] = tribe.function(i)[p] - tribe.function(j)[p];
            bool same = rep.h(i) == rep.h(j);
            if (same != rep.in_ideal(support(diff, rep.omega0()))) return {false, std::pair{i, j}};
        }
    }
    return {};
}

struct SharpImageResult {
    bool holds = true;
    std::vector<Element> image;   // h(B0(T)), sorted
    std::vector<Element> sharp;   // Sh(M)
    std::vector<Element> missing; // in Sh(M), not hit
    std::vector<Element> extra;   // hit, not sharp
};

/// Compares h(B0(T)) with Sh(M), both inclusions.
inline SharpImageResult sharp_image(const Representation &rep, const SigmaAlgebraB0 &sigma) {
    SharpImageResult out;
    std::set<Element> image;
    for (const auto &a : sigma.sets) image.insert(rep.h(*rep.tribe().find(indicator(rep.points(), a))));
    out.image.assign(image.begin(), image.end());
    out.sharp = sharp_elements(rep.target(), check_rdp(rep.target()).holds).members();
    std::set_difference(out.sharp.begin(), out.sharp.end(), out.image.begin(), out.image.end(),
                        std::back_inserter(out.missing));
    std::set_difference(out.image.begin(), out.image.end(), out.sharp.begin(), out.sharp.end(),
                        std::back_inserter(out.extra));
    out.holds = out.missing.empty() && out.extra.empty();
    return out;
}

inline SharpImageResult sharp_image(const Representation &rep) { return sharp_image(rep, b0(rep)); }

/// Hypotheses under which a regular representation maps B0(T) onto Sh(M).
struct RegularHypotheses {
    bool target_rdp = false;
    bool tribe_rdp = false;
    bool all_measurable = false;
    /// h(f) <= h(g) implies {f > g} in B0(T) and h(chi_{f > g}) = 0.
    bool order_condition = false;
    /// min{f, 1 - f} in T for every f in T.
    bool min_closed = false;

    [[nodiscard]] bool all() const {
        return target_rdp && tribe_rdp && all_measurable && order_condition && min_closed;
    }
};

inline RegularHypotheses regular_hypotheses(const Representation &rep, const SigmaAlgebraB0 &sigma) {
    const auto &tribe = rep.tribe();
    const auto &m = rep.target();
    RegularHypotheses out;
    out.target_rdp = check_rdp(m).holds;
    out.tribe_rdp = sigma.tribe_has_rdp;
    out.all_measurable = std::all_of(tribe.functions().begin(), tribe.functions().end(),
                                     [&](const FuzzyFunction &f) { return measurable(sigma, f); });
    out.order_condition = true;
    for (std::size_t i = 0; i < tribe.size() && out.order_condition; ++i) {
        for (std::size_t j = 0; j < tribe.size(); ++j) {
            if (!m.leq(rep.h(i), rep.h(j))) continue;
            PointSet a;
            for (std::size_t p = 0; p < tribe.points(); ++p) {
                if (tribe.function(i)[p] > tribe.function(j)[p]) a.push_back(p);
            }
            auto chi = tribe.find(indicator(tribe.points(), a));
            if (!sigma.contains(a) || !chi || rep.h(*chi) != m.zero()) {
                out.order_condition = false;
                break;
            }
        }
    }
    out.min_closed = std::all_of(tribe.functions().begin(), tribe.functions().end(), [&](const FuzzyFunction &f) {
        FuzzyFunction g(f.size());
        for (std::size_t p = 0; p < f.size(); ++p) g[p] = std::min(f[p], Rational(1 - f[p]));
        return tribe.contains(g);
    });
    return out;
}

} // namespace effecta
