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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effecta/representation.hpp"

namespace effecta {

/// Interval of the real line with rational (or infinite) endpoints.
struct Interval {
    std::optional<Rational> lo; // nullopt = -inf
    std::optional<Rational> hi; // nullopt = +inf
    bool lo_closed = true;
    bool hi_closed = true;

    [[nodiscard]] bool contains(const Rational &t) const {
        if (lo && (lo_closed ? t < *lo : t <= *lo)) return false;
        if (hi && (hi_closed ? t > *hi : t >= *hi)) return false;
        return true;
    }
};

/// Finite union of intervals; enough to name every Borel set as far as a
/// finitely supported measure can tell.
struct BorelSet {
    std::vector<Interval> parts;

    [[nodiscard]] bool contains(const Rational &t) const {
        return std::any_of(parts.begin(), parts.end(), [&](const Interval &i) { return i.contains(t); });
    }

    static BorelSet empty() { return {}; }
    static BorelSet real_line() { return {{Interval{}}}; }
    static BorelSet point(const Rational &t) { return {{Interval{t, t, true, true}}}; }

    static BorelSet points(const RationalVector &ts) {
        BorelSet out;
        for (const auto &t : ts) out.parts.push_back(Interval{t, t, true, true});
        return out;
    }

    static BorelSet interval(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed) {
        return {{Interval{std::move(lo), std::move(hi), lo_closed, hi_closed}}};
    }
};

/// Subset of a finite support, bit i standing for the i-th support point.
using OutcomeMask = std::uint64_t;

inline constexpr std::size_t kMaxSupport = 20;

/// Observable with finitely many outcomes t_1 < ... < t_k.
class Observable {
  public:
    [[nodiscard]] const RationalVector &support() const noexcept { return support_; }
    [[nodiscard]] const std::vector<Element> &values() const noexcept { return values_; }
    [[nodiscard]] std::size_t outcomes() const noexcept { return support_.size(); }

    [[nodiscard]] OutcomeMask mask_of(const BorelSet &e) const {
        OutcomeMask mask = 0;
        for (std::size_t i = 0; i < support_.size(); ++i) {
            if (e.contains(support_[i])) mask |= OutcomeMask{1} << i;
        }
        return mask;
    }

    [[nodiscard]] OutcomeMask full_mask() const { return (OutcomeMask{1} << support_.size()) - 1; }

    /// x(E) for E given by the support points it contains.
    [[nodiscard]] Element at(const EffectAlgebra &m, OutcomeMask mask) const {
        std::vector<Element> parts;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (mask >> i & 1) parts.push_back(values_[i]);
        }
        auto s = m.sum_all(parts);
        if (!s) throw Error(ErrorKind::TheoremViolation, "subfamily of an orthogonal family is not summable");
        return *s;
    }

    [[nodiscard]] Element at(const EffectAlgebra &m, const BorelSet &e) const { return at(m, mask_of(e)); }

    friend Observable make_observable(const EffectAlgebra &m, RationalVector support, std::vector<Element> values);

  private:
    RationalVector support_;
    std::vector<Element> values_;
};

/// Checks that the values sum to 1 and sorts outcomes ascending.
inline Observable make_observable(const EffectAlgebra &m, RationalVector support, std::vector<Element> values) {
    if (support.empty() || support.size() != values.size()) {
        throw Error(ErrorKind::PreconditionFailed, "support and values must be nonempty and of equal length");
    }
    if (support.size() > kMaxSupport) {
        throw Error(ErrorKind::SizeLimitExceeded, "at most " + std::to_string(kMaxSupport) + " outcomes");
    }
    for (auto v : values) {
        if (v >= m.size()) throw Error(ErrorKind::PreconditionFailed, "value is not an element", {v});
    }
    std::vector<std::size_t> order(support.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return support[i] < support[j]; });
    Observable x;
    for (auto i : order) {
        if (!x.support_.empty() && x.support_.back() == support[i]) {
            throw Error(ErrorKind::PreconditionFailed, "repeated outcome " + to_string(support[i]));
        }
        x.support_.push_back(support[i]);
        x.values_.push_back(values[i]);
    }
    Element acc = m.zero();
    for (std::size_t i = 0; i < x.values_.size(); ++i) {
        auto s = m.sum(acc, x.values_[i]);
        if (!s) throw Error(ErrorKind::SumUndefined, "a_1 + ... + a_" + std::to_string(i + 1) + " undefined", {i});
        acc = *s;
    }
    if (acc != m.one()) throw Error(ErrorKind::SumNotOne, "values sum to " + m.label(acc), {acc});
    return x;
}

/// xi(A) = h(chi_A) on the atoms of B0(T).
struct SharpObservable {
    SigmaAlgebraB0 domain;
    std::vector<Element> values; // per atom

    /// xi(A) for A a union of atoms given by mask.
    [[nodiscard]] Element at(const EffectAlgebra &m, OutcomeMask atoms) const {
        std::vector<Element> parts;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (atoms >> i & 1) parts.push_back(values[i]);
        }
        return *m.sum_all(parts);
    }
};

inline SharpObservable sharp_observable(const Representation &rep, const SigmaAlgebraB0 &sigma) {
    SharpObservable xi{sigma, {}};
    const auto &m = rep.target();
    for (const auto &atom : sigma.atoms) {
        auto chi = rep.tribe().find(indicator(rep.points(), atom));
        if (!chi) throw Error(ErrorKind::TheoremViolation, "atom of B0(T) has no characteristic function in T");
        Element v = rep.h(*chi);
        if (!is_sharp(m, v)) throw Error(ErrorKind::TheoremViolation, "xi takes non-sharp value " + m.label(v), {v});
        xi.values.push_back(v);
    }
    auto total = m.sum_all(xi.values);
    if (!total || *total != m.one()) throw Error(ErrorKind::TheoremViolation, "xi of the atoms does not sum to 1");
    return xi;
}

inline SharpObservable sharp_observable(const Representation &rep) { return sharp_observable(rep, b0(rep)); }

/// f_E for every E generated by the support points, indexed by OutcomeMask.
struct SmearingKernel {
    std::vector<FuzzyFunction> functions;

    [[nodiscard]] const FuzzyFunction &at(OutcomeMask mask) const { return functions.at(mask); }
};

/// Which member of h^{-1}(x(E)) serves as f_E.
enum class KernelChoice { First, Last };

inline SmearingKernel smear(const Representation &rep, const SigmaAlgebraB0 &sigma, const Observable &x,
                            KernelChoice choice = KernelChoice::First) {
    SmearingKernel k;
    for (OutcomeMask mask = 0; mask <= x.full_mask(); ++mask) {
        auto pre = rep.preimage(x.at(rep.target(), mask));
        if (pre.empty()) throw Error(ErrorKind::InvalidRepresentation, "h is not onto");
        const auto &f = rep.tribe().function(choice == KernelChoice::First ? pre.front() : pre.back());
        if (!measurable(sigma, f)) {
            throw Error(ErrorKind::NotMeasurable, "f_E = " + format_function(f) + " is not B0(T)-measurable",
                        {static_cast<std::size_t>(mask)});
        }
        k.functions.push_back(f);
    }
    return k;
}

inline SmearingKernel smear(const Representation &rep, const Observable &x) { return smear(rep, b0(rep), x); }

/// Integral of f over Omega against m o xi, as a sum over the atoms of B0(T).
inline Rational integrate(const FuzzyFunction &f, const SharpObservable &xi, const State &m) {
    Rational total = 0;
    for (std::size_t i = 0; i < xi.values.size(); ++i) {
        const auto &atom = xi.domain.atoms[i];
        for (auto p : atom) {
            if (f.at(p) != f.at(atom.front())) {
                throw Error(ErrorKind::NotMeasurable, "integrand not constant on an atom", {p});
            }
        }
        total += f.at(atom.front()) * m(xi.values[i]);
    }
    return total;
}

struct SmearingCheck {
    bool ok = true;
    std::vector<Rational> residuals; // m(x(E)) - integral, per mask
};

/// m(x(E)) = integral of f_E d(m o xi) for every E generated by the support.
inline SmearingCheck verify_smearing(const Representation &rep, const Observable &x, const SmearingKernel &kernel,
                                     const SharpObservable &xi, const State &m) {
    SmearingCheck out;
    for (OutcomeMask mask = 0; mask <= x.full_mask(); ++mask) {
        Rational r = m(x.at(rep.target(), mask)) - integrate(kernel.at(mask), xi, m);
        if (sgn(r) != 0) out.ok = false;
        out.residuals.push_back(std::move(r));
    }
    return out;
}

/// The integral does not depend on which f_E with h(f_E) = x(E) is used.
inline bool kernel_independence_check(const Representation &rep, const Observable &x, const SharpObservable &xi,
                                      const State &m, const std::vector<SmearingKernel> &alternatives) {
    std::optional<std::vector<Rational>> reference;
    for (const auto &k : alternatives) {
        if (k.functions.size() != x.full_mask() + 1) throw Error(ErrorKind::NotAKernel, "kernel has wrong arity");
        std::vector<Rational> integrals;
        for (OutcomeMask mask = 0; mask <= x.full_mask(); ++mask) {
            auto idx = rep.tribe().find(k.at(mask));
            if (!idx || rep.h(*idx) != x.at(rep.target(), mask)) {
                throw Error(ErrorKind::NotAKernel, "h(f_E) != x(E)", {static_cast<std::size_t>(mask)});
            }
            integrals.push_back(integrate(k.at(mask), xi, m));
        }
        if (!reference) {
            reference = std::move(integrals);
        } else if (*reference != integrals) {
            return false;
        }
    }
    return true;
}

/// Every observable whose values are 2 or 3 elements (with repetition,
/// ids non-decreasing) summing to 1, on outcomes 0, 1, 2, plus the trivial
/// one. Zero values are skipped.
inline std::vector<Observable> small_observables(const EffectAlgebra &m) {
    std::vector<Observable> out;
    out.push_back(make_observable(m, {Rational(1)}, {m.one()}));
    for (Element a = 0; a < m.size(); ++a) {
        if (a == m.zero() || a == m.one()) continue;
        out.push_back(make_observable(m, {Rational(0), Rational(1)}, {a, m.supplement(a)}));
    }
    for (Element a = 0; a < m.size(); ++a) {
        if (a == m.zero()) continue;
        for (Element b = a; b < m.size(); ++b) {
            if (b == m.zero()) continue;
            auto ab = m.sum(a, b);
            if (!ab || *ab == m.one()) continue;
            Element c = m.supplement(*ab);
            if (c < b || c == m.zero()) continue;
            out.push_back(make_observable(m, {Rational(0), Rational(1), Rational(2)}, {a, b, c}));
        }
    }
    return out;
}

} // namespace effecta
