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

#include <optional>
#include <vector>

#include "effecta/algebra.hpp"

namespace effecta {

/// Total MV operations on the carrier of an effect algebra.
struct MVStructure {
    std::size_t n = 0;
    std::vector<Element> oplus; // [a * n + b]
    std::vector<Element> star;

    [[nodiscard]] Element add(Element a, Element b) const { return oplus[a * n + b]; }
};

/// First witness for one failed MV axiom, numbered (i)..(viii) as 1..8.
struct MVAxiomFailure {
    int axiom;
    std::vector<Element> witnesses;
};

struct MVResult {
    std::optional<MVStructure> structure;
    /// Pair lacking a meet or join, when the derived order is not a lattice.
    std::optional<std::pair<Element, Element>> not_lattice;
    /// One entry per failed axiom, ascending by axiom number.
    std::vector<MVAxiomFailure> failures;
    /// Pair (a, b) with a + b defined but a + b != a (+) b.
    std::optional<std::pair<Element, Element>> inconsistent_sum;

    [[nodiscard]] bool is_mv() const { return structure.has_value(); }
    [[nodiscard]] bool failed(int axiom) const {
        for (const auto &f : failures) {
            if (f.axiom == axiom) {
                return true;
            }
        }
        return false;
    }
};

/// Checks MV axioms (i)-(viii) for a given total structure; records the first
/// witness for each failing axiom.
inline std::vector<MVAxiomFailure> mv_axiom_failures(const MVStructure &mv, Element zero, Element one) {
    const std::size_t n = mv.n;
    std::vector<std::optional<std::vector<Element>>> first(9);
    auto note = [&](int axiom, std::vector<Element> w) {
        if (!first[axiom]) {
            first[axiom] = std::move(w);
        }
    };
    auto add = [&](Element a, Element b) { return mv.add(a, b); };
    auto st = [&](Element a) { return mv.star[a]; };
    if (st(zero) != one) {
        note(7, {zero});
    }
    for (Element a = 0; a < n; ++a) {
        if (add(a, zero) != a) note(3, {a});
        if (add(a, one) != one) note(4, {a});
        if (st(st(a)) != a) note(5, {a});
        if (add(a, st(a)) != one) note(6, {a});
        for (Element b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) note(1, {a, b});
            if (add(st(add(st(a), b)), b) != add(st(add(a, st(b))), a)) note(8, {a, b});
            for (Element c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) note(2, {a, b, c});
            }
        }
    }
    std::vector<MVAxiomFailure> out;
    for (int i = 1; i <= 8; ++i) {
        if (first[i]) {
            out.push_back({i, *first[i]});
        }
    }
    return out;
}

/// Attempts to extend + to a total MV operation.
///
/// In an MV-algebra a (+) b = a + (a' ^ b) and a* = a', so this candidate is
/// the only possible one; if it fails an axiom no MV structure inducing + exists.
inline MVResult detect_mv(const EffectAlgebra &m) {
    MVResult result;
    const std::size_t n = m.size();
    for (Element a = 0; a < n && !result.not_lattice; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (!m.meet(a, b) || !m.join(a, b)) {
                result.not_lattice = std::pair{a, b};
                break;
            }
        }
    }
    if (result.not_lattice) {
        return result;
    }
    MVStructure mv;
    mv.n = n;
    mv.oplus.resize(n * n);
    mv.star.resize(n);
    for (Element a = 0; a < n; ++a) {
        mv.star[a] = m.supplement(a);
        for (Element b = 0; b < n; ++b) {
            Element part = *m.meet(m.supplement(a), b);
            mv.oplus[a * n + b] = *m.sum(a, part);
        }
    }
    for (Element a = 0; a < n && !result.inconsistent_sum; ++a) {
        for (Element b = 0; b < n; ++b) {
            bool below = m.leq(a, mv.star[b]);
            if (below != m.defined(a, b) || (below && *m.sum(a, b) != mv.add(a, b))) {
                result.inconsistent_sum = std::pair{a, b};
                break;
            }
        }
    }
    result.failures = mv_axiom_failures(mv, m.zero(), m.one());
    if (result.failures.empty() && !result.inconsistent_sum) {
        result.structure = std::move(mv);
    }
    return result;
}

} // namespace effecta
