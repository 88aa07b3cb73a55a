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

#include <array>
#include <optional>
#include <vector>

#include "effecta/algebra.hpp"

namespace effecta {

/// Joint refinement of a1 + a2 = b1 + b2: rows sum to a1, a2 and columns
/// sum to b1, b2.
struct RefinementMatrix {
    Element c11 = 0, c12 = 0, c21 = 0, c22 = 0;

    [[nodiscard]] bool refines(const EffectAlgebra &m, Element a1, Element a2, Element b1,
                               Element b2) const {
        return m.sum_or_undefined(c11, c12) == a1 && m.sum_or_undefined(c21, c22) == a2 &&
               m.sum_or_undefined(c11, c21) == b1 && m.sum_or_undefined(c12, c22) == b2;
    }
};

struct RdpInstance {
    Element a1, a2, b1, b2;
    friend bool operator==(const RdpInstance &, const RdpInstance &) = default;
};

struct RdpResult {
    bool holds = true;
    /// Lexicographically first quadruple without a refinement.
    std::optional<RdpInstance> failure;
    /// Set when the failing quadruple was re-checked against all n^4 matrices.
    bool failure_exhausted = false;
    std::size_t instances_checked = 0;
};

/// True iff no 2x2 matrix of elements refines the instance; scans all n^4
/// matrices without using cancellation.
inline bool no_refinement_exists(const EffectAlgebra &m, const RdpInstance &q) {
    const std::size_t n = m.size();
    for (Element c11 = 0; c11 < n; ++c11) {
        for (Element c12 = 0; c12 < n; ++c12) {
            for (Element c21 = 0; c21 < n; ++c21) {
                for (Element c22 = 0; c22 < n; ++c22) {
                    if (RefinementMatrix{c11, c12, c21, c22}.refines(m, q.a1, q.a2, q.b1, q.b2)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// Finds a refinement of a1 + a2 = b1 + b2, or nullopt if none exists.
///
/// Fixing c11 determines the rest through cancellation: c12 = a1 - c11,
/// c21 = b1 - c11, c22 = a2 - c21; only c12 + c22 = b2 remains to test.
/// The scan over c11 therefore covers every candidate matrix.
inline std::optional<RefinementMatrix> find_refinement(const EffectAlgebra &m, Element a1, Element a2,
                                                       Element b1, Element b2) {
    const ElementSet candidates = m.down_set(a1) & m.down_set(b1);
    for (auto c11 = candidates.find_first(); c11 != ElementSet::npos; c11 = candidates.find_next(c11)) {
        Element c12 = *m.difference(a1, c11);
        Element c21 = *m.difference(b1, c11);
        auto c22 = m.difference(a2, c21);
        if (!c22) {
            continue;
        }
        if (m.sum_or_undefined(c12, *c22) == b2) {
            return RefinementMatrix{c11, c12, c21, *c22};
        }
    }
    return std::nullopt;
}

/// Riesz decomposition check over every quadruple with a1 + a2 = b1 + b2,
/// visited in lexicographic order of (a1, a2, b1, b2).
inline RdpResult check_rdp(const EffectAlgebra &m) {
    RdpResult result;
    const std::size_t n = m.size();
    for (Element a1 = 0; a1 < n; ++a1) {
        for (Element a2 = 0; a2 < n; ++a2) {
            Element total = m.sum_or_undefined(a1, a2);
            if (total == kUndefined) {
                continue;
            }
            const ElementSet &below = m.down_set(total);
            for (auto b1 = below.find_first(); b1 != ElementSet::npos; b1 = below.find_next(b1)) {
                Element b2 = *m.difference(total, b1);
                ++result.instances_checked;
                if (!find_refinement(m, a1, a2, b1, b2)) {
                    result.holds = false;
                    result.failure = RdpInstance{a1, a2, b1, b2};
                    result.failure_exhausted = no_refinement_exists(m, *result.failure);
                    return result;
                }
            }
        }
    }
    return result;
}

} // namespace effecta
