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
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "effecta/error.hpp"

namespace effecta {

/// Dense element identifier; labels live in a separate map.
using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;

inline constexpr Element kUndefined = std::numeric_limits<Element>::max();

/// Unvalidated input. Each triple (a, b, c) states a + b = c; the mirrored
/// entry b + a = c is implied.
struct RawTable {
    std::vector<std::string> labels;
    Element zero = 0;
    Element one = 0;
    std::vector<std::array<Element, 3>> sums;
};

/// First failure found while validating a RawTable.
struct Violation {
    ErrorKind kind = ErrorKind::AxiomViolation;
    int axiom = 0; // 1..4 when kind == AxiomViolation
    std::vector<Element> witnesses;
    std::string message;
};

class EffectAlgebra;
std::optional<Violation> find_violation(const RawTable &raw);

/// A finite effect algebra with an explicit partial-addition table.
///
/// Instances only exist validated: the factory rejects any table violating
/// commutativity, associativity, unique supplements or positivity, so every
/// accessor can assume the axioms. The derived order, differences, meets
/// and joins are computed once at construction.
class EffectAlgebra {
  public:
    /// Validates and builds. Throws Error carrying the violation's kind and
    /// witnesses.
    static EffectAlgebra from_table(const RawTable &raw) {
        if (auto v = find_violation(raw)) {
            throw Error(v->kind, v->message, v->witnesses);
        }
        return EffectAlgebra(raw);
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Element zero() const noexcept { return zero_; }
    [[nodiscard]] Element one() const noexcept { return one_; }

    [[nodiscard]] const std::string &label(Element a) const { return labels_.at(a); }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }

    [[nodiscard]] std::optional<Element> find(const std::string &label) const {
        auto it = index_.find(label);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// a + b, or nullopt when undefined.
    [[nodiscard]] std::optional<Element> sum(Element a, Element b) const {
        Element c = sum_[a * n_ + b];
        if (c == kUndefined) {
            return std::nullopt;
        }
        return c;
    }
    [[nodiscard]] Element sum_or_undefined(Element a, Element b) const { return sum_[a * n_ + b]; }
    [[nodiscard]] bool defined(Element a, Element b) const { return sum_[a * n_ + b] != kUndefined; }

    [[nodiscard]] Element supplement(Element a) const { return supplement_[a]; }

    [[nodiscard]] bool leq(Element a, Element b) const { return difference_[b * n_ + a] != kUndefined; }

    /// b - a, defined iff a <= b.
    [[nodiscard]] std::optional<Element> difference(Element b, Element a) const {
        Element c = difference_[b * n_ + a];
        if (c == kUndefined) {
            return std::nullopt;
        }
        return c;
    }

    /// Greatest lower bound in the derived order; nullopt if it does not exist.
    [[nodiscard]] std::optional<Element> meet(Element a, Element b) const {
        Element c = meet_[a * n_ + b];
        if (c == kUndefined) {
            return std::nullopt;
        }
        return c;
    }
    [[nodiscard]] std::optional<Element> join(Element a, Element b) const {
        Element c = join_[a * n_ + b];
        if (c == kUndefined) {
            return std::nullopt;
        }
        return c;
    }

    [[nodiscard]] const ElementSet &down_set(Element a) const { return down_[a]; }
    [[nodiscard]] const ElementSet &up_set(Element a) const { return up_[a]; }

    /// Defined sums with a <= b by id, in lexicographic order.
    [[nodiscard]] std::vector<std::array<Element, 3>> defined_sums() const {
        std::vector<std::array<Element, 3>> out;
        for (Element a = 0; a < n_; ++a) {
            for (Element b = a; b < n_; ++b) {
                if (defined(a, b)) {
                    out.push_back({a, b, sum_[a * n_ + b]});
                }
            }
        }
        return out;
    }

    [[nodiscard]] RawTable to_raw() const { return {labels_, zero_, one_, defined_sums()}; }

    /// Iterated sum of `parts`; nullopt as soon as a partial sum is undefined.
    [[nodiscard]] std::optional<Element> sum_all(const std::vector<Element> &parts) const {
        Element acc = zero_;
        for (Element p : parts) {
            Element next = sum_[acc * n_ + p];
            if (next == kUndefined) {
                return std::nullopt;
            }
            acc = next;
        }
        return acc;
    }

    /// Structural equality: identical tables under identical labelling.
    friend bool operator==(const EffectAlgebra &x, const EffectAlgebra &y) {
        return x.n_ == y.n_ && x.zero_ == y.zero_ && x.one_ == y.one_ &&
               x.labels_ == y.labels_ && x.sum_ == y.sum_;
    }

  private:
    explicit EffectAlgebra(const RawTable &raw)
        : n_(raw.labels.size()), zero_(raw.zero), one_(raw.one), labels_(raw.labels),
          sum_(n_ * n_, kUndefined), supplement_(n_, kUndefined),
          difference_(n_ * n_, kUndefined), meet_(n_ * n_, kUndefined),
          join_(n_ * n_, kUndefined) {
        for (Element i = 0; i < n_; ++i) {
            index_.emplace(labels_[i], i);
        }
        for (const auto &[a, b, c] : raw.sums) {
            sum_[a * n_ + b] = c;
            sum_[b * n_ + a] = c;
        }
        down_.assign(n_, ElementSet(n_));
        up_.assign(n_, ElementSet(n_));
        for (Element a = 0; a < n_; ++a) {
            for (Element c = 0; c < n_; ++c) {
                Element b = sum_[a * n_ + c];
                if (b == kUndefined) {
                    continue;
                }
                difference_[b * n_ + a] = c;
                down_[b].set(a);
                up_[a].set(b);
                if (b == one_) {
                    supplement_[a] = c;
                }
            }
        }
        for (Element a = 0; a < n_; ++a) {
            for (Element b = a; b < n_; ++b) {
                Element m = greatest_in(down_[a] & down_[b]);
                Element j = least_in(up_[a] & up_[b]);
                meet_[a * n_ + b] = meet_[b * n_ + a] = m;
                join_[a * n_ + b] = join_[b * n_ + a] = j;
            }
        }
    }

    Element greatest_in(const ElementSet &lower) const {
        for (auto m = lower.find_first(); m != ElementSet::npos; m = lower.find_next(m)) {
            if (lower.is_subset_of(down_[m])) {
                return m;
            }
        }
        return kUndefined;
    }

    Element least_in(const ElementSet &upper) const {
        for (auto m = upper.find_first(); m != ElementSet::npos; m = upper.find_next(m)) {
            if (upper.is_subset_of(up_[m])) {
                return m;
            }
        }
        return kUndefined;
    }

    std::size_t n_;
    Element zero_;
    Element one_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Element> index_;
    std::vector<Element> sum_;
    std::vector<Element> supplement_;
    std::vector<Element> difference_; // [b * n + a] = b - a
    std::vector<Element> meet_;
    std::vector<Element> join_;
    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
};

namespace detail {

inline Violation axiom_violation(int axiom, std::vector<Element> witnesses, std::string message) {
    return {ErrorKind::AxiomViolation, axiom, std::move(witnesses),
            "axiom (" + std::string(axiom == 1 ? "i" : axiom == 2 ? "ii" : axiom == 3 ? "iii" : "iv") +
                "): " + std::move(message)};
}

inline std::string triple(const RawTable &raw, Element a, Element b, Element c) {
    return "(" + raw.labels[a] + ", " + raw.labels[b] + ", " + raw.labels[c] + ")";
}

} // namespace detail

/// Checks a raw table against the effect-algebra axioms and the derived-order
/// laws. Local axioms (i), (iii), (iv) are checked before the cubic
/// associativity scan; within each axiom the lexicographically first witness
/// is reported.
inline std::optional<Violation> find_violation(const RawTable &raw) {
    const std::size_t n = raw.labels.size();
    if (n == 0) {
        return Violation{ErrorKind::MalformedTable, 0, {}, "no elements"};
    }
    if (raw.zero >= n || raw.one >= n) {
        return Violation{ErrorKind::MalformedTable, 0, {}, "zero/one index out of range"};
    }
    {
        std::unordered_map<std::string, Element> seen;
        for (Element i = 0; i < n; ++i) {
            if (raw.labels[i].empty() || !seen.emplace(raw.labels[i], i).second) {
                return Violation{ErrorKind::MalformedTable, 0, {i},
                                 "empty or duplicate label '" + raw.labels[i] + "'"};
            }
        }
    }
    if (raw.zero == raw.one) {
        return detail::axiom_violation(4, {raw.zero, raw.one}, "0 and 1 coincide");
    }

    std::vector<Element> ordered(n * n, kUndefined);
    for (const auto &[a, b, c] : raw.sums) {
        if (a >= n || b >= n || c >= n) {
            return Violation{ErrorKind::MalformedTable, 0, {}, "sum entry index out of range"};
        }
        Element &slot = ordered[a * n + b];
        if (slot != kUndefined && slot != c) {
            return Violation{ErrorKind::MalformedTable, 0, {a, b},
                             "conflicting entries for " + raw.labels[a] + " + " + raw.labels[b]};
        }
        slot = c;
    }
    // (i): an explicit entry for (b, a) must agree with (a, b).
    for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
            Element x = ordered[a * n + b];
            Element y = ordered[b * n + a];
            if (x != kUndefined && y != kUndefined && x != y) {
                return detail::axiom_violation(1, {a, b}, raw.labels[a] + " + " + raw.labels[b] +
                                                              " differs from " + raw.labels[b] + " + " +
                                                              raw.labels[a]);
            }
        }
    }
    std::vector<Element> sum(n * n, kUndefined);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            Element c = ordered[a * n + b] != kUndefined ? ordered[a * n + b] : ordered[b * n + a];
            sum[a * n + b] = c;
        }
    }
    auto s = [&](Element a, Element b) { return sum[a * n + b]; };

    // (iii)
    for (Element a = 0; a < n; ++a) {
        std::vector<Element> supps;
        for (Element b = 0; b < n; ++b) {
            if (s(a, b) == raw.one) {
                supps.push_back(b);
            }
        }
        if (supps.empty()) {
            return detail::axiom_violation(3, {a}, raw.labels[a] + " has no supplement");
        }
        if (supps.size() > 1) {
            return Violation{ErrorKind::NonUniqueSupplement, 3, {a, supps[0], supps[1]},
                             raw.labels[a] + " has supplements " + raw.labels[supps[0]] + " and " +
                                 raw.labels[supps[1]]};
        }
    }
    // (iv)
    for (Element a = 0; a < n; ++a) {
        if (a != raw.zero && s(a, raw.one) != kUndefined) {
            return detail::axiom_violation(4, {a, raw.one, s(a, raw.one)},
                                           raw.labels[a] + " + 1 is defined but " + raw.labels[a] + " != 0");
        }
    }
    // (ii)
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            Element ab = s(a, b);
            for (Element c = 0; c < n; ++c) {
                Element left = ab == kUndefined ? kUndefined : s(ab, c);
                Element bc = s(b, c);
                Element right = bc == kUndefined ? kUndefined : s(a, bc);
                if (left != right) {
                    return detail::axiom_violation(2, {a, b, c},
                                                   "(a + b) + c != a + (b + c) at " +
                                                       detail::triple(raw, a, b, c));
                }
            }
        }
    }
    // Derived order: unique differences and antisymmetry.
    std::vector<Element> diff(n * n, kUndefined);
    for (Element a = 0; a < n; ++a) {
        for (Element c = 0; c < n; ++c) {
            Element b = s(a, c);
            if (b == kUndefined) {
                continue;
            }
            Element &slot = diff[b * n + a];
            if (slot != kUndefined && slot != c) {
                return Violation{ErrorKind::NonUniqueDifference, 0, {a, slot, c},
                                 raw.labels[b] + " - " + raw.labels[a] + " is not unique"};
            }
            slot = c;
        }
    }
    for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) {
            if (diff[b * n + a] != kUndefined && diff[a * n + b] != kUndefined) {
                return Violation{ErrorKind::OrderNotAntisymmetric, 0, {a, b},
                                 raw.labels[a] + " <= " + raw.labels[b] + " <= " + raw.labels[a]};
            }
        }
    }
    return std::nullopt;
}

/// Result form of validation: the algebra, or the first violation.
struct ValidationResult {
    std::optional<EffectAlgebra> algebra;
    std::optional<Violation> violation;
    [[nodiscard]] bool ok() const { return algebra.has_value(); }
};

inline ValidationResult validate_effect_algebra(const RawTable &raw) {
    if (auto v = find_violation(raw)) {
        return {std::nullopt, std::move(v)};
    }
    return {EffectAlgebra::from_table(raw), std::nullopt};
}

} // namespace effecta
