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
#include <string>
#include <vector>

#include "effecta/algebra.hpp"
#include "effecta/rdp.hpp"

namespace effecta {

/// Failure of a Boolean-algebra law on the sharp set.
struct BooleanLawFailure {
    std::string law;
    std::vector<Element> witnesses;
};

/// Sharp elements with meet and join computed inside the member set under
/// the parent's order.
class SharpSet {
  public:
    [[nodiscard]] const std::vector<Element> &members() const noexcept { return members_; }
    [[nodiscard]] bool contains(Element a) const { return is_member_.test(a); }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }

    /// Meet inside Sh(M); kUndefined when no greatest common lower bound exists there.
    [[nodiscard]] Element meet(Element a, Element b) const { return meet_[pos_.at(a) * k_ + pos_.at(b)]; }
    [[nodiscard]] Element join(Element a, Element b) const { return join_[pos_.at(a) * k_ + pos_.at(b)]; }

    /// Minimal nonzero members.
    [[nodiscard]] std::vector<Element> atoms(const EffectAlgebra &m) const {
        std::vector<Element> out;
        for (Element a : members_) {
            if (a == m.zero()) {
                continue;
            }
            bool minimal = true;
            for (Element b : members_) {
                if (b != m.zero() && b != a && m.leq(b, a)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) {
                out.push_back(a);
            }
        }
        return out;
    }

    /// Set by sharp_elements after the exhaustive Boolean-law scan passed.
    [[nodiscard]] bool boolean_verified() const noexcept { return boolean_verified_; }
    [[nodiscard]] const std::optional<BooleanLawFailure> &boolean_failure() const noexcept {
        return failure_;
    }

  private:
    friend SharpSet sharp_elements(const EffectAlgebra &m, bool has_rdp);

    SharpSet(const EffectAlgebra &m, std::vector<Element> members)
        : members_(std::move(members)), is_member_(m.size()), pos_(m.size(), kUndefined),
          k_(members_.size()) {
        for (std::size_t i = 0; i < k_; ++i) {
            is_member_.set(members_[i]);
            pos_[members_[i]] = i;
        }
        meet_.assign(k_ * k_, kUndefined);
        join_.assign(k_ * k_, kUndefined);
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::size_t j = 0; j < k_; ++j) {
                meet_[i * k_ + j] = bound(m, members_[i], members_[j], true);
                join_[i * k_ + j] = bound(m, members_[i], members_[j], false);
            }
        }
    }

    Element bound(const EffectAlgebra &m, Element a, Element b, bool lower) const {
        std::vector<Element> common;
        for (Element c : members_) {
            if (lower ? (m.leq(c, a) && m.leq(c, b)) : (m.leq(a, c) && m.leq(b, c))) {
                common.push_back(c);
            }
        }
        for (Element c : common) {
            bool extreme = true;
            for (Element d : common) {
                if (lower ? !m.leq(d, c) : !m.leq(c, d)) {
                    extreme = false;
                    break;
                }
            }
            if (extreme) {
                return c;
            }
        }
        return kUndefined;
    }

    std::optional<BooleanLawFailure> find_boolean_failure(const EffectAlgebra &m) const {
        const Element zero = m.zero();
        const Element one = m.one();
        if (!contains(zero) || !contains(one)) {
            return BooleanLawFailure{"contains 0 and 1", {}};
        }
        for (Element a : members_) {
            if (!contains(m.supplement(a))) {
                return BooleanLawFailure{"closed under supplement", {a}};
            }
        }
        for (Element a : members_) {
            for (Element b : members_) {
                if (meet(a, b) == kUndefined || join(a, b) == kUndefined) {
                    return BooleanLawFailure{"meets and joins exist", {a, b}};
                }
            }
        }
        for (Element a : members_) {
            Element s = m.supplement(a);
            if (meet(a, s) != zero || join(a, s) != one) {
                return BooleanLawFailure{"complement", {a}};
            }
            if (meet(a, one) != a || join(a, zero) != a) {
                return BooleanLawFailure{"bounds", {a}};
            }
            for (Element b : members_) {
                if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) {
                    return BooleanLawFailure{"absorption", {a, b}};
                }
                if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a)) {
                    return BooleanLawFailure{"commutativity", {a, b}};
                }
                for (Element c : members_) {
                    if (meet(a, meet(b, c)) != meet(meet(a, b), c) ||
                        join(a, join(b, c)) != join(join(a, b), c)) {
                        return BooleanLawFailure{"associativity", {a, b, c}};
                    }
                    if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)) ||
                        join(a, meet(b, c)) != meet(join(a, b), join(a, c))) {
                        return BooleanLawFailure{"distributivity", {a, b, c}};
                    }
                }
            }
        }
        return std::nullopt;
    }

    std::vector<Element> members_;
    ElementSet is_member_;
    std::vector<std::size_t> pos_;
    std::size_t k_;
    std::vector<Element> meet_;
    std::vector<Element> join_;
    bool boolean_verified_ = false;
    std::optional<BooleanLawFailure> failure_;
};

/// a is sharp iff a ^ a' exists in M and equals 0.
inline bool is_sharp(const EffectAlgebra &m, Element a) { return m.meet(a, m.supplement(a)) == m.zero(); }

/// Collects Sh(M) and runs the Boolean-law scan. With RDP a failing law is
/// impossible, so it raises BooleanStructureFailure; without RDP the failure
/// is only recorded.
inline SharpSet sharp_elements(const EffectAlgebra &m, bool has_rdp) {
    std::vector<Element> members;
    for (Element a = 0; a < m.size(); ++a) {
        if (is_sharp(m, a)) {
            members.push_back(a);
        }
    }
    SharpSet sh(m, std::move(members));
    sh.failure_ = sh.find_boolean_failure(m);
    sh.boolean_verified_ = !sh.failure_.has_value();
    if (has_rdp && sh.failure_) {
        std::vector<std::size_t> w(sh.failure_->witnesses.begin(), sh.failure_->witnesses.end());
        throw Error(ErrorKind::BooleanStructureFailure,
                    "Sh(M) of an RDP algebra fails the law '" + sh.failure_->law + "'", w);
    }
    return sh;
}

inline SharpSet sharp_elements(const EffectAlgebra &m) { return sharp_elements(m, check_rdp(m).holds); }

} // namespace effecta
