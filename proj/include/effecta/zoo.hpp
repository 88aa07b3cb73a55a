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

#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "effecta/algebra.hpp"

namespace effecta {

inline constexpr std::size_t kDefaultMaxSize = 64;

/// Size bound from EFFECTA_MAX_SIZE when set, else `fallback`.
inline std::size_t configured_max_size(std::size_t fallback = kDefaultMaxSize) {
    if (const char *env = std::getenv("EFFECTA_MAX_SIZE")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return fallback;
}

/// Description of a generated algebra family.
struct FamilySpec {
    enum class Kind { Chain, Boolean, Interval, Product, HorizontalSum };

    Kind kind = Kind::Chain;
    std::vector<std::size_t> params; // chain: {n}; boolean: {k}; interval: u
    std::vector<FamilySpec> parts;   // product / horizontal sum operands

    static FamilySpec chain(std::size_t n) { return {Kind::Chain, {n}, {}}; }
    static FamilySpec boolean(std::size_t k) { return {Kind::Boolean, {k}, {}}; }
    static FamilySpec interval(std::vector<std::size_t> u) { return {Kind::Interval, std::move(u), {}}; }
    static FamilySpec product(std::vector<FamilySpec> parts) { return {Kind::Product, {}, std::move(parts)}; }
    static FamilySpec horizontal_sum(std::vector<FamilySpec> parts) {
        return {Kind::HorizontalSum, {}, std::move(parts)};
    }

    /// Canonical text, e.g. "product(chain(2),chain(3))"; parse_family reads it back.
    [[nodiscard]] std::string to_string() const {
        auto join_params = [&] {
            std::string s;
            for (std::size_t i = 0; i < params.size(); ++i) {
                s += (i ? "," : "") + std::to_string(params[i]);
            }
            return s;
        };
        auto join_parts = [&] {
            std::string s;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                s += (i ? "," : "") + parts[i].to_string();
            }
            return s;
        };
        switch (kind) {
        case Kind::Chain: return "chain(" + join_params() + ")";
        case Kind::Boolean: return "boolean(" + join_params() + ")";
        case Kind::Interval: return "interval(" + join_params() + ")";
        case Kind::Product: return "product(" + join_parts() + ")";
        case Kind::HorizontalSum: return "horizontal-sum(" + join_parts() + ")";
        }
        return {};
    }

    /// Element count of the generated algebra, saturating instead of overflowing.
    [[nodiscard]] std::size_t predicted_size() const {
        constexpr std::size_t cap = std::size_t{1} << 40;
        auto sat_mul = [&](std::size_t a, std::size_t b) { return (a == 0 || b <= cap / a) ? a * b : cap; };
        switch (kind) {
        case Kind::Chain: return params.at(0) + 1;
        case Kind::Boolean: return params.at(0) >= 40 ? cap : std::size_t{1} << params.at(0);
        case Kind::Interval: {
            std::size_t s = 1;
            for (auto u : params) s = sat_mul(s, u + 1);
            return s;
        }
        case Kind::Product: {
            std::size_t s = 1;
            for (const auto &p : parts) s = sat_mul(s, p.predicted_size());
            return s;
        }
        case Kind::HorizontalSum: {
            std::size_t s = 2;
            for (const auto &p : parts) s += p.predicted_size() - 2;
            return s;
        }
        }
        return 0;
    }
};

namespace detail {

class FamilyParser {
  public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = parse();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return spec;
    }

  private:
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorKind::ParseError, "family spec '" + std::string(text_) + "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::size_t number() {
        skip_ws();
        if (!at_digit()) fail("expected a number");
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos_;
        }
        return v;
    }

    std::vector<std::size_t> numbers() {
        std::vector<std::size_t> out{number()};
        while (eat(',') || eat('x')) out.push_back(number());
        return out;
    }

    FamilySpec parse() {
        std::string name = ident();
        if (name == "chain" || name == "boolean") {
            bool paren = eat('(');
            std::size_t v = number();
            if (paren && !eat(')')) fail("expected ')'");
            if (name == "chain" && v == 0) fail("chain(0) has 0 = 1");
            if (name == "boolean" && v == 0) fail("boolean(0) has 0 = 1");
            return name == "chain" ? FamilySpec::chain(v) : FamilySpec::boolean(v);
        }
        if (name == "interval") {
            bool paren = eat('(');
            auto u = numbers();
            if (paren && !eat(')')) fail("expected ')'");
            bool nonzero = false;
            for (auto x : u) nonzero = nonzero || x > 0;
            if (!nonzero) fail("interval unit must be nonzero");
            return FamilySpec::interval(std::move(u));
        }
        if (name == "product" || name == "horizontal-sum" || name == "hsum") {
            if (!eat('(')) fail("expected '(' after " + name);
            std::vector<FamilySpec> parts{parse()};
            while (eat(',')) parts.push_back(parse());
            if (!eat(')')) fail("expected ')'");
            return name == "product" ? FamilySpec::product(std::move(parts))
                                     : FamilySpec::horizontal_sum(std::move(parts));
        }
        fail("unknown family '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses the canonical form ("chain(3)", "product(chain(2),boolean(2))") and
/// the compact forms "chain3", "chain 3", "interval 1,2".
inline FamilySpec parse_family(std::string_view text) { return detail::FamilyParser(text).parse_all(); }

/// Command-line word form: {"product", "chain2", "chain3"} or {"chain", "3"}.
inline FamilySpec parse_family_words(const std::vector<std::string> &words) {
    if (words.empty()) {
        throw Error(ErrorKind::ParseError, "empty family spec");
    }
    const std::string &head = words.front();
    if ((head == "product" || head == "horizontal-sum" || head == "hsum") && words.size() > 1) {
        std::vector<FamilySpec> parts;
        for (std::size_t i = 1; i < words.size(); ++i) parts.push_back(parse_family(words[i]));
        return head == "product" ? FamilySpec::product(std::move(parts))
                                 : FamilySpec::horizontal_sum(std::move(parts));
    }
    std::string joined;
    for (const auto &w : words) joined += (joined.empty() ? "" : " ") + w;
    return parse_family(joined);
}

namespace detail {

inline RawTable interval_table(const std::vector<std::size_t> &u) {
    RawTable raw;
    std::size_t k = u.size();
    std::size_t n = 1;
    for (auto x : u) n *= x + 1;
    auto coords = [&](std::size_t id) {
        std::vector<std::size_t> c(k);
        for (std::size_t j = k; j-- > 0;) {
            c[j] = id % (u[j] + 1);
            id /= u[j] + 1;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::size_t> &c) {
        std::size_t id = 0;
        for (std::size_t j = 0; j < k; ++j) id = id * (u[j] + 1) + c[j];
        return id;
    };
    for (std::size_t id = 0; id < n; ++id) {
        auto c = coords(id);
        if (k == 1) {
            raw.labels.push_back(std::to_string(c[0]));
        } else {
            std::string l = "(";
            for (std::size_t j = 0; j < k; ++j) l += (j ? "," : "") + std::to_string(c[j]);
            raw.labels.push_back(l + ")");
        }
    }
    raw.zero = 0;
    raw.one = n - 1;
    for (std::size_t a = 0; a < n; ++a) {
        auto ca = coords(a);
        for (std::size_t b = a; b < n; ++b) {
            auto cb = coords(b);
            std::vector<std::size_t> cs(k);
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                cs[j] = ca[j] + cb[j];
                ok = cs[j] <= u[j];
            }
            if (ok) raw.sums.push_back({a, b, encode(cs)});
        }
    }
    return raw;
}

inline RawTable boolean_table(std::size_t k) {
    RawTable raw;
    std::size_t n = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < n; ++mask) {
        std::string l(k, '0');
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1U) l[i] = '1';
        }
        raw.labels.push_back(l);
    }
    raw.zero = 0;
    raw.one = n - 1;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            if ((a & b) == 0) raw.sums.push_back({a, b, a | b});
        }
    }
    return raw;
}

inline RawTable product_table(const std::vector<EffectAlgebra> &factors) {
    RawTable raw;
    std::size_t n = 1;
    for (const auto &f : factors) n *= f.size();
    const std::size_t k = factors.size();
    auto coords = [&](std::size_t id) {
        std::vector<Element> c(k);
        for (std::size_t j = k; j-- > 0;) {
            c[j] = id % factors[j].size();
            id /= factors[j].size();
        }
        return c;
    };
    auto encode = [&](const std::vector<Element> &c) {
        std::size_t id = 0;
        for (std::size_t j = 0; j < k; ++j) id = id * factors[j].size() + c[j];
        return id;
    };
    for (std::size_t id = 0; id < n; ++id) {
        auto c = coords(id);
        std::string l = "(";
        for (std::size_t j = 0; j < k; ++j) l += (j ? "," : "") + factors[j].label(c[j]);
        raw.labels.push_back(l + ")");
    }
    std::vector<Element> z(k), o(k);
    for (std::size_t j = 0; j < k; ++j) {
        z[j] = factors[j].zero();
        o[j] = factors[j].one();
    }
    raw.zero = encode(z);
    raw.one = encode(o);
    for (std::size_t a = 0; a < n; ++a) {
        auto ca = coords(a);
        for (std::size_t b = a; b < n; ++b) {
            auto cb = coords(b);
            std::vector<Element> cs(k);
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                Element s = factors[j].sum_or_undefined(ca[j], cb[j]);
                ok = s != kUndefined;
                cs[j] = s;
            }
            if (ok) raw.sums.push_back({a, b, encode(cs)});
        }
    }
    return raw;
}

/// Glues the summands at 0 and 1; sums across different summands are undefined.
inline RawTable horizontal_sum_table(const std::vector<EffectAlgebra> &parts) {
    RawTable raw;
    raw.labels.push_back("0");
    raw.zero = 0;
    std::vector<std::vector<Element>> global(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto &m = parts[p];
        global[p].assign(m.size(), kUndefined);
        global[p][m.zero()] = 0;
        for (Element e = 0; e < m.size(); ++e) {
            if (e == m.zero() || e == m.one()) continue;
            global[p][e] = raw.labels.size();
            raw.labels.push_back(m.label(e) + "_" + std::to_string(p + 1));
        }
    }
    raw.one = raw.labels.size();
    raw.labels.push_back("1");
    for (std::size_t p = 0; p < parts.size(); ++p) {
        global[p][parts[p].one()] = raw.one;
    }
    // 0 + x for every x, then the nontrivial sums inside each summand.
    for (Element x = 0; x < raw.labels.size(); ++x) raw.sums.push_back({0, x, x});
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto &m = parts[p];
        for (const auto &[a, b, c] : m.defined_sums()) {
            if (a == m.zero() || b == m.zero()) continue;
            raw.sums.push_back({global[p][a], global[p][b], global[p][c]});
        }
    }
    return raw;
}

} // namespace detail

/// Builds the algebra of a family. Throws SizeLimitExceeded when the result
/// would have more than `max_size` elements.
inline EffectAlgebra generate(const FamilySpec &spec, std::size_t max_size = configured_max_size()) {
    std::size_t predicted = spec.predicted_size();
    if (predicted > max_size) {
        throw Error(ErrorKind::SizeLimitExceeded, spec.to_string() + " has " + std::to_string(predicted) +
                                                      " elements, bound is " + std::to_string(max_size));
    }
    switch (spec.kind) {
    case FamilySpec::Kind::Chain: return EffectAlgebra::from_table(detail::interval_table({spec.params.at(0)}));
    case FamilySpec::Kind::Interval: return EffectAlgebra::from_table(detail::interval_table(spec.params));
    case FamilySpec::Kind::Boolean: return EffectAlgebra::from_table(detail::boolean_table(spec.params.at(0)));
    case FamilySpec::Kind::Product:
    case FamilySpec::Kind::HorizontalSum: {
        if (spec.parts.empty()) {
            throw Error(ErrorKind::ParseError, "empty operand list in " + spec.to_string());
        }
        std::vector<EffectAlgebra> parts;
        for (const auto &p : spec.parts) parts.push_back(generate(p, max_size));
        return EffectAlgebra::from_table(spec.kind == FamilySpec::Kind::Product ? detail::product_table(parts)
                                                                                : detail::horizontal_sum_table(parts));
    }
    }
    throw Error(ErrorKind::ParseError, "unknown family");
}

/// Named member of the test zoo.
struct ZooEntry {
    std::string id;
    FamilySpec spec;
};

/// The instance set used by the acceptance suite: chains up to 8, Boolean
/// algebras up to 2^4, products up to 64 elements and horizontal sums.
inline std::vector<ZooEntry> standard_zoo() {
    using F = FamilySpec;
    std::vector<ZooEntry> zoo;
    for (std::size_t n = 1; n <= 8; ++n) zoo.push_back({"C" + std::to_string(n), F::chain(n)});
    for (std::size_t k = 2; k <= 4; ++k) zoo.push_back({"B" + std::to_string(k), F::boolean(k)});
    auto add = [&](F spec) { zoo.push_back({spec.to_string(), std::move(spec)}); };
    add(F::interval({1, 2}));
    add(F::product({F::chain(2), F::chain(2)}));
    add(F::product({F::chain(2), F::chain(3)}));
    add(F::product({F::chain(3), F::chain(3)}));
    add(F::product({F::chain(1), F::chain(1), F::chain(3)}));
    add(F::product({F::boolean(2), F::chain(3)}));
    add(F::product({F::chain(3), F::chain(3), F::chain(3)}));
    add(F::product({F::chain(7), F::chain(7)}));
    add(F::product({F::chain(1), F::chain(31)}));
    add(F::product({F::boolean(3), F::chain(7)}));
    zoo.push_back({"MO2", F::horizontal_sum({F::boolean(2), F::boolean(2)})});
    zoo.push_back({"MO3", F::horizontal_sum({F::boolean(2), F::boolean(2), F::boolean(2)})});
    add(F::horizontal_sum({F::chain(2), F::chain(2)}));
    add(F::horizontal_sum({F::chain(3), F::boolean(2)}));
    add(F::horizontal_sum({F::boolean(3), F::chain(2)}));
    return zoo;
}

} // namespace effecta
