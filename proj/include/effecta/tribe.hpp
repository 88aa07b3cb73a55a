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
#include <vector>

#include "effecta/algebra.hpp"
#include "effecta/rational.hpp"

namespace effecta {

/// Function Omega -> [0,1] ∩ Q, stored by carrier index.
using FuzzyFunction = RationalVector;

inline std::string format_function(const FuzzyFunction &f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + to_string(f[i]);
    return s + ")";
}

inline FuzzyFunction constant_function(std::size_t points, const Rational &v) { return FuzzyFunction(points, v); }

/// Pointwise f <= g.
inline bool pointwise_leq(const FuzzyFunction &f, const FuzzyFunction &g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > g[i]) return false;
    }
    return true;
}

/// Finite effect-tribe: a set of fuzzy functions containing 1, closed under
/// 1 - f and under pointwise sums that stay below 1. Limits of monotone
/// sequences are automatic: a monotone sequence in a finite set is
/// eventually constant.
///
/// The tribe is also exposed as an EffectAlgebra whose element i is
/// function i, with pointwise partial addition.
class EffectTribe {
  public:
    /// Validates closure; throws NotATribe naming the offending function(s).
    static EffectTribe make(std::vector<std::string> carrier, std::vector<FuzzyFunction> functions) {
        if (carrier.empty()) throw Error(ErrorKind::NotATribe, "empty carrier");
        const std::size_t points = carrier.size();
        std::map<FuzzyFunction, std::size_t> index;
        for (std::size_t i = 0; i < functions.size(); ++i) {
            const auto &f = functions[i];
            if (f.size() != points) throw Error(ErrorKind::NotATribe, "function arity mismatch", {i});
            if (!std::all_of(f.begin(), f.end(), in_unit_interval)) {
                throw Error(ErrorKind::NotATribe, format_function(f) + " leaves [0,1]", {i});
            }
            if (!index.emplace(f, i).second) {
                throw Error(ErrorKind::NotATribe, "duplicate function " + format_function(f), {i});
            }
        }
        auto lookup = [&](const FuzzyFunction &f) -> std::optional<std::size_t> {
            auto it = index.find(f);
            return it == index.end() ? std::nullopt : std::optional<std::size_t>(it->second);
        };
        auto one_idx = lookup(constant_function(points, 1));
        if (!one_idx) throw Error(ErrorKind::NotATribe, "constant 1 missing");
        auto zero_idx = lookup(constant_function(points, 0));
        if (!zero_idx) throw Error(ErrorKind::NotATribe, "constant 0 missing");

        RawTable raw;
        raw.zero = *zero_idx;
        raw.one = *one_idx;
        for (std::size_t i = 0; i < functions.size(); ++i) {
            raw.labels.push_back(format_function(functions[i]));
            FuzzyFunction comp(points);
            for (std::size_t p = 0; p < points; ++p) comp[p] = 1 - functions[i][p];
            if (!lookup(comp)) {
                throw Error(ErrorKind::NotATribe, "1 - " + format_function(functions[i]) + " missing", {i});
            }
        }
        for (std::size_t i = 0; i < functions.size(); ++i) {
            for (std::size_t j = i; j < functions.size(); ++j) {
                FuzzyFunction s(points);
                bool fits = true;
                for (std::size_t p = 0; p < points && fits; ++p) {
                    s[p] = functions[i][p] + functions[j][p];
                    fits = s[p] <= 1;
                }
                if (!fits) continue;
                auto k = lookup(s);
                if (!k) {
                    throw Error(ErrorKind::NotATribe,
                                format_function(functions[i]) + " + " + format_function(functions[j]) + " missing",
                                {i, j});
                }
                raw.sums.push_back({i, j, *k});
            }
        }
        return EffectTribe(std::move(carrier), std::move(functions), std::move(index),
                           EffectAlgebra::from_table(raw));
    }

    [[nodiscard]] const std::vector<std::string> &carrier() const noexcept { return carrier_; }
    [[nodiscard]] std::size_t points() const noexcept { return carrier_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return functions_.size(); }
    [[nodiscard]] const FuzzyFunction &function(std::size_t i) const { return functions_.at(i); }
    [[nodiscard]] const std::vector<FuzzyFunction> &functions() const noexcept { return functions_; }

    [[nodiscard]] std::optional<std::size_t> find(const FuzzyFunction &f) const {
        auto it = index_.find(f);
        return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
    }
    [[nodiscard]] bool contains(const FuzzyFunction &f) const { return index_.count(f) != 0; }

    /// The tribe as an effect algebra; element i is function i.
    [[nodiscard]] const EffectAlgebra &algebra() const noexcept { return algebra_; }

  private:
    EffectTribe(std::vector<std::string> carrier, std::vector<FuzzyFunction> functions,
                std::map<FuzzyFunction, std::size_t> index, EffectAlgebra algebra)
        : carrier_(std::move(carrier)), functions_(std::move(functions)), index_(std::move(index)),
          algebra_(std::move(algebra)) {}

    std::vector<std::string> carrier_;
    std::vector<FuzzyFunction> functions_;
    std::map<FuzzyFunction, std::size_t> index_;
    EffectAlgebra algebra_;
};

} // namespace effecta
