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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "effecta/error.hpp"

namespace effecta {

/// Exact rational number. All state, tribe and spectral values use it.
using Rational = mpq_class;

/// Parses "p/q" or "p". The result is canonicalized (reduced, positive denominator).
inline Rational parse_rational(std::string_view text) {
    Rational r;
    std::string s(text);
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

/// Always "p/q" with q >= 1, e.g. "0/1", "2/3".
inline std::string to_string(const Rational &r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool in_unit_interval(const Rational &r) { return r >= 0 && r <= 1; }

using RationalVector = std::vector<Rational>;

} // namespace effecta
