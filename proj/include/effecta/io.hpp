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

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "effecta/algebra.hpp"
#include "effecta/observables.hpp"
#include "effecta/representation.hpp"
#include "effecta/spectral.hpp"
#include "effecta/states.hpp"

namespace effecta {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string &what) { throw Error(ErrorKind::ParseError, what); }

inline const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::string as_string(const Json &j, const char *what) {
    if (!j.is_string()) parse_fail(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline Rational as_rational(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return parse_rational(as_string(j, "rational"));
}

inline std::size_t index_of(const std::vector<std::string> &labels, const std::string &label, const char *what) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) return i;
    }
    parse_fail(std::string("unknown ") + what + " \"" + label + "\"");
}

inline Element element_of(const EffectAlgebra &m, const Json &j) {
    auto label = as_string(j, "element");
    auto e = m.find(label);
    if (!e) parse_fail("unknown element \"" + label + "\"");
    return *e;
}

} // namespace detail

inline Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

// Algebras: {"elements": [...], "zero": l, "one": l, "sum": [[a, b, c], ...]}.

inline RawTable raw_table_from_json(const Json &j) {
    RawTable raw;
    const auto &elements = detail::field(j, "elements");
    if (!elements.is_array()) detail::parse_fail("\"elements\" must be an array");
    for (const auto &e : elements) raw.labels.push_back(detail::as_string(e, "element label"));
    raw.zero = detail::index_of(raw.labels, detail::as_string(detail::field(j, "zero"), "zero"), "element");
    raw.one = detail::index_of(raw.labels, detail::as_string(detail::field(j, "one"), "one"), "element");
    const auto &sums = detail::field(j, "sum");
    if (!sums.is_array()) detail::parse_fail("\"sum\" must be an array");
    for (const auto &t : sums) {
        if (!t.is_array() || t.size() != 3) detail::parse_fail("sum entries must be [a, b, c]");
        std::array<Element, 3> triple{};
        for (std::size_t k = 0; k < 3; ++k) {
            triple[k] = detail::index_of(raw.labels, detail::as_string(t[k], "sum operand"), "element");
        }
        raw.sums.push_back(triple);
    }
    return raw;
}

inline EffectAlgebra algebra_from_json(const Json &j) { return EffectAlgebra::from_table(raw_table_from_json(j)); }

inline Json to_json(const EffectAlgebra &m) {
    Json j;
    j["elements"] = m.labels();
    j["zero"] = m.label(m.zero());
    j["one"] = m.label(m.one());
    Json sums = Json::array();
    for (const auto &[a, b, c] : m.defined_sums()) sums.push_back({m.label(a), m.label(b), m.label(c)});
    j["sum"] = std::move(sums);
    return j;
}

/// Algebra document with one sum triple per line.
inline std::string dump_algebra(const EffectAlgebra &m) {
    Json j = to_json(m);
    std::string out = "{\n  \"elements\": " + j["elements"].dump() + ",\n  \"zero\": " + j["zero"].dump() +
                      ",\n  \"one\": " + j["one"].dump() + ",\n  \"sum\": [";
    const auto &sums = j["sum"];
    for (std::size_t i = 0; i < sums.size(); ++i) out += (i ? ",\n    " : "\n    ") + sums[i].dump();
    return out + "\n  ]\n}\n";
}

// States: {"values": {label: "p/q"}}.

inline Json to_json(const EffectAlgebra &m, const State &s) {
    Json values = Json::object();
    for (Element a = 0; a < m.size(); ++a) values[m.label(a)] = to_string(s(a));
    return Json{{"values", std::move(values)}};
}

/// Missing labels are left out of the vector's meaning by is_state's
/// coverage check: the result has size m.size() only if every label appears.
inline RationalVector state_values_from_json(const EffectAlgebra &m, const Json &j) {
    const auto &values = detail::field(j, "values");
    if (!values.is_object()) detail::parse_fail("\"values\" must be an object");
    RationalVector out(m.size());
    std::vector<bool> seen(m.size(), false);
    for (const auto &[label, v] : values.items()) {
        auto e = m.find(label);
        if (!e) detail::parse_fail("unknown element \"" + label + "\"");
        out[*e] = detail::as_rational(v);
        seen[*e] = true;
    }
    for (Element a = 0; a < m.size(); ++a) {
        if (!seen[a]) return RationalVector(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(a));
    }
    return out;
}

inline Json rational_array(const RationalVector &v) {
    Json out = Json::array();
    for (const auto &x : v) out.push_back(to_string(x));
    return out;
}

inline Json to_json(const EffectAlgebra &m, const StatePolytope &poly) {
    Json constraints = Json::array();
    for (const auto &c : poly.constraints) {
        Json terms = Json::object();
        for (Element a = 0; a < m.size(); ++a) {
            if (sgn(c.coeffs[a]) != 0) terms[m.label(a)] = to_string(c.coeffs[a]);
        }
        const char *rel = c.relation == Relation::Eq ? "=" : c.relation == Relation::Le ? "<=" : ">=";
        constraints.push_back({{"terms", std::move(terms)}, {"relation", rel}, {"rhs", to_string(c.rhs)}});
    }
    Json vertices = Json::array();
    for (const auto &v : poly.vertices) vertices.push_back(to_json(m, v)["values"]);
    return Json{{"constraints", std::move(constraints)}, {"vertices", std::move(vertices)}, {"dimension", poly.dimension}};
}

// Observables: {"support": ["p/q"], "values": [labels]}.

inline Observable observable_from_json(const EffectAlgebra &m, const Json &j) {
    const auto &support = detail::field(j, "support");
    const auto &values = detail::field(j, "values");
    if (!support.is_array() || !values.is_array()) detail::parse_fail("\"support\" and \"values\" must be arrays");
    RationalVector ts;
    for (const auto &t : support) ts.push_back(detail::as_rational(t));
    std::vector<Element> vs;
    for (const auto &v : values) vs.push_back(detail::element_of(m, v));
    return make_observable(m, std::move(ts), std::move(vs));
}

inline Json to_json(const EffectAlgebra &m, const Observable &x) {
    Json values = Json::array();
    for (auto v : x.values()) values.push_back(m.label(v));
    return Json{{"support", rational_array(x.support())}, {"values", std::move(values)}};
}

// Representations: carrier labels, function table, h as a map from function
// index to target label, Omega0 and the ideal by carrier labels, target algebra.

inline Json point_set_json(const Representation &rep, const PointSet &a) {
    Json out = Json::array();
    for (auto p : a) out.push_back(rep.tribe().carrier()[p]);
    return out;
}

inline Json to_json(const Representation &rep) {
    Json functions = Json::array();
    Json h = Json::object();
    for (std::size_t i = 0; i < rep.tribe().size(); ++i) {
        functions.push_back(rational_array(rep.tribe().function(i)));
        h[std::to_string(i)] = rep.target().label(rep.h(i));
    }
    Json ideal = Json::array();
    for (const auto &a : rep.ideal()) ideal.push_back(point_set_json(rep, a));
    return Json{{"carrier", rep.tribe().carrier()}, {"functions", std::move(functions)}, {"h", std::move(h)},
                {"omega0", point_set_json(rep, rep.omega0())}, {"ideal", std::move(ideal)},
                {"target", to_json(rep.target())}};
}

inline Representation representation_from_json(const Json &j) {
    std::vector<std::string> carrier;
    for (const auto &c : detail::field(j, "carrier")) carrier.push_back(detail::as_string(c, "carrier label"));
    std::vector<FuzzyFunction> functions;
    for (const auto &f : detail::field(j, "functions")) {
        if (!f.is_array()) detail::parse_fail("functions must be arrays of rationals");
        FuzzyFunction g;
        for (const auto &x : f) g.push_back(detail::as_rational(x));
        functions.push_back(std::move(g));
    }
    EffectAlgebra target = algebra_from_json(detail::field(j, "target"));
    const auto &hj = detail::field(j, "h");
    if (!hj.is_object()) detail::parse_fail("\"h\" must be an object");
    std::vector<Element> h(functions.size(), kUndefined);
    for (const auto &[key, label] : hj.items()) {
        std::size_t i = 0;
        try {
            i = std::stoul(key);
        } catch (const std::exception &) {
            detail::parse_fail("h keys must be function indices");
        }
        if (i >= h.size()) detail::parse_fail("h key out of range: " + key);
        h[i] = detail::element_of(target, label);
    }
    for (auto v : h) {
        if (v == kUndefined) detail::parse_fail("h must map every function");
    }
    auto points = [&](const Json &arr) {
        PointSet out;
        if (!arr.is_array()) detail::parse_fail("point sets must be arrays");
        for (const auto &p : arr) out.push_back(detail::index_of(carrier, detail::as_string(p, "point"), "point"));
        std::sort(out.begin(), out.end());
        return out;
    };
    PointSet omega0 = points(detail::field(j, "omega0"));
    std::vector<PointSet> ideal;
    for (const auto &a : detail::field(j, "ideal")) ideal.push_back(points(a));
    return Representation::make(EffectTribe::make(std::move(carrier), std::move(functions)), std::move(target),
                                std::move(h), std::move(omega0), std::move(ideal));
}

// Spectral measures: {"element": l, "support": ["p/q"], "masses": {"p/q": l}}.

inline Json to_json(const EffectAlgebra &m, const SpectralMeasure &mu) {
    Json masses = Json::object();
    for (std::size_t i = 0; i < mu.support.size(); ++i) masses[to_string(mu.support[i])] = m.label(mu.masses[i]);
    return Json{{"element", m.label(mu.element)}, {"support", rational_array(mu.support)}, {"masses", std::move(masses)}};
}

inline Json to_json(const EffectAlgebra &m, const UniquenessReport &r) {
    Json bounds = Json::object();
    for (Element a = 0; a < m.size(); ++a) {
        bounds[m.label(a)] = {{"min", to_string(r.bounds[a].min)}, {"max", to_string(r.bounds[a].max)}};
    }
    return Json{{"unique", r.unique}, {"bounds", std::move(bounds)}};
}

} // namespace effecta
