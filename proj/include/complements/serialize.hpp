#pragma once

// JSON wire formats. Rationals travel as exact "p/q" strings (decimal
// strings are accepted on input and converted exactly); multiplicity
// vectors as arrays of {label, value} objects.

#include <json.hpp>

#include "complements/adjunction.hpp"
#include "complements/dim1.hpp"
#include "complements/errors.hpp"
#include "complements/hyperstandard.hpp"
#include "complements/index_solver.hpp"
#include "complements/multiplicity.hpp"
#include "complements/rat.hpp"

namespace complements {

using Json = nlohmann::json;

inline Json rat_to_json(const Rat& r) { return r.str(); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw usage_error("expected a rational string, got " + j.dump());
    auto r = parse_rat(j.get<std::string>());
    if (!r) throw usage_error("bad rational '" + j.get<std::string>() + "'");
    return *r;
}

inline Json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw usage_error("expected an integer, got " + j.dump());
}

inline Json to_json(const MultiplicityVector& v) {
    Json arr = Json::array();
    for (const auto& [label, value] : v.entries())
        arr.push_back({{"label", label}, {"value", rat_to_json(value)}});
    return arr;
}

inline MultiplicityVector multiplicity_from_json(const Json& j) {
    if (!j.is_array()) throw usage_error("multiplicity vector must be an array");
    MultiplicityVector out;
    for (const auto& e : j) {
        if (!e.contains("label") || !e.contains("value"))
            throw usage_error("multiplicity entry needs label and value");
        std::string label = e.at("label").get<std::string>();
        if (out.has(label)) throw usage_error("duplicate label '" + label + "'");
        out.set(label, rat_from_json(e.at("value")));
    }
    return out;
}

inline Json to_json(const HyperstandardSpec& s) {
    Json r = Json::array(), n = Json::array();
    for (const Rat& x : s.R) r.push_back(rat_to_json(x));
    for (const Int& x : s.N) n.push_back(int_to_json(x));
    return {{"R", r}, {"N", n}, {"abridged", s.abridged}};
}

inline HyperstandardSpec hyperstandard_from_json(const Json& j) {
    std::vector<Rat> r;
    std::vector<Int> n;
    if (j.contains("R"))
        for (const auto& x : j.at("R")) r.push_back(rat_from_json(x));
    if (j.contains("N"))
        for (const auto& x : j.at("N")) n.push_back(int_from_json(x));
    return HyperstandardSpec(r, n, j.value("abridged", false));
}

inline Json to_json(const AdjunctionConstants& c) {
    return {{"r", rat_to_json(c.r)}, {"l", int_to_json(c.l)}};
}

inline AdjunctionConstants adjunction_from_json(const Json& j) {
    return AdjunctionConstants(rat_from_json(j.at("r")), int_from_json(j.at("l")));
}

inline Json to_json(const CurvePair& p) {
    Json out{{"kind", to_string(p.kind)}, {"B", to_json(p.B)}};
    if (p.poly) {
        Json coeffs = Json::array();
        for (const Rat& c : *p.poly) coeffs.push_back(rat_to_json(c));
        out["poly"] = coeffs;
    }
    return out;
}

inline CurvePair curve_pair_from_json(const Json& j) {
    CurvePair p;
    std::string kind = j.value("kind", "rational");
    if (kind == "rational")
        p.kind = CurveKind::rational;
    else if (kind == "genus1")
        p.kind = CurveKind::genus1;
    else if (kind == "local_germ")
        p.kind = CurveKind::local_germ;
    else
        throw usage_error("unknown curve kind '" + kind + "'");
    if (j.contains("B")) p.B = multiplicity_from_json(j.at("B"));
    if (j.contains("poly")) {
        Poly f;
        for (const auto& c : j.at("poly")) f.push_back(rat_from_json(c));
        poly::normalize(f);
        p.poly = f;
    }
    p.validate();
    return p;
}

inline Json to_json(const ComplementResult& r) {
    Json out{{"exists", r.exists}, {"n", int_to_json(r.n)}, {"Bplus", to_json(r.bplus)},
             {"total", rat_to_json(r.total())}};
    if (r.type_tag) out["type"] = *r.type_tag;
    if (!r.label_degrees.empty()) {
        Json d = Json::object();
        for (const auto& [label, deg] : r.label_degrees) d[label] = deg;
        out["label_degrees"] = d;
    }
    return out;
}

inline Json to_json(const ClassifyResult& r) {
    Json levels = Json::array();
    for (const auto& lvl : r.approximations) {
        Json idx = Json::array();
        for (const Int& n : lvl.indices) idx.push_back(int_to_json(n));
        levels.push_back({{"indices", idx}, {"approximation", to_json(lvl.approximation)}});
    }
    Json idx = Json::array();
    for (const Int& n : r.complement_indices) idx.push_back(int_to_json(n));
    Json out{{"type", r.type_tag},
             {"type_detail", r.type_detail},
             {"approximations", levels},
             {"complement_indices", idx}};
    if (r.self_complement_index) out["self_complement_index"] = int_to_json(*r.self_complement_index);
    return out;
}

inline Json to_json(const Interval& iv) {
    return Json::array({rat_to_json(iv.lo), rat_to_json(iv.hi)});
}

inline Interval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw usage_error("interval must be [lo, hi]");
    return Interval(rat_from_json(j[0]), rat_from_json(j[1]));
}

inline Json to_json(const SymbolicVector& v) {
    Json rational = Json::array();
    for (const Rat& c : v.rational_part) rational.push_back(rat_to_json(c));
    Json terms = Json::array();
    for (const auto& t : v.terms) {
        Json coeffs = Json::array();
        for (const Rat& c : t.coeffs) coeffs.push_back(rat_to_json(c));
        terms.push_back(
            {{"symbol", t.symbol}, {"coeffs", coeffs}, {"enclosure", to_json(t.enclosure)}});
    }
    return {{"rational", rational}, {"terms", terms}};
}

inline SymbolicVector symbolic_from_json(const Json& j) {
    SymbolicVector v;
    for (const auto& c : j.at("rational")) v.rational_part.push_back(rat_from_json(c));
    if (j.contains("terms"))
        for (const auto& t : j.at("terms")) {
            SymbolicVector::Term term;
            term.symbol = t.at("symbol").get<std::string>();
            term.enclosure = interval_from_json(t.at("enclosure"));
            for (const auto& c : t.at("coeffs")) term.coeffs.push_back(rat_from_json(c));
            v.terms.push_back(std::move(term));
        }
    v.validate();
    return v;
}

inline Json to_json(const IndexProblem& p) {
    Json out{{"I", int_to_json(p.I)}, {"eps", rat_to_json(p.eps)}, {"v", to_json(p.v)}};
    if (p.direction) {
        Json e = Json::array();
        for (const Rat& c : *p.direction) e.push_back(rat_to_json(c));
        out["e"] = e;
    }
    return out;
}

inline IndexProblem index_problem_from_json(const Json& j) {
    IndexProblem p;
    p.I = int_from_json(j.at("I"));
    p.eps = rat_from_json(j.at("eps"));
    p.v = symbolic_from_json(j.at("v"));
    if (j.contains("e")) {
        RatVec e;
        for (const auto& c : j.at("e")) e.push_back(rat_from_json(c));
        p.direction = e;
    }
    p.validate();
    return p;
}

inline Json to_json(const IndexSolution& s) {
    Json vn = Json::array();
    for (const Rat& c : s.v_n) vn.push_back(rat_to_json(c));
    Json certs = Json::array();
    for (const auto& c : s.certificates)
        certs.push_back({{"condition", c.condition},
                         {"statement", c.statement},
                         {"value", to_json(c.value)},
                         {"bound", rat_to_json(c.bound)}});
    return {{"n", int_to_json(s.n)}, {"v_n", vn}, {"certificates", certs}};
}

inline Json to_json(const RationalSpan& s) {
    Json base = Json::array(), dirs = Json::array();
    for (const Rat& c : s.basepoint) base.push_back(rat_to_json(c));
    for (const auto& row : s.directions) {
        Json r = Json::array();
        for (const Rat& c : row) r.push_back(rat_to_json(c));
        dirs.push_back(r);
    }
    return {{"basepoint", base}, {"directions", dirs}, {"dimension", s.directions.size()}};
}

}  // namespace complements
