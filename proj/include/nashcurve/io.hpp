#pragma once

#include <json.hpp>

#include <string>

#include "nashcurve/bipoly.hpp"
#include "nashcurve/hpoly.hpp"
#include "nashcurve/nash.hpp"
#include "nashcurve/semigroup.hpp"
#include "nashcurve/staircase.hpp"
#include "nashcurve/sweep.hpp"

namespace nashcurve {

using Json = nlohmann::json;

inline Json to_json(const NumericalSemigroup& s) {
    return Json{{"generators", s.minimal_generators()}, {"conductor", s.conductor()}};
}

inline NumericalSemigroup semigroup_from_json(const Json& j) {
    NumericalSemigroup s(j.at("generators").get<std::vector<long long>>());
    if (j.contains("conductor") && j.at("conductor").get<long long>() != s.conductor())
        throw DomainError("semigroup JSON carries a wrong conductor");
    return s;
}

inline Json to_json(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back(Json{{"x", key.first}, {"y", key.second}, {"coefficient", rational_to_string(c)}});
    return terms;
}

inline BiPoly bipoly_from_json(const Json& j) {
    BiPoly p;
    for (const auto& t : j)
        p.add_term(t.at("x").get<long long>(), t.at("y").get<long long>(),
                   parse_rational(t.at("coefficient").get<std::string>()));
    return p;
}

inline Json to_json(const HPolynomial& h) {
    return Json{{"m", h.m},
                {"degree", h.degree},
                {"support", h.support},
                {"terms", to_json(h.poly)},
                {"rendered", render(h.poly)}};
}

inline Json to_json(const ProvenanceRecord& r) {
    return Json{{"s", r.s},
                {"i", r.i},
                {"exponent", r.exponent},
                {"coefficient", rational_to_string(r.coefficient)}};
}

inline Json to_json(const NashResult& r) {
    Json prov = Json::array();
    for (const auto& p : r.provenance) prov.push_back(to_json(p));
    return Json{{"input", to_json(r.input)},
                {"kind", kind_name(r.kind)},
                {"n", r.level},
                {"output", to_json(r.output)},
                {"provenance", prov}};
}

inline NashKind kind_from_name(const std::string& name) {
    for (NashKind k : {NashKind::simple, NashKind::flag, NashKind::iterated_classical,
                       NashKind::iterated_point})
        if (kind_name(k) == name) return k;
    throw DomainError("unknown nash kind: " + name);
}

inline NashResult nash_result_from_json(const Json& j) {
    NashResult r(semigroup_from_json(j.at("input")), j.at("n").get<int>(),
                 kind_from_name(j.at("kind").get<std::string>()),
                 semigroup_from_json(j.at("output")));
    for (const auto& p : j.at("provenance"))
        r.provenance.push_back({p.at("s").get<long long>(), p.at("i").get<int>(),
                                p.at("exponent").get<long long>(),
                                parse_rational(p.at("coefficient").get<std::string>())});
    return r;
}

inline Json to_json(const Staircase& st) {
    Json ambient = Json::array();
    for (const auto& s : st.ambient()) ambient.push_back(to_json(s));
    Json minimal = Json::array();
    for (const auto& g : st.minimal_elements()) minimal.push_back(g);
    Json j{{"ambient", ambient}, {"minimal", minimal}};
    j["colength"] = st.is_cofinite() ? Json(st.colength()) : Json(nullptr);
    return j;
}

inline Staircase staircase_from_json(const Json& j) {
    std::vector<NumericalSemigroup> ambient;
    for (const auto& a : j.at("ambient")) ambient.push_back(semigroup_from_json(a));
    std::vector<std::vector<long long>> minimal;
    for (const auto& g : j.at("minimal")) minimal.push_back(g.get<std::vector<long long>>());
    Staircase st = Staircase::from_generators(std::move(ambient), std::move(minimal));
    if (!j.at("colength").is_null() && st.colength() != j.at("colength").get<long long>())
        throw DomainError("staircase JSON carries a wrong colength");
    return st;
}

inline Json to_json(const ConjectureRow& row) {
    return Json{{"n", row.n},
                {"mode", row.mode == BlowupMode::simple ? "simple" : "flag"},
                {"computed", to_json(row.computed)},
                {"conjectured", to_json(row.conjectured)},
                {"agree", row.agree}};
}

inline Json to_json(const SweepRecord& rec) {
    return Json{{"semigroup", to_json(rec.semigroup)}, {"n", rec.n},       {"check", rec.check},
                {"expected", rec.expected},            {"actual", rec.actual}, {"agree", rec.agree}};
}

} // namespace nashcurve
