#pragma once

// Canonical JSON forms. Keys are emitted in sorted order and every number
// is carried as a decimal string, so serialization is byte-identical
// across platforms and round-trips exactly.

#include "motivec/candim.hpp"
#include "motivec/motive.hpp"
#include "motivec/tower.hpp"

#include <json.hpp>

#include <string>

namespace motivec {

using Json = nlohmann::json;

inline std::string canonical_dump(const Json& j) { return j.dump(); }

namespace jsonio {

inline std::string num(long long v) { return std::to_string(v); }
inline std::string num(const Natural& v) { return v.str(); }

inline long long get_ll(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw std::domain_error(std::string("json: missing field '") + key +
                                "'");
    return detail::parse_ll(j.at(key).get_ref<const std::string&>(), key);
}

inline bool get_bool(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_boolean())
        throw std::domain_error(std::string("json: missing flag '") + key +
                                "'");
    return j.at(key).get<bool>();
}

} // namespace jsonio

inline Json to_json(const AlgebraClass& alg) {
    return {{"degree", jsonio::num(alg.degree())},
            {"index", jsonio::num(alg.index())},
            {"p", jsonio::num(alg.prime().value())}};
}

inline AlgebraClass algebra_from_json(const Json& j) {
    return {jsonio::get_ll(j, "degree"), jsonio::get_ll(j, "index"),
            Prime(jsonio::get_ll(j, "p"))};
}

inline Json to_json(const MotiveExpr& expr) {
    Json terms = Json::array();
    for (const auto& t : expr.terms())
        terms.push_back(
            {{"label", t.label.str()}, {"shift", jsonio::num(t.shift)}});
    return {{"context", to_json(expr.context())}, {"terms", terms}};
}

// Accepts term objects carrying extra annotation keys alongside
// label/shift, so annotated CLI payloads parse back.
inline MotiveExpr motive_from_json(const Json& j) {
    if (!j.contains("context") || !j.contains("terms") ||
        !j.at("terms").is_array())
        throw std::domain_error("json: motive needs context and terms");
    AlgebraClass context = algebra_from_json(j.at("context"));
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("label") || !t.at("label").is_string())
            throw std::domain_error("json: term needs a label");
        terms.push_back({jsonio::get_ll(t, "shift"),
                         Label::parse(t.at("label").get_ref<const std::string&>())});
    }
    return {std::move(context), std::move(terms)};
}

inline Json to_json(const CanDimReport& report) {
    return {{"cdim_p", jsonio::num(report.cdim_p)},
            {"dim", jsonio::num(report.dim)},
            {"incompressible", report.incompressible},
            {"m", jsonio::num(report.m)},
            {"n", jsonio::num(report.n)},
            {"p", jsonio::num(report.p)},
            {"variety", report.variety}};
}

inline CanDimReport candim_from_json(const Json& j) {
    CanDimReport report;
    if (!j.contains("variety") || !j.at("variety").is_string())
        throw std::domain_error("json: report needs a variety");
    report.variety = j.at("variety").get<std::string>();
    report.p = jsonio::get_ll(j, "p");
    report.n = static_cast<int>(jsonio::get_ll(j, "n"));
    report.m = static_cast<int>(jsonio::get_ll(j, "m"));
    report.cdim_p = jsonio::get_ll(j, "cdim_p");
    report.dim = jsonio::get_ll(j, "dim");
    report.incompressible = jsonio::get_bool(j, "incompressible");
    return report;
}

inline Json to_json(const Basic2Record& rec) {
    Json j{{"m", jsonio::num(rec.m)},
           {"base_case", rec.base_case},
           {"composition_count", jsonio::num(rec.composition_count)},
           {"sources",
            Json{{"count", jsonio::num(rec.source_count)},
                 {"ok", rec.sources_ok}}},
           {"rank_valuation",
            Json{{"computed_vp", jsonio::num(rec.kummer_vp)},
                 {"expected_vp", jsonio::num(rec.concluded_vp)},
                 {"ok", rec.kummer_ok}}},
           {"concluded_vp", jsonio::num(rec.concluded_vp)},
           {"pass", rec.pass}};
    if (!rec.base_case) {
        Json orbits = Json::array();
        for (const auto& o : rec.orbits)
            orbits.push_back({{"representative", o.representative.str()},
                              {"size", jsonio::num(o.size)}});
        j["orbit_divisibility"] =
            Json{{"excluded_diagonal", rec.diagonal.str()},
                 {"subset_size", jsonio::num(rec.valuation_subset_size)},
                 {"orbits", orbits},
                 {"all_size_p", rec.orbits_all_size_p},
                 {"divisible_by_p", rec.subset_divisible_by_p}};
        j["diagonal_valuation"] =
            Json{{"rank_vp", jsonio::num(rec.diagonal_rank_vp)},
                 {"bound", jsonio::num(rec.rank_vp_bound)},
                 {"ok", rec.diagonal_ok}};
    }
    return j;
}

inline Json to_json(const ProofTrace& trace) {
    Json records = Json::array();
    for (const auto& r : trace.records) records.push_back(to_json(r));
    return {{"n", jsonio::num(trace.n)},
            {"p", jsonio::num(trace.p)},
            {"pass", trace.pass},
            {"records", records}};
}

namespace jsonio {

inline Composition composition_from_str(const std::string& s) {
    Composition c;
    std::string_view body = s;
    while (!body.empty()) {
        const auto comma = body.find(',');
        c.parts.push_back(
            detail::parse_ll(body.substr(0, comma), "composition"));
        body = comma == std::string_view::npos ? std::string_view{}
                                               : body.substr(comma + 1);
    }
    return c;
}

} // namespace jsonio

inline ProofTrace proof_trace_from_json(const Json& j) {
    ProofTrace trace;
    trace.p = jsonio::get_ll(j, "p");
    trace.n = static_cast<int>(jsonio::get_ll(j, "n"));
    trace.pass = jsonio::get_bool(j, "pass");
    if (!j.contains("records") || !j.at("records").is_array())
        throw std::domain_error("json: trace needs records");
    for (const auto& rj : j.at("records")) {
        Basic2Record rec;
        rec.m = static_cast<int>(jsonio::get_ll(rj, "m"));
        rec.base_case = jsonio::get_bool(rj, "base_case");
        rec.composition_count =
            Natural(rj.at("composition_count").get<std::string>());
        const auto& sources = rj.at("sources");
        rec.source_count = jsonio::get_ll(sources, "count");
        rec.sources_ok = jsonio::get_bool(sources, "ok");
        const auto& rank = rj.at("rank_valuation");
        rec.kummer_vp = static_cast<int>(jsonio::get_ll(rank, "computed_vp"));
        rec.kummer_ok = jsonio::get_bool(rank, "ok");
        rec.concluded_vp = static_cast<int>(jsonio::get_ll(rj, "concluded_vp"));
        rec.pass = jsonio::get_bool(rj, "pass");
        if (!rec.base_case) {
            const auto& od = rj.at("orbit_divisibility");
            rec.diagonal = jsonio::composition_from_str(
                od.at("excluded_diagonal").get<std::string>());
            rec.valuation_subset_size = jsonio::get_ll(od, "subset_size");
            for (const auto& oj : od.at("orbits"))
                rec.orbits.push_back(
                    {jsonio::composition_from_str(
                         oj.at("representative").get<std::string>()),
                     jsonio::get_ll(oj, "size")});
            rec.orbits_all_size_p = jsonio::get_bool(od, "all_size_p");
            rec.subset_divisible_by_p = jsonio::get_bool(od, "divisible_by_p");
            const auto& dv = rj.at("diagonal_valuation");
            rec.diagonal_rank_vp = static_cast<int>(jsonio::get_ll(dv, "rank_vp"));
            rec.rank_vp_bound = static_cast<int>(jsonio::get_ll(dv, "bound"));
            rec.diagonal_ok = jsonio::get_bool(dv, "ok");
        }
        trace.records.push_back(std::move(rec));
    }
    return trace;
}

} // namespace motivec
