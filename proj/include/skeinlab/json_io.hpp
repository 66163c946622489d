#pragma once

// JSON encodings used by the CLI. Wire formats:
//   LaurentPoly  {"v_exponents": [[k, "coeff"], ...]}        ascending k
//   PolyX        {"x_coeffs": [[deg, LaurentPoly], ...]}     ascending deg
//   SkeinElement {"terms": [{"symbol": ..., "coeff": ...}]}  family, then index
//   AuditReport  {"a", "c", "terms", "d"}
// Coefficients travel as decimal strings so arbitrary precision survives.

#include <string>
#include <vector>

#include <json.hpp>

#include "skeinlab/audit.hpp"
#include "skeinlab/twist_models.hpp"

namespace skeinlab {

using Json = nlohmann::json;

inline Json to_json(const LaurentPoly& p) {
    Json exponents = Json::array();
    for (const auto& [exp, coeff] : p.terms()) {
        exponents.push_back(Json::array({exp, coeff.to_string()}));
    }
    return Json{{"v_exponents", std::move(exponents)}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("v_exponents") || !j["v_exponents"].is_array()) {
        throw std::invalid_argument("LaurentPoly JSON: expected {\"v_exponents\": [[k, c], ...]}");
    }
    LaurentPoly out;
    for (const auto& entry : j["v_exponents"]) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::invalid_argument("LaurentPoly JSON: bad [k, c] entry");
        }
        int exp = entry[0].get<int>();
        BigInt coeff = entry[1].is_string() ? BigInt::from_string(entry[1].get<std::string>())
                                            : BigInt(entry[1].get<long long>());
        out += LaurentPoly::monomial(exp, coeff);
    }
    return out;
}

inline Json to_json(const PolyX& p) {
    Json coeffs = Json::array();
    for (const auto& [deg, c] : p.coeffs()) {
        coeffs.push_back(Json::array({deg, to_json(c)}));
    }
    return Json{{"x_coeffs", std::move(coeffs)}};
}

inline Json to_json(const Symbol& s) {
    switch (s.family) {
        case Symbol::Family::Beta: return Json{{"symbol", "BETA"}, {"k", s.k}};
        case Symbol::Family::D: return Json{{"symbol", "D"}, {"k", s.k}};
        case Symbol::Family::Z: return Json{{"symbol", "Z"}, {"k", s.k}};
        case Symbol::Family::C: return Json{{"symbol", "C"}, {"k", s.k}};
        case Symbol::Family::B: return Json{{"symbol", "B"}, {"m", s.m}, {"eps", s.eps}};
    }
    throw std::logic_error("Symbol JSON: unreachable");
}

inline Json to_json(const SkeinElement& e) {
    Json terms = Json::array();
    for (const auto& [sym, coeff] : e.support()) {
        Json t = to_json(sym);
        t["coeff"] = to_json(coeff);
        terms.push_back(std::move(t));
    }
    return Json{{"terms", std::move(terms)}};
}

inline Json to_json(const AuditReport& report) {
    Json c = Json::array();
    for (const auto& entry : report.c) c.push_back(to_json(entry));
    Json terms = Json::array();
    if (!report.rn_coefficient.is_zero()) {
        terms.push_back(Json{{"symbol", "RN"}, {"coeff", to_json(report.rn_coefficient)}});
    }
    for (const auto& [sym, coeff] : report.term_coefficients) {
        Json t = to_json(sym);
        t["coeff"] = to_json(coeff);
        terms.push_back(std::move(t));
    }
    return Json{{"a", to_json(report.a)},
                {"c", std::move(c)},
                {"terms", std::move(terms)},
                {"d", to_json(report.d)}};
}

inline Json to_json(const BasisMatrix& matrix) {
    Json rows = Json::array();
    for (const auto& row : matrix) {
        Json cells = Json::array();
        for (const auto& cell : row) cells.push_back(to_json(cell));
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace skeinlab
