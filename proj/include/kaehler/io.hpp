#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kaehler/errors.hpp"
#include "kaehler/poly_map.hpp"
#include "kaehler/polynomial.hpp"
#include "kaehler/series.hpp"

namespace kaehler {

/// JSON wire format, shared by --input/--output and the test fixtures:
///   {kind: "series_map", m, N, components: [[{exp: [..], c: "p/q"}, ..], ..]}
///   {kind: "poly_endo",  m, N: 0, components: ...}   (m is the slot count)
/// Coefficients travel as decimal strings so precision is never lost.

inline nlohmann::json poly_to_json(const Polynomial<Rational>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json rec;
        rec["exp"] = e;
        rec["c"] = c.to_string();
        terms.push_back(rec);
    }
    return terms;
}

inline Polynomial<Rational> poly_from_json(const nlohmann::json& j, unsigned num_vars) {
    if (!j.is_array()) throw ValidationError("polynomial record must be an array of terms");
    Polynomial<Rational> p(num_vars);
    for (const auto& rec : j) {
        if (!rec.contains("exp") || !rec.contains("c"))
            throw ValidationError("term record needs 'exp' and 'c'");
        ExponentVector e;
        for (const auto& v : rec["exp"]) {
            if (!v.is_number_unsigned()) throw ValidationError("exponents must be nonnegative integers");
            e.push_back(v.get<unsigned>());
        }
        if (e.size() != num_vars) throw ValidationError("exponent vector length mismatch");
        p.add_term(e, Rational::from_string(rec["c"].get<std::string>()));
    }
    return p;
}

inline nlohmann::json to_json(const TruncatedSeriesMap<Rational>& phi) {
    nlohmann::json j;
    j["kind"] = "series_map";
    j["m"] = phi.m();
    j["N"] = phi.N();
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : phi.components()) comps.push_back(poly_to_json(c));
    j["components"] = comps;
    return j;
}

inline nlohmann::json to_json(const PolyEndo<Rational>& f) {
    nlohmann::json j;
    j["kind"] = "poly_endo";
    j["m"] = f.n;
    j["N"] = 0;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : f.components) comps.push_back(poly_to_json(c));
    j["components"] = comps;
    return j;
}

using MapValue = std::variant<TruncatedSeriesMap<Rational>, PolyEndo<Rational>>;

inline MapValue map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("m") || !j.contains("components"))
        throw ValidationError("map record needs 'kind', 'm', 'N', 'components'");
    std::string kind = j["kind"].get<std::string>();
    if (!j["m"].is_number_unsigned() || j["m"].get<unsigned>() == 0)
        throw ValidationError("'m' must be a positive integer");
    unsigned m = j["m"].get<unsigned>();
    const nlohmann::json& comps = j["components"];
    if (!comps.is_array()) throw ValidationError("'components' must be an array");

    if (kind == "series_map") {
        if (!j.contains("N") || !j["N"].is_number_unsigned() || j["N"].get<unsigned>() == 0)
            throw ValidationError("'N' must be a positive integer");
        unsigned N = j["N"].get<unsigned>();
        if (comps.size() != m) throw ValidationError("series map needs exactly m components");
        std::vector<Polynomial<Rational>> parts;
        for (const auto& c : comps) parts.push_back(poly_from_json(c, m));
        return TruncatedSeriesMap<Rational>(m, N, std::move(parts));
    }
    if (kind == "poly_endo") {
        if (comps.size() != m) throw ValidationError("endomorphism needs exactly m components");
        std::vector<Polynomial<Rational>> parts;
        for (const auto& c : comps) parts.push_back(poly_from_json(c, m));
        return PolyEndo<Rational>(m, std::move(parts));
    }
    throw ValidationError("unknown kind '" + kind + "'");
}

}  // namespace kaehler
