#pragma once

// The JSON report emitted by the CLI, schema "pedcurve/1". Polynomial
// fields carry canonical text that re-parses to equal values.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pedcurve/conic.hpp"
#include "pedcurve/factor.hpp"
#include "pedcurve/parser.hpp"
#include "pedcurve/singular.hpp"

namespace pedcurve {

struct LimaconMatchText {
    std::string a, e, r1, r2;
};

struct Report {
    std::vector<std::string> command;
    std::optional<std::string> conic_poly;
    std::optional<std::string> conic_kind;
    std::optional<std::string> pole_x, pole_y;
    bool pole_symbolic = false;
    std::optional<std::string> param_x_num, param_x_den, param_y_num, param_y_den;
    std::optional<std::string> missing_point;
    std::optional<std::string> implicit;
    std::optional<std::string> raw;
    std::vector<std::string> removed;
    std::optional<Rat> factor_unit;
    std::vector<std::pair<std::string, int>> factors;
    std::vector<SingularityReport> singularities;
    std::vector<LimaconMatchText> limacon_matches;
    bool has_limacon_matches = false;
    std::optional<std::string> svg_path;
    double timing_ms = 0;
};

inline nlohmann::json singularity_to_json(const SingularityReport& s,
                                          const VarRegistry& reg) {
    nlohmann::json j;
    j["point"] = {s.point.x.to_string(), s.point.y.to_string()};
    j["multiplicity"] = s.multiplicity;
    j["tangent_cone"] = poly_to_string(s.tangent_cone, reg);
    j["kind"] = singular_kind_name(s.kind);
    j["cone_discriminant"] = s.cone_discriminant.to_string();
    j["isolated_real_point"] = s.isolated_real_point;
    if (s.t0) j["t0"] = s.t0->to_string();
    if (!s.derivative_vectors.empty()) {
        nlohmann::json dv = nlohmann::json::array();
        for (const auto& [vx, vy] : s.derivative_vectors)
            dv.push_back({vx.to_string(), vy.to_string()});
        j["derivative_vectors"] = dv;
    }
    if (!s.pairs.empty()) {
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : s.pairs) {
            nlohmann::json pj;
            pj["minpoly"] = poly_to_string(p.minpoly, reg);
            if (p.point) pj["point"] = {p.point->x.to_string(), p.point->y.to_string()};
            pj["conjugate_pair"] = p.conjugate_pair;
            ps.push_back(pj);
        }
        j["pairs"] = ps;
    }
    return j;
}

inline nlohmann::json report_to_json(const Report& r, const VarRegistry& reg) {
    nlohmann::json j;
    j["schema"] = "pedcurve/1";
    j["command"] = r.command;
    j["normalized"] = true;
    j["timing_ms"] = r.timing_ms;
    if (r.conic_poly) {
        j["conic"]["poly"] = *r.conic_poly;
        j["conic"]["kind"] = r.conic_kind.value_or("");
    }
    if (r.pole_x) {
        j["pole"]["x"] = *r.pole_x;
        j["pole"]["y"] = *r.pole_y;
        j["pole"]["symbolic"] = r.pole_symbolic;
    }
    if (r.param_x_num) {
        j["parametrization"]["x_num"] = *r.param_x_num;
        j["parametrization"]["x_den"] = *r.param_x_den;
        j["parametrization"]["y_num"] = *r.param_y_num;
        j["parametrization"]["y_den"] = *r.param_y_den;
    }
    if (r.missing_point) j["missing_point"] = *r.missing_point;
    if (r.implicit) j["implicit"] = *r.implicit;
    if (r.raw) j["raw"] = *r.raw;
    j["removed"] = r.removed;
    if (r.factor_unit) {
        j["factorization"]["unit"] = r.factor_unit->to_string();
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& [poly, mult] : r.factors)
            fs.push_back({{"poly", poly}, {"multiplicity", mult}});
        j["factorization"]["factors"] = fs;
    }
    nlohmann::json sings = nlohmann::json::array();
    for (const auto& s : r.singularities) sings.push_back(singularity_to_json(s, reg));
    j["singularities"] = sings;
    if (r.has_limacon_matches) {
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& m : r.limacon_matches)
            ms.push_back({{"a", m.a}, {"e", m.e}, {"r1", m.r1}, {"r2", m.r2}});
        j["limacon_matches"] = ms;
    }
    if (r.svg_path) j["svg"] = *r.svg_path;
    return j;
}

// Structural check of the published schema. Throws on violations.
inline void validate_report_json(const nlohmann::json& j) {
    auto need = [&](const char* key) {
        if (!j.contains(key))
            throw error(errc::internal, std::string("report missing key ") + key);
    };
    need("schema");
    need("command");
    need("normalized");
    need("removed");
    need("singularities");
    if (j["schema"] != "pedcurve/1")
        throw error(errc::internal, "unexpected schema tag");
    if (!j["command"].is_array()) throw error(errc::internal, "command must be an array");
    if (!j["normalized"].is_boolean())
        throw error(errc::internal, "normalized must be boolean");
    if (!j["removed"].is_array()) throw error(errc::internal, "removed must be an array");
    if (!j["singularities"].is_array())
        throw error(errc::internal, "singularities must be an array");
    for (const auto& s : j["singularities"]) {
        for (const char* k : {"point", "multiplicity", "tangent_cone", "kind"})
            if (!s.contains(k))
                throw error(errc::internal, std::string("singularity missing ") + k);
    }
    if (j.contains("factorization")) {
        if (!j["factorization"].contains("unit") ||
            !j["factorization"].contains("factors"))
            throw error(errc::internal, "factorization must carry unit and factors");
    }
}

}  // namespace pedcurve
