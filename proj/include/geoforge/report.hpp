#pragma once

// JSON and CSV renderings of reports. Reals are written as decimal strings
// with every digit the working precision supports; field order is fixed.

#include <json.hpp>

#include <ostream>
#include <string>

#include "geoforge/constants.hpp"
#include "geoforge/pants.hpp"
#include "geoforge/survey.hpp"

namespace geoforge {

using Json = nlohmann::ordered_json;

inline Json to_json(const ThresholdCertificate& c, const std::string& definition) {
    Json j;
    j["value"] = c.value.str();
    j["definition"] = definition;
    j["holds_at_value"] = c.holds_at_value;
    j["fails_below"] = c.fails_below;
    j["value_at_floor"] = c.value_at_floor;
    j["turning_point"] = c.turning_point.str();
    j["beyond_turning_point"] = c.beyond_turning_point;
    j["phi_at_value"] = c.phi_at_value.str();
    j["phi_before"] = c.value_at_floor ? Json(nullptr) : Json(c.phi_before.str());
    j["precision_bits"] = c.precision_bits;
    return j;
}

inline Json to_json(const ConstantsReport& r, const std::vector<Integer>& ks = {}) {
    Json j;
    const bool topo = r.surface.mode == SurfaceMode::topological;
    const int digits = Real::decimal_digits(r.precision_bits);
    j["mode"] = topo ? "topological" : "explicit";
    j["surface"] = r.surface.name;
    Json in;
    if (topo) {
        in["g"] = r.surface.genus;
        in["n"] = r.surface.punctures;
        in["systole_floor"] = r.systole.str(digits);
    } else {
        in["h_max"] = r.h_max.str(digits);
        in["systole"] = r.systole.str(digits);
        in["d1"] = r.d_used.str(digits);
        in["d_eps0"] = r.d_eps0.str(digits);
    }
    j["input"] = in;
    j["h_max"] = r.h_max.str(digits);
    j["h0"] = r.h0.str(digits);
    j["h0_definition"] = "1/(30 h_max)";
    j["eps0"] = r.eps0.str(digits);
    j["eps0_definition"] = r.eps0_rule;
    j["eps0_note"] = kEps0Discrepancy;
    j["d_used"] = r.d_used.str(digits);
    j["d_eps0"] = r.d_eps0.str(digits);
    j["thin_boundary_horocycle"] = r.thin_boundary_horocycle.str(digits);
    j["thin_boundary_horocycle_definition"] = "2/sqrt(coth(eps0) - 1)";
    if (topo) {
        j["L_bers"] = r.L_bers->str(digits);
        j["L_bers_definition"] = "4(3g-3+n) log(4 pi (2g-2+n)/(3g-3+n))";
        j["h_adams"] = *r.h_adams;
        j["h_adams_definition"] = "12g + 5n - 11";
        j["d_corollary"] = r.d_corollary->str(digits);
        j["d_corollary_definition"] = "2 log(4 cosh(L_bers/2))";
        j["d_eps0_definition"] = "2 log(4 cosh(L_bers/2) / thin_boundary_horocycle)";
    }
    j["D"] = to_json(r.D, "least integer D >= 2 with (eps0/12) sqrt(x) > 2 asinh(eps0 x/2) + d_eps0 + 2 eps0 for all x >= D");
    j["eps"] = r.eps.str(digits);
    j["eps_definition"] = "eps0/(10 D)";
    j["K"] = to_json(r.K, "least integer K >= D with 2 asinh(k) + d_used + 1 < (eps/h_max) k^(1/5) for all k >= K");
    j["eps_thick"] = r.eps_thick.str(digits);
    j["eps_thick_definition"] = "min(1/4, systole/2)";
    j["K_direct_thick"] = to_json(r.K_direct_thick, "least integer K with 2 asinh(k) + d_used + 1 < (eps_thick/12) sqrt(k) for all k >= K");
    j["K_direct_pipeline"] = to_json(r.K_direct_pipeline, "least integer K with 2 asinh(k) + d_used + 1 < (eps/12) sqrt(k) for all k >= K");
    j["K_reference"] = "1e35";
    j["K_reference_note"] = "reference magnitude only; no variant is asserted to match it";
    Json cs = Json::array();
    for (const auto& k : ks) {
        Json c;
        c["k"] = k.str();
        c["C"] = r.C(k).str();
        cs.push_back(c);
    }
    j["C"] = cs;
    j["C_definition"] = "2 asinh(k) + d_used + 1";
    j["precision_bits"] = r.precision_bits;
    return j;
}

inline Json to_json(const ExampleSurfaceReport& r) {
    Json j;
    j["k"] = r.k;
    j["x"] = r.x.str();
    j["y"] = r.y.str();
    j["l_g1"] = r.l_g1.str();
    j["l_g2"] = r.l_g2.str();
    j["l_g3"] = r.l_g3.str();
    j["collar_2w"] = r.collar_2w.str();
    j["bullet1"] = r.bullet1;
    j["bullet2"] = r.bullet2;
    j["g3_below_g2"] = r.g3_below_g2;
    j["margin1"] = r.margin1.str();
    j["margin2"] = r.margin2.str();
    j["margin3"] = r.margin3.str();
    j["asserted"] = r.asserted;
    j["precision_bits"] = r.precision_bits;
    j["margin_precision_bits"] = r.margin_precision_bits;
    return j;
}

inline Json to_json(const SurveyRow& row) {
    Json j;
    j["word"] = row.word.str();
    j["trace"] = row.trace.str();
    j["length"] = row.length.str();
    j["self_intersections"] = row.self_intersections;
    j["certified"] = row.certified;
    j["radius_used"] = row.radius_used;
    j["bacK"] = row.back_shape ? Json(row.back_shape->str()) : Json(nullptr);
    return j;
}

inline Json to_json(const SurveySummary& s) {
    Json j;
    j["k"] = s.k;
    j["best_row"] = s.best_row ? to_json(*s.best_row) : Json(nullptr);
    j["s_geq_k_upper"] = s.s_geq_k_upper ? Json(s.s_geq_k_upper->str()) : Json(nullptr);
    j["candidate_bacK_length"] = s.candidate_back_length.str();
    j["candidate_in_range"] = s.candidate_in_range;
    j["coverage_note"] = s.coverage_note;
    return j;
}

inline void write_csv_header(std::ostream& os) {
    os << "word,trace,length,self_intersections,certified,bacK\n";
}

inline void write_csv_row(std::ostream& os, const SurveyRow& row) {
    os << row.word.str() << ',' << row.trace.str() << ',' << row.length.str() << ',' << row.self_intersections
       << ',' << (row.certified ? "true" : "false") << ',' << (row.back_shape ? row.back_shape->str() : "") << '\n';
}

} // namespace geoforge
