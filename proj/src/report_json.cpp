#include "tbk/report_json.hpp"

#include <sstream>

#include "tbk/version.hpp"

namespace tbk {

Json poly_to_json(const PolyZ& p) {
    Json arr = Json::array();
    for (const auto& c : p.c) arr.push_back(to_string(c));
    return arr;
}

Json poly_to_json(const PolyQ& p) {
    Json arr = Json::array();
    for (const auto& c : p.c) arr.push_back(to_string(c));
    return arr;
}

Json poly_to_json(const PolyF2& p) {
    Json arr = Json::array();
    for (int b : p.bits()) arr.push_back(b);
    return arr;
}

namespace {

Json obstruction_to_json(const Obstruction& ob) {
    Json j;
    j["kind"] = ob.kind;
    j["fired"] = ob.fired;
    j["certifying"] = ob.certifying;
    j["certificate"] = ob.certificate;
    return j;
}

Json factor_to_json(const FactorReport& fr) {
    Json j;
    j["poly"] = poly_to_json(fr.field.factor);
    j["poly_pretty"] = poly_to_string(fr.field.factor);
    j["degree"] = fr.field.degree;
    j["disc"] = to_string(fr.field.disc);
    j["disc_odd"] = fr.field.disc_odd;
    j["two_splitting"] = fr.field.two_split;
    j["qi_status"] = to_string(fr.field.qi.status);
    j["qi_certificate"] = fr.field.qi.certificate;
    j["sqrtm3_status"] = to_string(fr.field.sqrtm3.status);
    j["sqrtm3_certificate"] = fr.field.sqrtm3.certificate;
    if (fr.field.sqrtm3.status == SqrtStatus::PresentWitness)
        j["sqrtm3_witness"] = poly_to_json(fr.field.sqrtm3.witness);
    j["arithmetic_candidate"] = fr.field.arithmetic;
    j["real_roots"] = fr.field.real_roots;
    j["geometric_candidate"] = fr.field.geometric_candidate;

    Json cusp;
    cusp["g0"] = poly_to_json(fr.cusp.g0.rep);
    cusp["g"] = poly_to_json(fr.cusp.g.rep);
    cusp["g0_minpoly"] = poly_to_json(fr.cusp.cusp_minpoly);
    cusp["g_minpoly"] = poly_to_json(fr.g_minpoly);
    cusp["degree"] = fr.cusp.cusp_degree;
    cusp["parabolic"] = fr.cusp.longitude_parabolic;
    cusp["commutes_with_x1"] = fr.cusp.longitude_commutes;
    cusp["g0_integral"] = fr.cusp.g0_integral;
    j["cusp"] = cusp;

    Json mi = Json::array();
    for (const auto& img : fr.mod2_images) {
        Json e;
        e["factor_mod2"] = poly_to_json(img.factor_mod2);
        e["degree"] = img.factor_mod2.degree();
        e["m"] = img.m;
        e["group"] = "D" + std::to_string(img.m);
        mi.push_back(e);
    }
    j["mod2_images"] = mi;

    Json obs = Json::array();
    for (const auto& ob : fr.obstructions) obs.push_back(obstruction_to_json(ob));
    j["obstructions"] = obs;
    j["certified_obstructed"] = fr.certified_obstructed;
    return j;
}

}  // namespace

Json report_to_json(const KnotReport& rep) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["toolkit_version"] = kToolkitVersion;

    Json knot;
    knot["p"] = rep.knot.p;
    knot["q"] = rep.knot.q;
    knot["input"] = Json{{"p", rep.input_p}, {"q", rep.input_q}};
    knot["mirrored"] = rep.knot.mirrored;
    knot["hyperbolic"] = rep.hyperbolic;
    knot["figure_eight"] = rep.is_figure_eight;
    knot["symmetry_group"] = rep.symmetry_group;
    knot["symmetry_criterion"] = "literature-derived: D4 iff q^2 = -1 (mod p)";
    j["knot"] = knot;

    if (rep.riley_computed) {
        Json riley;
        riley["lambda"] = poly_to_json(rep.riley.lambda);
        riley["lambda_pretty"] = poly_to_string(rep.riley.lambda);
        riley["degree"] = rep.riley.lambda.degree();
        riley["lc_sign_flipped"] = rep.riley.lc_sign_flipped;
        riley["constant_term"] = to_string(rep.riley.constant_term);
        Json fl = Json::array();
        for (const auto& f : rep.riley.factors) fl.push_back(poly_to_json(f));
        riley["factors"] = fl;
        j["riley"] = riley;

        Json mod2;
        mod2["lambda_mod2"] = poly_to_json(rep.lambda_mod2);
        mod2["squarefree"] = rep.mod2_squarefree;
        mod2["oracle"] = poly_to_json(rep.oracle_poly);
        mod2["oracle_match"] = rep.oracle_match;
        Json images = Json::array();
        for (const auto& img : rep.mod2_images) {
            Json e;
            e["factor_mod2"] = poly_to_json(img.factor_mod2);
            e["degree"] = img.factor_mod2.degree();
            e["m"] = img.m;
            e["group"] = "D" + std::to_string(img.m);
            images.push_back(e);
        }
        mod2["images"] = images;
        Json spectrum = Json::object();
        for (const auto& [m, deg] : rep.spectrum.degree_by_m)
            spectrum[std::to_string(m)] = deg;
        mod2["spectrum"] = spectrum;
        mod2["phi_grouping"] = rep.spectrum.phi_grouping;
        mod2["within_3_5"] = rep.spectrum.within_3_5;
        j["mod2"] = mod2;

        Json factors = Json::array();
        for (const auto& fr : rep.factors) factors.push_back(factor_to_json(fr));
        j["factors"] = factors;
    }

    Json hs;
    hs["status"] = to_string(rep.hs_status);
    Json fired = Json::array();
    for (const char* kind : {"QI", "CUSP_FIELD", "DIHEDRAL", "DEGREE"}) {
        bool any = false;
        for (const auto& fr : rep.factors)
            for (const auto& ob : fr.obstructions)
                if (ob.kind == kind && ob.fired) any = true;
        if (any) fired.push_back(kind);
    }
    hs["fired"] = fired;
    j["hidden_symmetries"] = hs;

    j["uniqueness_verdict"] = rep.uniqueness_verdict;
    j["provenance"] = rep.provenance;
    j["events"] = rep.events;
    return j;
}

std::string render_json(const KnotReport& rep) { return report_to_json(rep).dump(2) + "\n"; }

std::string render_markdown(const KnotReport& rep) {
    std::ostringstream os;
    os << "# 2-bridge knot (" << rep.knot.p << ", " << rep.knot.q << ")\n\n";
    os << "- hyperbolic: " << (rep.hyperbolic ? "yes" : "no") << "\n";
    os << "- symmetry group: " << rep.symmetry_group << " (literature-derived)\n";
    if (rep.riley_computed) {
        os << "- Riley polynomial: `" << poly_to_string(rep.riley.lambda) << "`\n";
        os << "- mod 2: `" << rep.lambda_mod2.to_string() << "`"
           << (rep.mod2_squarefree ? " (squarefree)" : "") << ", oracle "
           << (rep.oracle_match ? "MATCH" : "MISMATCH") << "\n\n";
        os << "| factor | deg | disc | 2-splitting | Q(i) | dihedral | cusp deg |\n";
        os << "|---|---|---|---|---|---|---|\n";
        for (const auto& fr : rep.factors) {
            os << "| `" << poly_to_string(fr.field.factor) << "` | " << fr.field.degree << " | "
               << to_string(fr.field.disc) << " | [";
            for (std::size_t i = 0; i < fr.field.two_split.size(); ++i)
                os << (i ? "," : "") << fr.field.two_split[i];
            os << "] | " << to_string(fr.field.qi.status) << " | ";
            for (std::size_t i = 0; i < fr.mod2_images.size(); ++i)
                os << (i ? "," : "") << "D" << fr.mod2_images[i].m;
            os << " | " << fr.cusp.cusp_degree << " |\n";
        }
        os << "\n";
    }
    os << "- hidden symmetries: " << to_string(rep.hs_status) << "\n";
    os << "- verdict: " << rep.uniqueness_verdict << "\n";
    for (const auto& ev : rep.events) os << "- EVENT: " << ev << "\n";
    return os.str();
}

std::string render_table(const KnotReport& rep) {
    std::ostringstream os;
    os << "knot (" << rep.knot.p << "," << rep.knot.q << ")"
       << (rep.hyperbolic ? " hyperbolic" : " torus") << "  symmetry " << rep.symmetry_group
       << "\n";
    if (rep.riley_computed) {
        os << "Lambda = " << poly_to_string(rep.riley.lambda) << "\n";
        os << "Lambda mod 2 = " << rep.lambda_mod2.to_string() << "  oracle "
           << (rep.oracle_match ? "MATCH" : "MISMATCH") << "\n";
        for (const auto& fr : rep.factors) {
            os << "  factor " << poly_to_string(fr.field.factor) << "  disc "
               << to_string(fr.field.disc) << "  2-split [";
            for (std::size_t i = 0; i < fr.field.two_split.size(); ++i)
                os << (i ? "," : "") << fr.field.two_split[i];
            os << "]  qi " << to_string(fr.field.qi.status) << "  cusp-deg "
               << fr.cusp.cusp_degree << "\n";
        }
    }
    os << "hidden symmetries: " << to_string(rep.hs_status) << "\n";
    os << "verdict: " << rep.uniqueness_verdict << "\n";
    for (const auto& ev : rep.events) os << "EVENT: " << ev << "\n";
    return os.str();
}

}  // namespace tbk
