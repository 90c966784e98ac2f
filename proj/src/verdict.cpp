#include "tbk/verdict.hpp"

#include <algorithm>

namespace tbk {

std::string to_string(HsStatus s) {
    switch (s) {
        case HsStatus::Certified: return "NoHiddenSymmetries(certified)";
        case HsStatus::Inconclusive: return "ObstructionInconclusive";
        case HsStatus::ArithmeticExcluded: return "ArithmeticExcluded(figure-eight)";
        case HsStatus::NotApplicableTorus: return "NotApplicable(torus knot)";
        case HsStatus::Contradiction: return "TheoremContradictionDetected";
    }
    return "?";
}

std::string symmetry_group(const TwoBridgeForm& k) {
    long qq = (k.q % k.p) * (k.q % k.p) % k.p;
    return (qq == k.p - 1) ? "D4" : "V";
}

namespace {

std::string join_ms(const std::vector<DihedralImage>& images) {
    std::string s = "{";
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(images[i].m);
    }
    return s + "}";
}

}  // namespace

std::vector<Obstruction> hidden_symmetry_obstructions(const FactorReport& fr,
                                                      const SqrtOptions& opt) {
    std::vector<Obstruction> out;

    // (a) cusp field contained in neither Q(sqrt(-3)) nor Q(i)
    {
        Obstruction ob;
        ob.kind = "CUSP_FIELD";
        ob.certifying = true;
        if (fr.cusp.cusp_degree >= 3) {
            ob.fired = true;
            ob.certificate = "cusp field degree " + std::to_string(fr.cusp.cusp_degree) +
                             " > 2: not a subfield of any quadratic field";
        } else if (fr.cusp.cusp_degree == 2) {
            PolyZ mp = to_polyz_exact(fr.cusp.cusp_minpoly);  // g0 is an algebraic integer
            SqrtResult si = sqrt_in_field(mp, BigInt(-1), opt);
            SqrtResult s3 = sqrt_in_field(mp, BigInt(-3), opt);
            if (si.status == SqrtStatus::CertifiedAbsent &&
                s3.status == SqrtStatus::CertifiedAbsent) {
                ob.fired = true;
                ob.certificate = "quadratic cusp field is neither Q(i) [" + si.certificate +
                                 "] nor Q(sqrt(-3)) [" + s3.certificate + "]";
            } else if (si.status == SqrtStatus::PresentWitness) {
                ob.certificate = "cusp field is Q(i): witness found";
            } else if (s3.status == SqrtStatus::PresentWitness) {
                ob.certificate = "cusp field is Q(sqrt(-3)): witness found";
            } else {
                ob.certificate = "containment undetermined (" + si.certificate + "; " +
                                 s3.certificate + ")";
            }
        } else {
            ob.certificate = "rational cusp parameter: contained in both target fields";
        }
        out.push_back(ob);
    }

    // (b) Q(i) exclusion from the trace field (kills the S2(2,4,4) branch)
    {
        Obstruction ob;
        ob.kind = "QI";
        ob.certifying = false;
        ob.fired = fr.field.qi.status == SqrtStatus::CertifiedAbsent;
        ob.certificate = fr.field.qi.certificate;
        out.push_back(ob);
    }

    // (c) dihedral spectrum of this factor outside {3,5}
    {
        Obstruction ob;
        ob.kind = "DIHEDRAL";
        ob.certifying = true;
        for (const auto& img : fr.mod2_images) {
            if (img.m != 3 && img.m != 5) ob.fired = true;
        }
        ob.certificate = ob.fired
                             ? "mod-2 dihedral orders " + join_ms(fr.mod2_images) +
                                   " not within {3,5} (hidden symmetries force D3 or D5 images)"
                             : "spectrum " + join_ms(fr.mod2_images) + " within {3,5}";
        out.push_back(ob);
    }

    // (d) degree bound (hidden symmetries force deg <= 3 via the 2-splitting)
    {
        Obstruction ob;
        ob.kind = "DEGREE";
        ob.certifying = true;
        ob.fired = fr.field.degree > 3;
        ob.certificate = ob.fired ? "trace field degree " + std::to_string(fr.field.degree) +
                                        " > 3 rules out the forced 2-splitting pattern"
                                  : "degree " + std::to_string(fr.field.degree) + " <= 3";
        out.push_back(ob);
    }

    return out;
}

KnotReport analyze(long p, long q, const AnalyzeOptions& opt) {
    KnotReport rep;
    rep.input_p = p;
    rep.input_q = q;
    rep.knot = canonicalize(p, q);  // InvalidKnotInput propagates (CLI exit 2)
    rep.hyperbolic = is_hyperbolic(rep.knot);
    rep.is_figure_eight = rep.knot.p == 5 && rep.knot.q == 3;
    rep.symmetry_group = symmetry_group(rep.knot);

    auto record_event = [&rep](const std::string& what) {
        rep.events.push_back(what);
        rep.contradiction = true;
        rep.hs_status = HsStatus::Contradiction;
    };

    RileyWord word = riley_word(rep.knot);

    try {
        rep.riley = riley_polynomial(word);
        rep.riley_computed = true;

        rep.lambda_mod2 = reduce_and_check_squarefree(rep.riley.lambda);
        rep.mod2_squarefree = true;

        rep.oracle_poly = mod2_oracle(rep.knot.p);
        rep.oracle_match = rep.lambda_mod2 == rep.oracle_poly;
        if (!rep.oracle_match)
            throw ContradictionEvent("Lambda mod 2 differs from the p-only reconstruction for " +
                                     rep.knot.label());

        for (const auto& fa : factor_f2(rep.lambda_mod2))
            rep.mod2_images.push_back(dihedral_image(fa.poly));
        rep.spectrum = dihedral_spectrum_check(rep.mod2_images, rep.knot.p);
        rep.spectrum_checked = true;

        for (const auto& f : rep.riley.factors) {
            FactorReport fr;
            fr.field = compute_field_invariants(f, opt.sqrt);
            fr.cusp = longitude(word, f);
            auto [gmp, gdeg] = cusp_field(fr.cusp);
            fr.g_minpoly = gmp;
            fr.cusp_field_degree = gdeg;
            for (const auto& fa : factor_f2(PolyF2::reduce_mod2(f)))
                fr.mod2_images.push_back(dihedral_image(fa.poly));
            fr.obstructions = hidden_symmetry_obstructions(fr, opt.sqrt);
            for (const auto& ob : fr.obstructions)
                if (ob.fired && ob.certifying) fr.certified_obstructed = true;
            rep.factors.push_back(std::move(fr));
        }
    } catch (const ContradictionEvent& ev) {
        record_event(ev.what());
    }

    if (!rep.contradiction) {
        if (!rep.hyperbolic) {
            rep.hs_status = HsStatus::NotApplicableTorus;
            rep.uniqueness_verdict =
                "TorusKnot: commensurability class contains infinitely many knot complements";
        } else {
            rep.uniqueness_verdict = "UniqueInCommensurabilityClass";
            if (rep.is_figure_eight) {
                rep.hs_status = HsStatus::ArithmeticExcluded;
            } else {
                bool any_geometric = false;
                bool all_obstructed = true;
                for (const auto& fr : rep.factors) {
                    if (!fr.field.geometric_candidate) continue;
                    any_geometric = true;
                    if (!fr.certified_obstructed) all_obstructed = false;
                }
                if (!any_geometric) {
                    record_event("hyperbolic knot " + rep.knot.label() +
                                 " has no factor with a non-real root");
                } else {
                    rep.hs_status =
                        all_obstructed ? HsStatus::Certified : HsStatus::Inconclusive;
                }
            }
        }
    } else {
        rep.uniqueness_verdict = "Undetermined(theorem contradiction reported)";
    }

    // Provenance: which supporting facts were machine-verified here vs cited.
    if (rep.riley_computed) {
        rep.provenance.push_back("relator identity W*x1 = ±x2*W over Z[y]/(Lambda): machine-verified");
        rep.provenance.push_back("deg Lambda = (p-1)/2, |lc| = |const| = 1: machine-verified");
    }
    if (rep.mod2_squarefree)
        rep.provenance.push_back("Lambda mod 2 squarefree: machine-verified");
    if (rep.oracle_match)
        rep.provenance.push_back("Lambda mod 2 reconstructed from p alone (q-independence): machine-verified");
    if (rep.spectrum_checked)
        rep.provenance.push_back("dihedral orders odd, dividing p, phi(m)/2 grouping: machine-verified");
    if (!rep.factors.empty()) {
        rep.provenance.push_back("longitude parabolic, commuting with x1, g/2 integral: machine-verified per factor");
        rep.provenance.push_back("Q(i) exclusion certificates (odd discriminant): machine-verified per factor");
    }
    rep.provenance.push_back(
        "hidden symmetries force cusp parameter in Q(i) or Q(sqrt(-3)): theorem-cited");
    rep.provenance.push_back(
        "hidden symmetries force mod-2 dihedral images of order 6 or 10: theorem-cited");
    if (rep.hyperbolic)
        rep.provenance.push_back(
            "uniqueness of the knot complement in its commensurability class: theorem-cited, "
            "with the ingredients above machine-verified for this knot");
    rep.provenance.push_back("symmetry group criterion q^2 = -1 (mod p) for D4: literature-derived");

    return rep;
}

}  // namespace tbk
