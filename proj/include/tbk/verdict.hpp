#pragma once

#include <string>
#include <vector>

#include "tbk/dihedral.hpp"
#include "tbk/field.hpp"
#include "tbk/knot.hpp"
#include "tbk/prep.hpp"

namespace tbk {

enum class HsStatus {
    Certified,            // every geometric-candidate factor carries a sound fired obstruction
    Inconclusive,         // analysis complete, obstruction set insufficient to certify
    ArithmeticExcluded,   // the figure-eight: arithmetic, outside the obstruction pipeline
    NotApplicableTorus,   // non-hyperbolic input
    Contradiction,        // a relied-on theorem failed computationally
};

std::string to_string(HsStatus s);

struct Obstruction {
    std::string kind;  // "QI" | "CUSP_FIELD" | "DIHEDRAL" | "DEGREE"
    bool fired = false;
    // QI alone only eliminates the S2(2,4,4) cusp branch, so it never
    // certifies by itself; the other three do.
    bool certifying = false;
    std::string certificate;
};

struct FactorReport {
    FieldInvariants field;
    CuspData cusp;
    PolyQ g_minpoly;  // minimal polynomial of g (= 2*g0)
    int cusp_field_degree = 0;
    std::vector<DihedralImage> mod2_images;  // of this factor's own reduction
    std::vector<Obstruction> obstructions;
    bool certified_obstructed = false;
};

struct KnotReport {
    long input_p = 0, input_q = 0;
    TwoBridgeForm knot;
    bool hyperbolic = false;
    bool is_figure_eight = false;

    RileyPolynomial riley;
    bool riley_computed = false;

    PolyF2 lambda_mod2;
    bool mod2_squarefree = false;
    PolyF2 oracle_poly;
    bool oracle_match = false;
    std::vector<DihedralImage> mod2_images;
    SpectrumReport spectrum;
    bool spectrum_checked = false;

    std::vector<FactorReport> factors;

    std::string symmetry_group;  // "V" | "D4" (literature-derived criterion)
    HsStatus hs_status = HsStatus::Inconclusive;
    std::string uniqueness_verdict;

    std::vector<std::string> provenance;
    std::vector<std::string> events;
    bool contradiction = false;
};

struct AnalyzeOptions {
    SqrtOptions sqrt;
};

// Isom+ of the complement: D4 iff q^2 = -1 (mod p), else V.
std::string symmetry_group(const TwoBridgeForm& k);

// Evaluates the obstruction battery for one factor (cusp-field containment,
// dihedral spectrum, degree bound, Q(i) exclusion).
std::vector<Obstruction> hidden_symmetry_obstructions(const FactorReport& fr,
                                                      const SqrtOptions& opt = {});

// Full per-knot pipeline; ContradictionEvents are captured into the report
// (status Contradiction, contradiction flag), never swallowed.
KnotReport analyze(long p, long q, const AnalyzeOptions& opt = {});

}  // namespace tbk
