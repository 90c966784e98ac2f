#include <doctest.h>

#include "tbk/report_json.hpp"
#include "tbk/verdict.hpp"

using namespace tbk;

TEST_CASE("symmetry group criterion") {
    CHECK(symmetry_group(canonicalize(5, 3)) == "D4");   // 9 = -1 mod 5
    CHECK(symmetry_group(canonicalize(7, 3)) == "V");    // 9 = 2 mod 7
    CHECK(symmetry_group(canonicalize(13, 5)) == "D4");  // 25 = -1 mod 13
}

TEST_CASE("analyze torus knot") {
    KnotReport rep = analyze(3, 1);
    CHECK(!rep.hyperbolic);
    CHECK(rep.hs_status == HsStatus::NotApplicableTorus);
    CHECK(rep.uniqueness_verdict.find("TorusKnot") == 0);
    CHECK(!rep.contradiction);
    CHECK(rep.riley.lambda == PolyZ({1, 1}));
}

TEST_CASE("analyze (7,3): certified, QI and DIHEDRAL fire") {
    KnotReport rep = analyze(7, 3);
    CHECK(rep.hyperbolic);
    CHECK(rep.hs_status == HsStatus::Certified);
    CHECK(rep.uniqueness_verdict == "UniqueInCommensurabilityClass");
    REQUIRE(rep.factors.size() == 1);
    const auto& fr = rep.factors[0];
    bool qi_fired = false, dihedral_fired = false;
    for (const auto& ob : fr.obstructions) {
        if (ob.kind == "QI") {
            qi_fired = ob.fired;
            CHECK(!ob.certifying);
        }
        if (ob.kind == "DIHEDRAL") dihedral_fired = ob.fired;
    }
    CHECK(qi_fired);
    CHECK(dihedral_fired);
    CHECK(fr.field.two_split == std::vector<int>({3}));
    CHECK(rep.events.empty());
}

TEST_CASE("analyze figure-eight: arithmetic, outside the obstruction pipeline") {
    KnotReport rep = analyze(5, 3);
    CHECK(rep.is_figure_eight);
    CHECK(rep.hs_status == HsStatus::ArithmeticExcluded);
    CHECK(rep.uniqueness_verdict == "UniqueInCommensurabilityClass");
    REQUIRE(rep.factors.size() == 1);
    CHECK(rep.factors[0].field.arithmetic);
    CHECK(rep.factors[0].field.sqrtm3.status == SqrtStatus::PresentWitness);
    REQUIRE(rep.mod2_images.size() == 1);
    CHECK(rep.mod2_images[0].m == 5);
    // no certifying obstruction may fire here: the knot has hidden symmetries
    for (const auto& ob : rep.factors[0].obstructions)
        if (ob.certifying) CHECK(!ob.fired);
}

TEST_CASE("analyze (13,5): D4 symmetry, certified") {
    KnotReport rep = analyze(13, 5);
    CHECK(rep.symmetry_group == "D4");
    CHECK(rep.hs_status == HsStatus::Certified);
    bool dihedral = false;
    for (const auto& fr : rep.factors)
        for (const auto& ob : fr.obstructions)
            if (ob.kind == "DIHEDRAL" && ob.fired) dihedral = true;
    CHECK(dihedral);
}

TEST_CASE("analyze (85,47): the honest inconclusive case") {
    KnotReport rep = analyze(85, 47);
    CHECK(rep.hs_status == HsStatus::Inconclusive);
    CHECK(!rep.contradiction);
    // the unobstructed factor is the arithmetic-looking y^2 - y + 1
    bool found = false;
    for (const auto& fr : rep.factors) {
        if (fr.field.factor == PolyZ({1, -1, 1})) {
            found = true;
            CHECK(fr.field.geometric_candidate);
            CHECK(!fr.certified_obstructed);
        }
    }
    CHECK(found);
}

TEST_CASE("analyze is deterministic") {
    std::string a = render_json(analyze(11, 3));
    std::string b = render_json(analyze(11, 3));
    CHECK(a == b);
}

TEST_CASE("mirrored input reaches the same canonical report body") {
    KnotReport a = analyze(7, 3);
    KnotReport b = analyze(7, 11);  // 11 = -3 mod 14: mirror, canonicalizes to (7,3)
    CHECK(b.knot.q == 3);
    CHECK(b.knot.mirrored);
    CHECK(a.riley.lambda == b.riley.lambda);
    CHECK(to_string(a.hs_status) == to_string(b.hs_status));
}

TEST_CASE("invalid inputs raise InvalidKnotInput") {
    CHECK_THROWS_AS(analyze(4, 1), InvalidKnotInput);
    CHECK_THROWS_AS(analyze(9, 6), InvalidKnotInput);
}
