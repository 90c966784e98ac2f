#include <doctest.h>

#include <algorithm>

#include "tbk/knot.hpp"
#include "tbk/prep.hpp"

using namespace tbk;

TEST_CASE("riley polynomial small knots") {
    auto rp = riley_polynomial(riley_word(canonicalize(3, 1)));
    CHECK(rp.lambda == PolyZ({1, 1}));
    CHECK(rp.constant_term == 1);

    rp = riley_polynomial(riley_word(canonicalize(5, 3)));
    CHECK(rp.lambda == PolyZ({1, -1, 1}));
    REQUIRE(rp.factors.size() == 1);
    CHECK(rp.factors[0] == PolyZ({1, -1, 1}));

    rp = riley_polynomial(riley_word(canonicalize(7, 3)));
    CHECK(rp.lambda == PolyZ({1, 2, 1, 1}));
}

TEST_CASE("relator identity holds explicitly for the figure-eight") {
    auto w = riley_word(canonicalize(5, 3));
    Mat2Z W = word_matrix(w);
    PolyZ lambda = W.a;
    Mat2Z lhs = W * meridian_x1();
    Mat2Z rhs = meridian_x2() * W;
    CHECK(poly_mod(lhs.a - rhs.a, lambda).is_zero());
    CHECK(poly_mod(lhs.b - rhs.b, lambda).is_zero());
    CHECK(poly_mod(lhs.c - rhs.c, lambda).is_zero());
    CHECK(poly_mod(lhs.d - rhs.d, lambda).is_zero());
    CHECK(W.det() == PolyZ({1}));
    CHECK(W.c == PolyZ::x_power(1) * W.b);
}

TEST_CASE("degree law and unit coefficients over the small census") {
    for (const auto& k : enumerate_census(31)) {
        auto rp = riley_polynomial(riley_word(k));
        CHECK(rp.lambda.degree() == (k.p - 1) / 2);
        CHECK(rp.lambda.lc() == 1);
        CHECK(bi_abs(rp.constant_term) == 1);
        PolyZ prod = PolyZ::constant(BigInt(1));
        for (const auto& f : rp.factors) prod = prod * f;
        CHECK(prod == rp.lambda);
    }
}

TEST_CASE("figure-eight longitude and cusp data") {
    auto w = riley_word(canonicalize(5, 3));
    auto rp = riley_polynomial(w);
    CuspData cd = longitude(w, rp.factors[0]);

    CHECK(cd.g0.rep == to_polyq(PolyZ({1, -2})));  // g0 = 1 - 2y
    CHECK(cd.g.rep == to_polyq(PolyZ({2, -4})));   // g = 2 - 4y
    CHECK((cd.g0 * cd.g0).rep == PolyQ::constant(BigRat(-3)));
    CHECK(cd.cusp_minpoly == to_polyq(PolyZ({3, 0, 1})));  // t^2 + 3
    CHECK(cd.cusp_degree == 2);
    CHECK(cd.longitude_parabolic);
    CHECK(cd.longitude_commutes);
    CHECK(cd.g0_integral);

    auto [gmp, gdeg] = cusp_field(cd);
    CHECK(gmp == to_polyq(PolyZ({12, 0, 1})));  // t^2 + 12
    CHECK(gdeg == 2);
}

TEST_CASE("torus knot (3,1) has a rational cusp parameter") {
    auto w = riley_word(canonicalize(3, 1));
    auto rp = riley_polynomial(w);
    CuspData cd = longitude(w, rp.factors[0]);
    CHECK(cd.cusp_degree == 1);
    CHECK(cd.g0_integral);
}

TEST_CASE("longitude contract over the small census") {
    for (const auto& k : enumerate_census(25)) {
        auto w = riley_word(k);
        auto rp = riley_polynomial(w);
        for (const auto& f : rp.factors) {
            CuspData cd = longitude(w, f);
            CHECK(cd.longitude_parabolic);
            CHECK(cd.longitude_commutes);
            CHECK(cd.g0_integral);
            CHECK(f.degree() % cd.cusp_degree == 0);
            auto [gmp, gdeg] = cusp_field(cd);
            CHECK(gdeg == cd.cusp_degree);
            // the rescaled minimal polynomial agrees with a direct Krylov run
            CHECK(gmp == minpoly_in_quotient(cd.g));
        }
    }
}

TEST_CASE("mirror form produces the identical Lambda") {
    for (const auto& k : enumerate_census(21)) {
        // q' = 2p - q is the mirror; the word has all exponents flipped and
        // the normalized polynomial comes out identical.
        RileyWord mirror = riley_word(TwoBridgeForm{k.p, 2 * k.p - k.q, true});
        auto a = riley_polynomial(riley_word(k));
        auto b = riley_polynomial(mirror);
        CHECK(a.lambda == b.lambda);
    }
}

TEST_CASE("inverse form yields an isomorphic invariant package") {
    // (7,5) with 5 = 3^{-1} mod 14: Lambda differs but disc, splitting and
    // cusp minimal polynomials agree factor by factor.
    auto a = riley_polynomial(riley_word(TwoBridgeForm{7, 3, false}));
    auto b = riley_polynomial(riley_word(TwoBridgeForm{7, 5, false}));
    CHECK(a.lambda != b.lambda);
    REQUIRE(a.factors.size() == 1);
    REQUIRE(b.factors.size() == 1);

    auto wa = riley_word(TwoBridgeForm{7, 3, false});
    auto wb = riley_word(TwoBridgeForm{7, 5, false});
    CuspData ca = longitude(wa, a.factors[0]);
    CuspData cb = longitude(wb, b.factors[0]);
    CHECK(ca.cusp_minpoly == cb.cusp_minpoly);
}
