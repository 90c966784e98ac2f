#include "tbk/prep.hpp"

#include <algorithm>

#include "tbk/factor_z.hpp"

namespace tbk {

namespace {

PolyZ pz(std::initializer_list<long> v) { return PolyZ(v); }

Mat2Z reduce(const Mat2Z& m, const PolyZ& f) {
    return {poly_mod(m.a, f), poly_mod(m.b, f), poly_mod(m.c, f), poly_mod(m.d, f)};
}

Mat2Z neg(const Mat2Z& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2Z letter_matrix(const RileyLetter& l) {
    return l.generator == 1 ? meridian_x1(l.exponent) : meridian_x2(l.exponent);
}

}  // namespace

Mat2Z meridian_x1(int exponent) {
    return {pz({1}), pz({exponent}), pz({}), pz({1})};
}

Mat2Z meridian_x2(int exponent) {
    PolyZ y = PolyZ::x_power(1);
    return {pz({1}), pz({}), exponent > 0 ? y : -y, pz({1})};
}

Mat2Z word_matrix(const RileyWord& w) {
    Mat2Z acc{pz({1}), pz({}), pz({}), pz({1})};
    for (const auto& l : w.letters) acc = acc * letter_matrix(l);
    return acc;
}

RileyPolynomial riley_polynomial(const RileyWord& w) {
    Mat2Z W = word_matrix(w);
    PolyZ lambda = W.a;
    if (lambda.is_zero()) throw ConventionError("riley_polynomial: W11 vanished");

    RileyPolynomial out;
    out.knot = w.knot;
    out.lc_sign_flipped = sign(lambda.lc()) < 0;
    if (out.lc_sign_flipped) lambda = -lambda;
    out.lambda = lambda;
    out.constant_term = lambda.c[0];

    long expected_deg = (w.knot.p - 1) / 2;
    if (lambda.degree() != expected_deg)
        throw ConventionError("riley_polynomial: deg Lambda != (p-1)/2 for " + w.knot.label());
    if (!(lambda.lc() == 1))
        throw ConventionError("riley_polynomial: leading coefficient not a unit");
    if (!(bi_abs(out.constant_term) == 1))
        throw ConventionError("riley_polynomial: constant term not a unit");

    // W21 = y * W12 is the identical part of the representation equations.
    if (W.c != PolyZ::x_power(1) * W.b)
        throw ConventionError("riley_polynomial: W21 != y*W12 identically");

    // Relator identity over Z[y]/(Lambda): W*X1 = ±X2*W entrywise.
    Mat2Z lhs = reduce(W * meridian_x1(), lambda);
    Mat2Z rhs = reduce(meridian_x2() * W, lambda);
    if (!(lhs == rhs || lhs == reduce(neg(rhs), lambda)))
        throw ConventionError("riley_polynomial: relator identity failed for " + w.knot.label());

    out.factors = factor_z(lambda);
    return out;
}

CuspData longitude(const RileyWord& w, const PolyZ& f) {
    if (f.is_zero() || !(f.lc() == 1))
        throw std::invalid_argument("longitude: factor must be monic");

    Mat2Z acc{pz({1}), pz({}), pz({}), pz({1})};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = reduce(acc * letter_matrix(*it), f);  // rev(w)
    for (const auto& l : w.letters) acc = reduce(acc * letter_matrix(l), f);  // * w

    long e = w.exponent_sum();
    // x1^(-2e) = (1, -2e; 0, 1)
    Mat2Z x1pow{pz({1}), PolyZ::constant(BigInt(-2 * e)), pz({}), pz({1})};
    acc = reduce(acc * x1pow, f);

    CuspData cd;
    cd.factor = f;

    bool upper = acc.c.is_zero();
    bool diag_plus = acc.a == pz({1}) && acc.d == pz({1});
    bool diag_minus = acc.a == pz({-1}) && acc.d == pz({-1});
    cd.longitude_parabolic = upper && (diag_plus || diag_minus);
    if (!cd.longitude_parabolic)
        throw ConventionError("longitude: image not upper-triangular parabolic for " +
                              w.knot.label());

    PolyZ g = diag_minus ? -acc.b : acc.b;  // projectivize to (1 g; 0 1)

    // Peripheral commutation guard.
    Mat2Z X1 = meridian_x1();
    cd.longitude_commutes = reduce(acc * X1, f) == reduce(X1 * acc, f);
    if (!cd.longitude_commutes)
        throw ConventionError("longitude: image does not commute with x1 for " + w.knot.label());

    cd.g0_integral = true;
    for (const auto& x : g.c)
        if (!is_even(x)) cd.g0_integral = false;
    if (!cd.g0_integral)
        throw ContradictionEvent("longitude: g/2 not integral in the power basis for " +
                                 w.knot.label() + " (g0 must be an algebraic integer)");
    PolyZ g0;
    g0.c.reserve(g.c.size());
    for (const auto& x : g.c) g0.c.push_back(bi_divexact(x, BigInt(2)));
    g0.trim();

    cd.g = QuotElem::make(f, g);
    cd.g0 = QuotElem::make(f, g0);
    cd.cusp_minpoly = minpoly_in_quotient(cd.g0);
    cd.cusp_degree = cd.cusp_minpoly.degree();
    return cd;
}

std::pair<PolyQ, int> cusp_field(const CuspData& cd) {
    // g = 2*g0, so minpoly_g(t) = 2^d * minpoly_g0(t/2): rescale instead of
    // running a second Krylov elimination.
    const PolyQ& m0 = cd.cusp_minpoly;
    int deg = m0.degree();
    PolyQ mp;
    mp.c.resize(m0.c.size());
    for (int i = 0; i <= deg; ++i)
        mp.c[static_cast<std::size_t>(i)] =
            m0.coeff(static_cast<std::size_t>(i)) * rat_pow(BigRat(2), deg - i);
    mp.trim();
    if (cd.factor.degree() % deg != 0)
        throw std::logic_error("cusp_field: degree does not divide factor degree");
    return {mp, deg};
}

}  // namespace tbk
