#pragma once

#include <vector>

#include "tbk/events.hpp"
#include "tbk/knot.hpp"
#include "tbk/mat2.hpp"
#include "tbk/poly.hpp"
#include "tbk/quotient.hpp"

namespace tbk {

using Mat2Z = Mat2<PolyZ>;

// Standard-form generator images: x1 -> (1 1; 0 1), x2 -> (1 0; y 1).
Mat2Z meridian_x1(int exponent = 1);
Mat2Z meridian_x2(int exponent = 1);

// Product of the word's letter images over Z[y].
Mat2Z word_matrix(const RileyWord& w);

struct RileyPolynomial {
    TwoBridgeForm knot;
    PolyZ lambda;                // positive leading coefficient
    std::vector<PolyZ> factors;  // irreducible, primitive, positive lc, sorted
    bool lc_sign_flipped = false;
    BigInt constant_term;        // of the normalized lambda; |.| = 1
};

// Lambda := (1,1) entry of the word matrix, sign-normalized, with the relator
// identity W*X1 = ±X2*W verified entrywise over Z[y]/(Lambda) and the
// factorization over Z attached. Degree (p-1)/2 and unit lc / constant term
// are enforced.
RileyPolynomial riley_polynomial(const RileyWord& w);

struct CuspData {
    PolyZ factor;
    QuotElem g0;         // half cusp parameter; integer power-basis coordinates
    QuotElem g;          // cusp parameter, = 2*g0
    PolyQ cusp_minpoly;  // minimal polynomial of g0 over Q
    int cusp_degree = 0;
    bool longitude_parabolic = false;
    bool longitude_commutes = false;
    bool g0_integral = false;
};

// Image of the longitude rev(w)*w*x1^(-2e), e = sum of exponents, reduced
// modulo an irreducible factor f of Lambda. Must be upper triangular with
// ±1 diagonal; returns g with the sign fixed so the matrix is (1 g; 0 1)
// after projectivization.
CuspData longitude(const RileyWord& w, const PolyZ& f);

// (minimal polynomial of g over Q, its degree); degree divides deg factor.
std::pair<PolyQ, int> cusp_field(const CuspData& cd);

}  // namespace tbk
