#pragma once

#include "tbk/poly.hpp"

namespace tbk {

// Element of Q[y]/(f), with the monic modulus carried by value. Binary
// operations require identical moduli.
struct QuotElem {
    PolyQ modulus;  // monic, degree >= 1
    PolyQ rep;      // reduced, degree < deg modulus

    static QuotElem make(const PolyQ& modulus, const PolyQ& rep);
    static QuotElem make(const PolyZ& modulus, const PolyZ& rep);

    QuotElem operator+(const QuotElem& o) const;
    QuotElem operator-(const QuotElem& o) const;
    QuotElem operator*(const QuotElem& o) const;
    bool operator==(const QuotElem& o) const { return rep == o.rep; }
    bool operator!=(const QuotElem& o) const { return !(*this == o); }

    QuotElem pow(unsigned long e) const;

    bool is_zero() const { return rep.is_zero(); }
    // True iff every power-basis coordinate is an integer.
    bool has_integer_coordinates() const;
};

// Monic minimal polynomial of elt over Q, computed from the first linear
// dependence among 1, elt, elt^2, ... (the Krylov sequence of the
// multiplication-by-elt matrix in the power basis). Requires an irreducible
// modulus so that the result's degree divides deg(modulus).
PolyQ minpoly_in_quotient(const QuotElem& elt);

}  // namespace tbk
