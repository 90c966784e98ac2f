#pragma once

#include "tbk/poly.hpp"

namespace tbk {

// Sylvester-convention resultant, Res(f,g) = lc(f)^deg(g) * prod g(alpha_i)
// over the roots of f, computed by a subresultant pseudo-remainder sequence
// (no rational coefficient growth in the sequence itself).
BigInt resultant(const PolyZ& f, const PolyZ& g);

// disc(f) = (-1)^(d(d-1)/2) * Res(f, f') / lc(f), d = deg f >= 1.
BigInt discriminant(const PolyZ& f);

// Number of distinct real roots of a squarefree f (Sturm's theorem).
int count_real_roots(const PolyZ& f);

}  // namespace tbk
