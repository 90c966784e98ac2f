#pragma once

#include <map>
#include <vector>

#include "tbk/events.hpp"
#include "tbk/factor_f2.hpp"
#include "tbk/mat2.hpp"
#include "tbk/poly.hpp"

namespace tbk {

// Irreducible factor of Lambda mod 2 together with the order 2m of the
// dihedral image it induces (m = order of the image of x1*x2).
struct DihedralImage {
    PolyF2 factor_mod2;
    long m = 0;
};

// Lambda mod 2, with the no-repeated-factors check gcd(L, L') = 1. A repeated
// factor raises ContradictionEvent.
PolyF2 reduce_and_check_squarefree(const PolyZ& lambda);

// m from the order of (1+y 1; y 1) over F2[y]/(fbar); fbar irreducible.
DihedralImage dihedral_image(const PolyF2& fbar);

// Independent reconstruction of Lambda mod 2 from p alone: the polynomial f
// of degree (p-1)/2 with z^((p-1)/2) * f(z + 1/z) = 1 + z + ... + z^(p-1)
// over F2 (roots are zeta^k + zeta^-k for a primitive p-th root of unity).
PolyF2 mod2_oracle(long p);

struct SpectrumReport {
    std::map<long, int> degree_by_m;  // m -> total degree of the factors with that m
    bool all_m_odd = false;
    bool all_m_divide_p = false;
    bool phi_grouping = false;   // degree(m) == phi(m)/2 for every divisor m>1 of p
    bool within_3_5 = false;     // {m} subset of {3,5}
};

// Checks every m odd, m | p, and the phi(m)/2 degree grouping against the
// divisors of p; mismatches raise ContradictionEvent.
SpectrumReport dihedral_spectrum_check(const std::vector<DihedralImage>& images, long p);

}  // namespace tbk
