#include "tbk/dihedral.hpp"

namespace tbk {

PolyF2 reduce_and_check_squarefree(const PolyZ& lambda) {
    if (lambda.is_zero() || !(bi_abs(lambda.lc()) == 1))
        throw std::invalid_argument("reduce_and_check_squarefree: |lc| must be 1");
    PolyF2 bar = PolyF2::reduce_mod2(lambda);
    if (!gcd(bar, bar.derivative()).is_one())
        throw ContradictionEvent("Lambda mod 2 has a repeated factor: " + bar.to_string());
    return bar;
}

DihedralImage dihedral_image(const PolyF2& fbar) {
    if (fbar.degree() < 1) throw std::invalid_argument("dihedral_image: trivial modulus");
    // rho(x1*x2) = (1+y, 1; y, 1) over F2[y]/(fbar)
    PolyF2 y = PolyF2::x_power(1);
    Mat2F2q m{F2QuotElem::of(y + PolyF2::one(), fbar), F2QuotElem::one(fbar),
              F2QuotElem::of(y, fbar), F2QuotElem::one(fbar)};
    std::uint64_t order = matrix_order(m, fbar);
    if (order % 2 == 0 || order < 3)
        throw ContradictionEvent("dihedral image order m = " + std::to_string(order) +
                                 " for factor " + fbar.to_string() + " (m must be odd, >= 3)");
    return {fbar, static_cast<long>(order)};
}

PolyF2 mod2_oracle(long p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("mod2_oracle: p must be odd, >= 3");
    long n = (p - 1) / 2;
    // Write 1 + z + ... + z^(p-1) in the basis z^(n-j) * (z^2+1)^j; the
    // coefficient of the top slot z^(n+j) peels off a_j.
    PolyF2 g;
    for (long i = 0; i < p; ++i) g.set(static_cast<std::size_t>(i));
    PolyF2 result;
    for (long j = n; j >= 0; --j) {
        if (g.get(static_cast<std::size_t>(n + j))) {
            result.set(static_cast<std::size_t>(j));
            PolyF2 term = PolyF2::x_power(static_cast<std::size_t>(n - j));
            PolyF2 z2p1;
            z2p1.set(0);
            z2p1.set(2);
            for (long t = 0; t < j; ++t) term = term * z2p1;
            g = g + term;
        }
    }
    if (!g.is_zero()) throw std::logic_error("mod2_oracle: peeling residue nonzero");
    if (result.degree() != n) throw std::logic_error("mod2_oracle: wrong degree");
    return result;
}

SpectrumReport dihedral_spectrum_check(const std::vector<DihedralImage>& images, long p) {
    SpectrumReport rep;
    rep.all_m_odd = true;
    rep.all_m_divide_p = true;
    rep.within_3_5 = true;
    for (const auto& img : images) {
        rep.degree_by_m[img.m] += img.factor_mod2.degree();
        if (img.m % 2 == 0) rep.all_m_odd = false;
        if (p % img.m != 0) rep.all_m_divide_p = false;
        if (img.m != 3 && img.m != 5) rep.within_3_5 = false;
    }
    if (!rep.all_m_odd)
        throw ContradictionEvent("dihedral spectrum: even m for p = " + std::to_string(p));
    if (!rep.all_m_divide_p)
        throw ContradictionEvent("dihedral spectrum: m not dividing p = " + std::to_string(p));

    rep.phi_grouping = true;
    for (long m : divisors_of(p)) {
        if (m == 1) continue;
        auto it = rep.degree_by_m.find(m);
        long got = it == rep.degree_by_m.end() ? 0 : it->second;
        if (got != euler_phi(m) / 2) rep.phi_grouping = false;
    }
    for (auto& [m, deg] : rep.degree_by_m) {
        if (p % m != 0) rep.phi_grouping = false;
    }
    if (!rep.phi_grouping)
        throw ContradictionEvent("dihedral spectrum: phi(m)/2 grouping mismatch for p = " +
                                 std::to_string(p));
    return rep;
}

}  // namespace tbk
