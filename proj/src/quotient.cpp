#include "tbk/quotient.hpp"

#include <stdexcept>
#include <vector>

namespace tbk {

QuotElem QuotElem::make(const PolyQ& modulus, const PolyQ& rep) {
    if (modulus.degree() < 1) throw std::invalid_argument("QuotElem: modulus must have degree >= 1");
    PolyQ m = monic(modulus);
    return {m, poly_mod(rep, m)};
}

QuotElem QuotElem::make(const PolyZ& modulus, const PolyZ& rep) {
    return make(to_polyq(modulus), to_polyq(rep));
}

QuotElem QuotElem::operator+(const QuotElem& o) const {
    return {modulus, poly_mod(rep + o.rep, modulus)};
}

QuotElem QuotElem::operator-(const QuotElem& o) const {
    return {modulus, poly_mod(rep - o.rep, modulus)};
}

QuotElem QuotElem::operator*(const QuotElem& o) const {
    return {modulus, poly_mod(rep * o.rep, modulus)};
}

QuotElem QuotElem::pow(unsigned long e) const {
    QuotElem r{modulus, PolyQ::constant(BigRat(1))};
    QuotElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool QuotElem::has_integer_coordinates() const {
    for (const auto& x : rep.c)
        if (!is_integer(x)) return false;
    return true;
}

PolyQ minpoly_in_quotient(const QuotElem& elt) {
    const int d = elt.modulus.degree();

    // Echelonized Krylov vectors; each row remembers its expression in terms
    // of the original powers elt^0..elt^k.
    struct Row {
        std::vector<BigRat> v;      // length d, leading entry 1 at pivot
        std::vector<BigRat> combo;  // length k+1
        int pivot;
    };
    std::vector<Row> rows;

    QuotElem power{elt.modulus, PolyQ::constant(BigRat(1))};
    for (int k = 0; k <= d; ++k) {
        std::vector<BigRat> v(static_cast<std::size_t>(d), BigRat(0));
        for (std::size_t i = 0; i < power.rep.c.size(); ++i) v[i] = power.rep.c[i];
        std::vector<BigRat> combo(static_cast<std::size_t>(k) + 1, BigRat(0));
        combo.back() = 1;

        for (const Row& r : rows) {
            BigRat f = v[static_cast<std::size_t>(r.pivot)];
            if (f == 0) continue;
            for (int i = 0; i < d; ++i)
                v[static_cast<std::size_t>(i)] -= f * r.v[static_cast<std::size_t>(i)];
            for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= f * r.combo[i];
        }

        int pivot = -1;
        for (int i = 0; i < d; ++i) {
            if (v[static_cast<std::size_t>(i)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            // combo gives a monic dependence: sum combo[j] * elt^j = 0
            PolyQ m;
            m.c = combo;
            m.trim();
            if (m.is_zero() || m.lc() != 1)
                throw std::logic_error("minpoly_in_quotient: dependence not monic");
            if (d % m.degree() != 0)
                throw std::logic_error("minpoly_in_quotient: degree does not divide field degree");
            return m;
        }
        BigRat inv = BigRat(1) / v[static_cast<std::size_t>(pivot)];
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back({std::move(v), std::move(combo), pivot});
        power = power * elt;
    }
    throw std::logic_error("minpoly_in_quotient: no dependence found");  // unreachable
}

}  // namespace tbk
