#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tbk/polyf2.hpp"

namespace tbk {

// 2x2 matrix over any ring with +, * and ==.
template <class R>
struct Mat2 {
    R a, b, c, d;

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    R det() const { return a * d - b * c; }
    R trace() const { return a + d; }

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
};

// Element of F2[y]/(f), f irreducible. Carries its modulus by value; all
// operands of a binary op must share the modulus.
struct F2QuotElem {
    PolyF2 rep;
    PolyF2 mod;

    static F2QuotElem of(const PolyF2& r, const PolyF2& m) { return {r.mod(m), m}; }
    static F2QuotElem zero(const PolyF2& m) { return {PolyF2::zero(), m}; }
    static F2QuotElem one(const PolyF2& m) { return {PolyF2::one().mod(m), m}; }

    F2QuotElem operator+(const F2QuotElem& o) const { return {(rep + o.rep).mod(mod), mod}; }
    F2QuotElem operator-(const F2QuotElem& o) const { return *this + o; }  // char 2
    F2QuotElem operator*(const F2QuotElem& o) const { return {(rep * o.rep).mod(mod), mod}; }
    bool operator==(const F2QuotElem& o) const { return rep == o.rep; }
    bool operator!=(const F2QuotElem& o) const { return !(*this == o); }
};

using Mat2F2q = Mat2<F2QuotElem>;

inline Mat2F2q mat2_identity(const PolyF2& mod) {
    return {F2QuotElem::one(mod), F2QuotElem::zero(mod), F2QuotElem::zero(mod),
            F2QuotElem::one(mod)};
}

Mat2F2q mat2_pow(Mat2F2q base, std::uint64_t e, const PolyF2& mod);

// Least n >= 1 with M^n scalar (= identity in SL2 over a field of
// characteristic 2). Requires det M = 1 and an irreducible modulus of degree
// s; searches divisors of 2^s -+ 1 (and twice those) by fast exponentiation.
// Throws if the bound is exhausted.
std::uint64_t matrix_order(const Mat2F2q& m, const PolyF2& modulus);

// Factorization helpers for the divisor candidates (deterministic
// Miller-Rabin + Pollard rho, valid for the full uint64 range).
std::vector<std::uint64_t> sorted_divisors_u64(std::uint64_t n);
bool is_prime_u64(std::uint64_t n);

}  // namespace tbk
