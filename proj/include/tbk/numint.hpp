#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tbk {

// Arbitrary-precision integers and rationals. GMP keeps rationals in lowest
// terms with positive denominator, which is exactly the invariant we need;
// the helpers below are the only construction paths used by the library.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt bigint_of(long v) { return BigInt(v); }

inline BigInt bigint_from_string(const std::string& s) { return BigInt(s, 10); }

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

// "n" when den == 1, otherwise "n/d".
inline std::string to_string(const BigRat& v) { return v.get_str(10); }

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat rat_of(const BigInt& n) { return BigRat(n); }

inline BigInt num(const BigRat& r) { return r.get_num(); }
inline BigInt den(const BigRat& r) { return r.get_den(); }

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const BigRat& v) { return sgn(v); }

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }
inline bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

inline BigInt bi_abs(const BigInt& v) { return abs(v); }

inline BigInt bi_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact division; caller guarantees divisibility.
inline BigInt bi_divexact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool bi_divisible(const BigInt& a, const BigInt& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline BigInt bi_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt bi_pow2(unsigned long e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

// Floor of the square root.
inline BigInt bi_isqrt(const BigInt& v) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline BigInt bi_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());  // result in [0, m)
    return r;
}

// Representative of a mod m in (-m/2, m/2].
inline BigInt bi_mod_symmetric(const BigInt& a, const BigInt& m) {
    BigInt r = bi_mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline BigRat rat_pow(const BigRat& base, long e) {
    if (e >= 0) {
        return make_rat(bi_pow(num(base), static_cast<unsigned long>(e)),
                        bi_pow(den(base), static_cast<unsigned long>(e)));
    }
    return make_rat(bi_pow(den(base), static_cast<unsigned long>(-e)),
                    bi_pow(num(base), static_cast<unsigned long>(-e)));
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace tbk
