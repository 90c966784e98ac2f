#include "tbk/mat2.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tbk {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for the full 64-bit range
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> sorted_divisors_u64(u64 n) {
    std::map<u64, int> f;
    factor_rec(n, f);
    std::vector<u64> divs{1};
    for (auto& [p, e] : f) {
        std::size_t count = divs.size();
        u64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Mat2F2q mat2_pow(Mat2F2q base, u64 e, const PolyF2& mod) {
    Mat2F2q r = mat2_identity(mod);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::uint64_t matrix_order(const Mat2F2q& m, const PolyF2& modulus) {
    if (m.det() != F2QuotElem::one(modulus))
        throw std::invalid_argument("matrix_order: determinant must be 1");
    Mat2F2q id = mat2_identity(modulus);
    if (m == id) return 1;
    if (m * m == id) return 2;

    int s = modulus.degree();
    if (s <= 0 || s > 62) throw std::invalid_argument("matrix_order: modulus degree out of range");
    u64 q = u64{1} << s;
    std::vector<u64> candidates;
    for (u64 base : {q - 1, q + 1}) {
        for (u64 d : sorted_divisors_u64(base)) {
            candidates.push_back(d);
            candidates.push_back(2 * d);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (u64 n : candidates) {
        if (n <= 2) continue;
        if (mat2_pow(m, n, modulus) == id) return n;
    }
    throw std::runtime_error("matrix_order: bound exceeded (element not semisimple of expected order)");
}

}  // namespace tbk
