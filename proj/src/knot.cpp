#include "tbk/knot.hpp"

#include <algorithm>
#include <numeric>

namespace tbk {

namespace {

long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of q mod m for gcd(q, m) = 1.
long mod_inverse(long q, long m) {
    long r0 = m, r1 = mod_pos(q, m), s0 = 0, s1 = 1;
    while (r1) {
        long k = r0 / r1;
        long r2 = r0 - k * r1, s2 = s0 - k * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return mod_pos(s0, m);
}

// Representative of c (odd, in (0,2p)) inside (0,p): c itself or 2p-c, the
// latter being the mirror branch.
std::pair<long, bool> fold_into_range(long c, long p) {
    if (c < p) return {c, false};
    return {2 * p - c, true};
}

// All odd representatives in (0,p) of ±q^(±1) mod 2p, with mirror flags.
std::vector<std::pair<long, bool>> equivalence_reps(long p, long q) {
    long m = 2 * p;
    long qi = mod_inverse(q, m);
    std::vector<std::pair<long, bool>> reps;
    for (long c : {mod_pos(q, m), qi}) {
        auto direct = fold_into_range(c, p);
        reps.push_back(direct);
        auto mirror = fold_into_range(m - c, p);
        mirror.second = true;
        reps.push_back(mirror);
    }
    return reps;
}

}  // namespace

TwoBridgeForm canonicalize(long p, long q) {
    if (p < 3) throw InvalidKnotInput("p must be at least 3");
    if (p % 2 == 0) throw InvalidKnotInput("even p: 2-bridge link, not a knot");
    if (gcd_long(p, q) != 1) throw InvalidKnotInput("p and q must be coprime");

    long m = 2 * p;
    long c = mod_pos(q, m);
    bool parity_lift = false;
    if (c % 2 == 0) {
        // Off the odd normal form; q+p has the same residue mod p (same double
        // branched cover), differing by at most a mirror.
        c = mod_pos(c + p, m);
        parity_lift = true;
    }
    auto [r, mirrored] = fold_into_range(c, p);
    return {p, r, mirrored || parity_lift};
}

bool is_hyperbolic(const TwoBridgeForm& k) {
    long r = mod_pos(k.q, k.p);
    return r != 1 && r != mod_pos(-1, k.p);
}

RileyWord riley_word(const TwoBridgeForm& k) {
    RileyWord w;
    w.knot = k;
    w.letters.reserve(static_cast<std::size_t>(k.p - 1));
    for (long i = 1; i <= k.p - 1; ++i) {
        long flo = (i * k.q) / k.p;
        int eps = (flo % 2 == 0) ? 1 : -1;
        int gen = (i % 2 == 1) ? 1 : 2;
        w.letters.push_back({gen, eps});
    }
    return w;
}

std::vector<TwoBridgeForm> enumerate_census(long max_p) {
    if (max_p < 3) throw InvalidKnotInput("max_p must be at least 3");
    std::vector<TwoBridgeForm> out;
    for (long p = 3; p <= max_p; p += 2) {
        for (long q = 3; q < p; q += 2) {
            if (gcd_long(p, q) != 1) continue;
            long best = q;
            for (auto& [r, mir] : equivalence_reps(p, q)) best = std::min(best, r);
            if (best != q) continue;  // another representative is canonical
            TwoBridgeForm k{p, q, false};
            if (!is_hyperbolic(k)) continue;
            out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> hyperbolic_q_values(long p) {
    if (p < 3 || p % 2 == 0) throw InvalidKnotInput("p must be odd and at least 3");
    std::vector<long> out;
    for (long q = 3; q < p; q += 2) {
        if (gcd_long(p, q) != 1) continue;
        if (!is_hyperbolic(TwoBridgeForm{p, q, false})) continue;
        out.push_back(q);
    }
    return out;
}

}  // namespace tbk
