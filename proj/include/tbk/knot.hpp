#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbk {

// Raised on inputs outside the 2-bridge knot domain (even p, p < 3, shared
// factor); maps to CLI exit code 2.
struct InvalidKnotInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical 2-bridge normal form: p odd >= 3, q odd, 0 < q < p, coprime,
// minimal in its equivalence class q ~ ±q^(±1) (mod 2p).
struct TwoBridgeForm {
    long p = 0;
    long q = 0;
    bool mirrored = false;  // canonical representative came from the mirror branch

    bool operator==(const TwoBridgeForm& o) const { return p == o.p && q == o.q; }
    bool operator<(const TwoBridgeForm& o) const { return p != o.p ? p < o.p : q < o.q; }
    std::string label() const { return std::to_string(p) + "_" + std::to_string(q); }
};

struct RileyLetter {
    int generator;  // 1 or 2
    int exponent;   // +1 or -1
};

// Word w in the relation w x1 w^-1 = x2: strictly alternating x1, x2, ...,
// length p-1, exponents eps_i = (-1)^floor(i*q/p).
struct RileyWord {
    TwoBridgeForm knot;
    std::vector<RileyLetter> letters;

    long exponent_sum() const {
        long e = 0;
        for (const auto& l : letters) e += l.exponent;
        return e;
    }
};

TwoBridgeForm canonicalize(long p, long q);

// Torus-knot exclusion: hyperbolic iff q != ±1 (mod p).
bool is_hyperbolic(const TwoBridgeForm& k);

RileyWord riley_word(const TwoBridgeForm& k);

// All canonical hyperbolic forms with p <= max_p, sorted by (p, q), one
// representative per mirror/inversion class.
std::vector<TwoBridgeForm> enumerate_census(long max_p);

// Odd coprime q in (0,p) with (p,q) hyperbolic, mirrors NOT deduplicated
// (used by the oracle cross-check command).
std::vector<long> hyperbolic_q_values(long p);

}  // namespace tbk
