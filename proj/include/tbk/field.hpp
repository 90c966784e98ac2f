#pragma once

#include <string>
#include <vector>

#include "tbk/poly.hpp"

namespace tbk {

enum class SqrtStatus { CertifiedAbsent, PresentWitness, Undetermined };

std::string to_string(SqrtStatus s);

// Tri-state subfield certificate. PresentWitness carries z with z^2 = n
// verified exactly in Q[y]/(f); CertifiedAbsent carries the reason; a failed
// bounded search is honestly Undetermined (never a false negative claim).
struct SqrtResult {
    SqrtStatus status = SqrtStatus::Undetermined;
    PolyQ witness;
    std::string certificate;
};

struct SqrtOptions {
    BigInt denominator_bound = bi_pow2(64);
    long max_precision_bits = 4096;
    long start_precision_bits = 256;
    // At most this many sign patterns per precision level; beyond it the
    // search reports Undetermined.
    std::uint64_t pattern_budget = 4096;
    // Witness search is attempted only up to this field degree.
    int max_numeric_degree = 12;
};

// Whether sqrt(n) lies in Q[y]/(f); f irreducible, n squarefree. Ramification
// filter first (a prime ramified in Q(sqrt n) but unramified in the field
// certifies absence), then degree parity and, for n < 0, an exact real-root
// certificate; finally the numeric root-guess: high-precision roots, a
// Vandermonde solve per admissible sign pattern, rational reconstruction with
// bounded denominators, and exact verification of z^2 = n.
SqrtResult sqrt_in_field(const PolyZ& f, const BigInt& n, const SqrtOptions& opt = {});

// Residue degrees of the primes over 2: degrees of the irreducible factors
// of f mod 2, ascending. Requires f squarefree mod 2 (all ramification
// exponents 1); throws ContradictionEvent otherwise.
std::vector<int> two_splitting(const PolyZ& f);

// Q(i) subfield exclusion: odd disc(f) certifies absence (disc of Q(i) is -4
// and the field discriminant divides disc(f)); otherwise falls back to
// sqrt_in_field(f, -1).
SqrtResult qi_exclusion(const PolyZ& f, const SqrtOptions& opt = {});

// Degree-2 factors with negative discriminant (imaginary quadratic trace
// fields) are the arithmetic candidates.
bool arithmetic_candidate(const PolyZ& f);

struct FieldInvariants {
    PolyZ factor;
    int degree = 0;
    BigInt disc;
    bool disc_odd = false;
    std::vector<int> two_split;
    SqrtResult qi;
    SqrtResult sqrtm3;
    bool arithmetic = false;
    int real_roots = 0;
    bool geometric_candidate = false;  // has at least one non-real root
};

FieldInvariants compute_field_invariants(const PolyZ& factor, const SqrtOptions& opt = {});

}  // namespace tbk
