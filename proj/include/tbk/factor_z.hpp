#pragma once

#include <cstdint>
#include <vector>

#include "tbk/poly.hpp"

namespace tbk {

struct FactorZOptions {
    // Abort recombination after this many candidate subset tests.
    std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

// Factors a squarefree (over Q) integer polynomial into irreducible primitive
// factors with positive leading coefficients, sorted by degree then
// coefficient order. Product of the factors equals primitive_part(f).
// Classical Zassenhaus: distinct-degree factorization modulo a good odd
// prime, Hensel lifting to past the Mignotte bound, subset recombination.
std::vector<PolyZ> factor_z(const PolyZ& f, const FactorZOptions& opt = {});

bool is_irreducible_z(const PolyZ& f);

}  // namespace tbk
