#pragma once

#include <vector>

#include "tbk/polyf2.hpp"

namespace tbk {

struct F2Factor {
    PolyF2 poly;
    int multiplicity;
};

// Complete factorization over F2 into irreducible factors with
// multiplicities, sorted by degree then coefficient order. The product of
// poly^multiplicity over the list reconstructs the input exactly.
std::vector<F2Factor> factor_f2(const PolyF2& f);

bool is_irreducible_f2(const PolyF2& f);

}  // namespace tbk
