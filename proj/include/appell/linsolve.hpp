// Fraction-free linear algebra over Q(t): rows cleared to primitive
// polynomial vectors, elimination with per-pivot content stripping.
#pragma once

#include <vector>

#include "appell/ratfunc.hpp"

namespace appell {

// Clears denominators and content: the returned polynomial row spans the same
// Q(t)-line as the input.
std::vector<UniPoly> clear_row(const std::vector<RatFunc>& row);

// Left-kernel combinations of `tagged` rows modulo the span of `gens`:
// each returned vector c (length = tagged.size()) satisfies
//   sum_i c[i] * tagged[i]  ∈  span_{Q(t)}(gens).
// The returned vectors span all such combinations. Echelonized so that the
// highest nonzero index of each vector is distinct and minimal.
std::vector<std::vector<UniPoly>> kernel_modulo(const std::vector<std::vector<RatFunc>>& tagged,
                                                const std::vector<std::vector<RatFunc>>& gens);

}  // namespace appell
