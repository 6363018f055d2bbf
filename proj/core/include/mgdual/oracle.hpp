#pragma once

#include <cstddef>

#include "mgdual/ideal.hpp"
#include "mgdual/recipe.hpp"
#include "mgdual/subspace.hpp"

// Brute-force polynomial-side computations, kept independent of the dual
// space machinery so the two can check each other.

namespace mgdual {

/// I_m = sum_i R_{m - deg f_i} * f_i as a subspace of R_m (monomial coordinates).
Subspace oracle_piece(const GradedIdeal& ideal, const MultiDegree& m);
/// Degree-m piece of a recipe ideal: quotients by preimage of the
/// multiplication map, sums and intersections of pieces.
Subspace oracle_piece(const Recipe& recipe, const MultiDegree& m);

/// dim R_m - dim I_m.
std::size_t oracle_hilbert(const GradedIdeal& ideal, const MultiDegree& m);
std::size_t oracle_hilbert(const Recipe& recipe, const MultiDegree& m);

/// g lies in the span of the degree-m spanning set.
bool oracle_membership(const Polynomial& g, const GradedIdeal& ideal);
bool oracle_membership(const Polynomial& g, const Recipe& recipe);

}  // namespace mgdual
