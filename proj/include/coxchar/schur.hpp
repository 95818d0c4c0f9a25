#pragma once

#include <vector>

#include "coxchar/matrix.hpp"
#include "coxchar/weights.hpp"

namespace coxchar {

// Exact value of an irreducible GL_N character at a list of eigenvalues.
using CharacterValue = CycloNumber;

// det of the N x N matrix with entry (r, c) = xs_c ^ (lambda + delta)_r.
// All exponents must be non-negative; callers det-shift first.
CycloNumber weyl_numerator(const Weight& lambda, const std::vector<CycloNumber>& xs);

// Vandermonde product prod_{r<s} (xs_r - xs_s), the same normalization as
// weyl_numerator at the zero weight.
CycloNumber weyl_denominator(const std::vector<CycloNumber>& xs);

// h_0..h_maxdeg of xs by expanding prod_i 1/(1 - xs_i u) up to degree maxdeg.
std::vector<CycloNumber> homogeneous_series(const std::vector<CycloNumber>& xs, long maxdeg);

// Bialternant engine: weyl_numerator / weyl_denominator, with the det-shift
// normalization for negative entries (shift by s = min(lambda_N, 0), multiply
// the result by (prod xs)^s). Requires pairwise distinct xs.
CharacterValue char_bialternant(const Weight& lambda, const std::vector<CycloNumber>& xs);

// Jacobi-Trudi engine: det(h_{lambda_r - r + c}); valid at repeated
// eigenvalues. Same det-shift normalization.
CharacterValue char_jacobi_trudi(const Weight& lambda, const std::vector<CycloNumber>& xs);

// Dispatcher: bialternant at regular xs, Jacobi-Trudi otherwise.
CharacterValue character_at(const Weight& lambda, const std::vector<CycloNumber>& xs);
CharacterValue character_at(const Weight& lambda, const std::vector<Rational>& xs);

bool pairwise_distinct(const std::vector<CycloNumber>& xs);

}  // namespace coxchar
