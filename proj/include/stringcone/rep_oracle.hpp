#pragma once

#include "stringcone/inequalities.hpp"
#include "stringcone/rational.hpp"

namespace stringcone {

// Dimension of the irreducible highest-weight module, as the product over
// positive roots of (<lambda, root> + height) / height.
Int weyl_dimension(int rank, const Weight& lam);

// Same number counted combinatorially: triangular integer patterns with
// fixed top row (lam_j + ... + lam_rank) and interlacing consecutive rows.
// Independent of weyl_dimension by construction.
Int gt_pattern_count(int rank, const Weight& lam);

}  // namespace stringcone
