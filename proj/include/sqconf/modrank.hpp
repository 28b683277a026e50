#pragma once

#include <cstdint>

#include "sqconf/sparse.hpp"

namespace sqconf {

// Rank of m over Z/p by sparse Gaussian elimination with Markowitz-style
// fill-minimizing pivot selection.
int64_t rank_mod_p(const CscMatrix& m, uint32_t p);

/**
 * Rank over Q, realized as the rank modulo two distinct large primes.
 *
 * A prime can only lower the rank, and two independent primes dropping on the
 * same matrix is not accepted silently: a mismatch throws. The primes are
 * drawn from kRankPrimes.
 */
int64_t rank_over_q(const CscMatrix& m);

}  // namespace sqconf
