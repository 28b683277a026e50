#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sqconf/chain_complex.hpp"

namespace sqconf {

struct Coefficients {
    enum Kind { integers, rationals, prime } kind = integers;
    uint32_t p = 0;  // only for kind == prime

    static Coefficients Z() { return {integers, 0}; }
    static Coefficients Q() { return {rationals, 0}; }
    static Coefficients Fp(uint32_t p) { return {prime, p}; }
};

struct HomologySummary {
    int degree = 0;
    int64_t betti = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, dividing in order
    bool betti_only = false;         // set when torsion was skipped by the size threshold
};

struct HomologyOptions {
    // Smith forms are only attempted on boundary matrices whose larger side
    // is at most this; beyond it integer coefficients degrade to field ranks
    // and the summaries are flagged betti_only.
    int64_t snf_threshold = 20000;
};

/**
 * Betti numbers (and torsion over the integers) of a chain complex.
 *
 * Throws std::runtime_error if the boundary does not square to zero.
 * Degrees above the stored top are zero and not reported.
 */
std::vector<HomologySummary> betti_numbers(const ChainComplex& cc,
                                           Coefficients coeff = Coefficients::Z(),
                                           const HomologyOptions& opts = {});

// Convenience: just the betti vector.
std::vector<int64_t> betti_vector(const ChainComplex& cc,
                                  Coefficients coeff = Coefficients::Z(),
                                  const HomologyOptions& opts = {});

}  // namespace sqconf
