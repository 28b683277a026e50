#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "sqconf/sparse.hpp"

namespace sqconf {

struct SnfResult {
    // Invariant factors d_1 | d_2 | ... | d_r, all positive (ones included).
    std::vector<mpz_class> factors;
    int64_t rank = 0;

    std::vector<mpz_class> torsion() const {
        std::vector<mpz_class> t;
        for (const auto& d : factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

/**
 * Smith normal form of an exact integer matrix.
 *
 * Pivoting is Markowitz-style: among candidate entries the one with the
 * smallest fill estimate (nnz(row)-1)*(nnz(col)-1) wins, with entries of
 * absolute value 1 strictly preferred. All arithmetic is arbitrary
 * precision, so there is no overflow regardless of intermediate growth.
 */
SnfResult smith_normal_form(const SparseIntMatrix& m);

}  // namespace sqconf
