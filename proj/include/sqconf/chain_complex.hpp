#pragma once

#include <cstdint>
#include <vector>

#include "sqconf/sparse.hpp"

namespace sqconf {

/**
 * A finite chain complex of free abelian groups.
 *
 * dims[k] is the number of basis cells in degree k, boundary[k] the map
 * C_k -> C_{k-1}. boundary[0] has zero rows. Degrees above the top are
 * implicitly zero.
 */
struct ChainComplex {
    std::vector<int64_t> dims;
    std::vector<CscMatrix> boundary;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int64_t total_cells() const {
        int64_t t = 0;
        for (auto d : dims) t += d;
        return t;
    }
    int64_t euler_characteristic() const {
        int64_t chi = 0;
        for (size_t k = 0; k < dims.size(); ++k) chi += (k % 2 ? -dims[k] : dims[k]);
        return chi;
    }
    // d o d == 0 in every degree.
    bool boundary_squares_to_zero() const {
        for (size_t k = 2; k < boundary.size(); ++k)
            if (!compose_is_zero(boundary[k - 1], boundary[k])) return false;
        return true;
    }
};

}  // namespace sqconf
