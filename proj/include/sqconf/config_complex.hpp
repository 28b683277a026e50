#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sqconf/chain_complex.hpp"
#include "sqconf/grid_complex.hpp"

namespace sqconf {

struct SizeBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * The discrete configuration complex of n labeled squares on a rectangle
 * lattice: cells are ordered n-tuples of ambient cells with pairwise
 * disjoint closures, and the boundary is induced coordinatewise with
 * product signs.
 *
 * Cells are enumerated lexicographically on (dimension, part tuple), which
 * fixes the basis order bit-for-bit across runs. Construction may be
 * truncated at max_dim; homology is then valid up to degree max_dim - 1.
 *
 * Immutable after construction; concurrent reads are safe.
 */
class ConfigComplex {
public:
    struct Options {
        int max_dim = -1;                   // -1: all degrees (up to 2n)
        int64_t cell_budget = 50'000'000;   // abort above this many cells
    };

    static ConfigComplex build(const CubicalComplex& ambient, int n, Options opts);
    static ConfigComplex build(const CubicalComplex& ambient, int n) {
        return build(ambient, n, Options{});
    }

    const CubicalComplex& ambient() const { return *ambient_; }
    int n() const { return n_; }
    int max_dim() const { return max_dim_; }
    bool truncated() const { return max_dim_ < 2 * n_; }

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    int64_t cells_in_dim(int d) const {
        if (d < 0 || d > top_dim()) return 0;
        return static_cast<int64_t>(cells_[d].size()) / n_;
    }
    int64_t total_cells() const;
    std::span<const int32_t> parts(int d, int64_t index) const {
        return {cells_[d].data() + index * n_, static_cast<size_t>(n_)};
    }
    // Index of a cell among those of its dimension, or -1.
    int64_t find_cell(int d, std::span<const int32_t> parts) const;

    const ChainComplex& chain() const { return chain_; }

private:
    ConfigComplex() = default;
    const CubicalComplex* ambient_ = nullptr;
    int n_ = 0;
    int max_dim_ = 0;
    std::vector<std::vector<int32_t>> cells_;  // per dim, flattened n-tuples in lex order
    ChainComplex chain_;
};

}  // namespace sqconf
