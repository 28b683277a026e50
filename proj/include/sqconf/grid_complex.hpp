#pragma once

#include <cstdint>
#include <vector>

#include "sqconf/chain_complex.hpp"

namespace sqconf {

enum class AxisKind : uint8_t { point = 0, interval = 1 };

/**
 * One cell of the rectangle lattice: a product of a point or unit interval
 * in each axis. Intervals span [lo, lo+1].
 */
struct GridCell {
    int32_t x_lo = 0;
    AxisKind x_kind = AxisKind::point;
    int32_t y_lo = 0;
    AxisKind y_kind = AxisKind::point;

    int dimension() const {
        return (x_kind == AxisKind::interval ? 1 : 0) + (y_kind == AxisKind::interval ? 1 : 0);
    }
    int32_t x_hi() const { return x_lo + (x_kind == AxisKind::interval ? 1 : 0); }
    int32_t y_hi() const { return y_lo + (y_kind == AxisKind::interval ? 1 : 0); }
};

// Closed cells share no point iff their extents are disjoint in some axis.
bool closures_disjoint(const GridCell& a, const GridCell& b);

/**
 * The cube complex of a width x height rectangle of unit squares: vertices,
 * edges and squares of the integer lattice, with oriented incidences.
 *
 * Cells are indexed densely by the half-integer lattice: a cell occupies
 * (u, v) with u = 2*x_lo + [x interval], v = 2*y_lo + [y interval], giving
 * id = v*(2W+1) + u. Boundary signs follow the tensor convention for
 * products, with 1-cells oriented from lower to higher coordinate:
 * d(I x J) = (dI) x J + (-1)^{dim I} I x (dJ).
 *
 * Immutable after construction.
 */
class CubicalComplex {
public:
    struct FaceRef {
        int32_t id;
        int8_t sign;
    };

    CubicalComplex(int32_t width_units, int32_t height_units);

    int32_t width_units() const { return width_; }
    int32_t height_units() const { return height_; }
    int64_t cell_count() const { return static_cast<int64_t>(ux_) * uy_; }

    GridCell cell(int32_t id) const;
    int32_t id_of(const GridCell& c) const;
    int32_t vertex_id(int32_t x, int32_t y) const { return (2 * y) * ux_ + 2 * x; }
    int dim(int32_t id) const;

    std::vector<FaceRef> faces(int32_t id) const;
    bool closures_disjoint_ids(int32_t a, int32_t b) const {
        return closures_disjoint(cell(a), cell(b));
    }

    std::vector<int32_t> cells_of_dim(int d) const;
    // The full complex as an explicit chain complex (cells in id order per degree).
    ChainComplex chain_complex() const;

private:
    int32_t width_, height_;
    int32_t ux_, uy_;  // 2W+1, 2H+1
};

}  // namespace sqconf
