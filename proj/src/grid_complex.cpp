#include "sqconf/grid_complex.hpp"

#include <stdexcept>

namespace sqconf {

bool closures_disjoint(const GridCell& a, const GridCell& b) {
    bool x_disjoint = a.x_hi() < b.x_lo || b.x_hi() < a.x_lo;
    bool y_disjoint = a.y_hi() < b.y_lo || b.y_hi() < a.y_lo;
    return x_disjoint || y_disjoint;
}

CubicalComplex::CubicalComplex(int32_t width_units, int32_t height_units)
    : width_(width_units), height_(height_units),
      ux_(2 * width_units + 1), uy_(2 * height_units + 1) {
    if (width_units < 1 || height_units < 1)
        throw std::invalid_argument("CubicalComplex: dimensions must be positive");
}

GridCell CubicalComplex::cell(int32_t id) const {
    int32_t u = id % ux_;
    int32_t v = id / ux_;
    GridCell c;
    c.x_lo = u / 2;
    c.x_kind = (u % 2) ? AxisKind::interval : AxisKind::point;
    c.y_lo = v / 2;
    c.y_kind = (v % 2) ? AxisKind::interval : AxisKind::point;
    return c;
}

int32_t CubicalComplex::id_of(const GridCell& c) const {
    int32_t u = 2 * c.x_lo + (c.x_kind == AxisKind::interval ? 1 : 0);
    int32_t v = 2 * c.y_lo + (c.y_kind == AxisKind::interval ? 1 : 0);
    if (u < 0 || u >= ux_ || v < 0 || v >= uy_)
        throw std::invalid_argument("CubicalComplex: cell outside rectangle");
    return v * ux_ + u;
}

int CubicalComplex::dim(int32_t id) const {
    return (id % ux_) % 2 + (id / ux_) % 2;
}

std::vector<CubicalComplex::FaceRef> CubicalComplex::faces(int32_t id) const {
    GridCell c = cell(id);
    std::vector<FaceRef> out;
    bool xi = c.x_kind == AxisKind::interval;
    bool yi = c.y_kind == AxisKind::interval;
    if (xi) {
        GridCell hi = c, lo = c;
        hi.x_kind = lo.x_kind = AxisKind::point;
        hi.x_lo = c.x_lo + 1;
        out.push_back({id_of(hi), 1});
        out.push_back({id_of(lo), -1});
    }
    if (yi) {
        // Second factor picks up the sign of the first factor's dimension.
        int8_t s = xi ? -1 : 1;
        GridCell hi = c, lo = c;
        hi.y_kind = lo.y_kind = AxisKind::point;
        hi.y_lo = c.y_lo + 1;
        out.push_back({id_of(hi), s});
        out.push_back({id_of(lo), static_cast<int8_t>(-s)});
    }
    return out;
}

std::vector<int32_t> CubicalComplex::cells_of_dim(int d) const {
    std::vector<int32_t> out;
    for (int32_t id = 0; id < cell_count(); ++id)
        if (dim(id) == d) out.push_back(id);
    return out;
}

ChainComplex CubicalComplex::chain_complex() const {
    ChainComplex cc;
    std::vector<std::vector<int32_t>> by_dim(3);
    std::vector<int32_t> local(cell_count(), -1);
    for (int d = 0; d <= 2; ++d) {
        by_dim[d] = cells_of_dim(d);
        for (size_t i = 0; i < by_dim[d].size(); ++i) local[by_dim[d][i]] = static_cast<int32_t>(i);
        cc.dims.push_back(static_cast<int64_t>(by_dim[d].size()));
    }
    for (int d = 0; d <= 2; ++d) {
        CscMatrix b;
        b.rows = d == 0 ? 0 : cc.dims[d - 1];
        for (int32_t id : by_dim[d]) {
            if (d > 0)
                for (const auto& f : faces(id)) b.push_entry(local[f.id], f.sign);
            b.close_column();
        }
        cc.boundary.push_back(std::move(b));
    }
    return cc;
}

}  // namespace sqconf
