#include "doctest.h"
#include "sqconf/grid_complex.hpp"

using namespace sqconf;

TEST_CASE("grid: cell counts") {
    CubicalComplex g11(1, 1);
    CHECK(g11.cell_count() == 9);
    CHECK(g11.cells_of_dim(0).size() == 4);
    CHECK(g11.cells_of_dim(1).size() == 4);
    CHECK(g11.cells_of_dim(2).size() == 1);

    CubicalComplex g22(2, 2);
    CHECK(g22.cell_count() == 25);
    CHECK(g22.cells_of_dim(0).size() == 9);
    CHECK(g22.cells_of_dim(1).size() == 12);
    CHECK(g22.cells_of_dim(2).size() == 4);

    // (2*6+1)^2 against exhaustive enumeration
    CubicalComplex g66(6, 6);
    CHECK(g66.cell_count() == 169);
    int64_t total = 0;
    for (int d = 0; d <= 2; ++d) total += static_cast<int64_t>(g66.cells_of_dim(d).size());
    CHECK(total == 169);
}

TEST_CASE("grid: invalid dimensions") {
    CHECK_THROWS_AS(CubicalComplex(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(CubicalComplex(2, -1), std::invalid_argument);
}

TEST_CASE("grid: face counts and boundary squares to zero") {
    for (int w = 1; w <= 8; ++w)
        for (int h = 1; h <= 8; ++h) {
            CubicalComplex g(w, h);
            for (int32_t id = 0; id < g.cell_count(); ++id) {
                int d = g.dim(id);
                CHECK(static_cast<int>(g.faces(id).size()) == 2 * d);
            }
            auto cc = g.chain_complex();
            CHECK(cc.boundary_squares_to_zero());
            CHECK(cc.euler_characteristic() == 1);
        }
}

TEST_CASE("grid: closure disjointness") {
    CubicalComplex g(2, 2);
    auto v = [&](int x, int y) { return GridCell{x, AxisKind::point, y, AxisKind::point}; };
    auto hx = [&](int x, int y) { return GridCell{x, AxisKind::interval, y, AxisKind::point}; };

    // distinct vertices are always disjoint
    CHECK(closures_disjoint(v(0, 0), v(1, 0)));
    // a vertex inside an edge closure is not
    CHECK_FALSE(closures_disjoint(v(0, 0), hx(0, 0)));
    CHECK_FALSE(closures_disjoint(v(1, 0), hx(0, 0)));
    // parallel edges two rows apart are disjoint
    CHECK(closures_disjoint(hx(0, 0), hx(0, 2)));
    // sharing an endpoint is not disjoint
    CHECK_FALSE(closures_disjoint(hx(0, 0), hx(1, 0)));

    // symmetric and irreflexive on all cells
    for (int32_t a = 0; a < g.cell_count(); ++a) {
        CHECK_FALSE(g.closures_disjoint_ids(a, a));
        for (int32_t b = 0; b < g.cell_count(); ++b)
            CHECK(g.closures_disjoint_ids(a, b) == g.closures_disjoint_ids(b, a));
    }
}

TEST_CASE("grid: id round trip") {
    CubicalComplex g(3, 2);
    for (int32_t id = 0; id < g.cell_count(); ++id) CHECK(g.id_of(g.cell(id)) == id);
}
