#include "doctest.h"
#include "sqconf/config_complex.hpp"
#include "sqconf/homology.hpp"
#include "sqconf/wheel_algebra.hpp"

using namespace sqconf;

TEST_CASE("config: two squares on the unit-square complex") {
    CubicalComplex g(1, 1);
    auto cx = ConfigComplex::build(g, 2);
    CHECK(cx.cells_in_dim(0) == 12);
    CHECK(cx.cells_in_dim(1) == 16);
    CHECK(cx.cells_in_dim(2) == 4);
    CHECK(cx.total_cells() == 32);
    CHECK(cx.chain().euler_characteristic() == 0);
    CHECK(cx.chain().boundary_squares_to_zero());
}

TEST_CASE("config: n = 1 reproduces the ambient complex") {
    CubicalComplex g(3, 2);
    auto cx = ConfigComplex::build(g, 1);
    auto ambient = g.chain_complex();
    REQUIRE(cx.chain().dims.size() == ambient.dims.size());
    for (size_t d = 0; d < ambient.dims.size(); ++d) CHECK(cx.chain().dims[d] == ambient.dims[d]);
    auto b1 = betti_vector(cx.chain());
    CHECK(b1[0] == 1);
    CHECK(b1[1] == 0);
}

TEST_CASE("config: pigeonhole gives the empty complex, not an error") {
    CubicalComplex g(1, 1);
    auto cx = ConfigComplex::build(g, 5);  // only 4 vertices available
    CHECK(cx.total_cells() == 0);
}

TEST_CASE("config: boundary squares to zero across shapes") {
    for (auto [w, h, n] : {std::tuple{1, 1, 2}, {2, 1, 2}, {2, 2, 2}, {2, 2, 3}, {3, 2, 3}}) {
        auto cx = ConfigComplex::build(CubicalComplex(w, h), n);
        CHECK(cx.chain().boundary_squares_to_zero());
    }
}

TEST_CASE("config: DF_2 of the 2x2-unit rectangle is a circle") {
    // min{w,h} >= n: homotopy equivalent to the two-point configuration space
    auto cx = ConfigComplex::build(CubicalComplex(1, 1), 2);
    auto b = betti_vector(cx.chain());
    REQUIRE(b.size() >= 2);
    CHECK(b[0] == 1);
    CHECK(b[1] == 1);
    for (size_t k = 2; k < b.size(); ++k) CHECK(b[k] == 0);
    auto sums = betti_numbers(cx.chain());
    for (const auto& s : sums) CHECK(s.torsion.empty());
}

TEST_CASE("config: stable-range betti match the point-configuration counts") {
    // min{w,h} >= n cases, all degrees
    for (int n = 2; n <= 3; ++n) {
        for (int wh = n; wh <= 4; ++wh) {
            auto cx = ConfigComplex::build(CubicalComplex(wh - 1, wh - 1), n);
            auto b = betti_vector(cx.chain(), Coefficients::Q());
            for (int k = 0; k < static_cast<int>(b.size()); ++k)
                CHECK(b[k] == static_cast<int64_t>(betti_fn(n, k)));
        }
    }
}

TEST_CASE("config: truncated build matches the full build in low degrees") {
    CubicalComplex g(2, 2);
    auto full = ConfigComplex::build(g, 2);
    ConfigComplex::Options opts;
    opts.max_dim = 2;
    auto cut = ConfigComplex::build(g, 2, opts);
    CHECK(cut.truncated());
    for (int d = 0; d <= 2; ++d) CHECK(cut.cells_in_dim(d) == full.cells_in_dim(d));
    auto bf = betti_vector(full.chain());
    auto bc = betti_vector(cut.chain());
    // degrees strictly below max_dim are unaffected by the truncation
    CHECK(bc[0] == bf[0]);
    CHECK(bc[1] == bf[1]);
}

TEST_CASE("config: cell budget aborts loudly") {
    ConfigComplex::Options opts;
    opts.cell_budget = 10;
    CHECK_THROWS_AS(ConfigComplex::build(CubicalComplex(2, 2), 2, opts), SizeBudgetError);
}
