#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace sqconf {

/**
 * A wheel W(i_1,...,i_m): label i_2 orbits i_1, the pair is orbited by i_3,
 * and so on. Homological degree m-1. Canonical form puts the minimal label
 * first; the remaining spokes are an arbitrary ordering.
 */
struct Wheel {
    std::vector<int> spokes;

    int size() const { return static_cast<int>(spokes.size()); }
    int degree() const { return size() - 1; }
    bool canonical() const;
    auto operator<=>(const Wheel&) const = default;
};

/**
 * A product of wheels in canonical order: factor sizes weakly decreasing,
 * ties broken by strictly decreasing first spoke. The factors' spokes
 * partition the label set; degree is the sum of the factor degrees.
 */
struct WheelProduct {
    std::vector<Wheel> factors;

    int degree() const;
    bool canonical() const;
    auto operator<=>(const WheelProduct&) const = default;
};

// Integer combination of canonical wheel products.
using WheelPoly = std::map<WheelProduct, long long>;

// Binary bracket tree over wheels.
struct BracketExpr {
    // leaf when wheel is set; otherwise internal with two children
    std::unique_ptr<BracketExpr> left, right;
    Wheel leaf;

    bool is_leaf() const { return !left; }
    static BracketExpr wheel(Wheel w);
    static BracketExpr bracket(BracketExpr a, BracketExpr b);
    BracketExpr clone() const;
    int degree() const;
    std::vector<int> labels() const;
};

/**
 * All canonical wheel products on exactly the labels {1,...,n} of degree k,
 * in increasing lexicographic order. Empty n gives the empty product in
 * degree zero.
 */
std::vector<WheelProduct> enumerate_wheel_basis(int n, int k);

// |enumerate_wheel_basis(n, k)| in closed form: the elementary symmetric
// polynomial e_k(1, 2, ..., n-1).
uint64_t betti_fn(int n, int k);

/**
 * Rewrites a bracket tree of wheels into the canonical wheel basis using
 * the graded antisymmetry and Jacobi relations. The result is a combination
 * of single wheels on the union of the leaf labels.
 *
 * Throws std::invalid_argument when leaf label sets overlap.
 */
WheelPoly bracket_to_wheels(const BracketExpr& e);

// Canonical sorting of a list of wheels into a WheelProduct, accumulating
// the Koszul sign (-1)^{(n-1)(m-1)} per transposition of adjacent factors.
std::pair<WheelProduct, int> canonical_product(std::vector<Wheel> factors);

// Sub-basis of enumerate_wheel_basis(n, k) whose every factor has size >= r+1.
std::vector<WheelProduct> ar_reduced_basis(int n, int k, int r);

/**
 * Closed-form rank of the E^r-page entry (p, q) of the augmented right-most
 * cover spectral sequence for n points in the plane, r >= 2:
 * binomial(n, p+1) * |A_{r-1}-reduced basis on n-p-1 labels in degree q|
 * * rank of the degree-filtered top homology of injective words on p+1
 * letters.
 */
uint64_t er_entry_rank(int n, int p, int q, int r);

}  // namespace sqconf
