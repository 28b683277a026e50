#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqconf/chain_complex.hpp"

namespace sqconf {

// A word with pairwise distinct letters. Letters are positive ints.
using Word = std::vector<int>;

/**
 * Integer linear combination of injective words. Homogeneous polynomials
 * (all words the same length) are the ones the bracket and the bases use;
 * boundaries of length-1 words produce the empty word.
 */
struct WordPoly {
    std::map<Word, long long> terms;

    bool zero() const { return terms.empty(); }
    // Length of the words when homogeneous; -1 when zero, throws otherwise.
    int degree() const;
    void add_term(const Word& w, long long c);
    WordPoly& operator+=(const WordPoly& o);
    WordPoly& operator-=(const WordPoly& o);
    WordPoly operator*(long long c) const;
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    bool operator==(const WordPoly&) const = default;
};

WordPoly word_poly(const Word& w);

// Concatenation product, extended bilinearly. Letter sets must be disjoint
// termwise or the concatenations would not be injective.
WordPoly concat(const WordPoly& a, const WordPoly& b);

// Alternating sum of single-letter deletions; a length-1 word maps to the
// empty word (the augmentation).
WordPoly word_boundary(const Word& w);
WordPoly word_boundary(const WordPoly& p);

// [A,B] = AB - (-1)^{|A||B|} BA on homogeneous polynomials with disjoint
// letter sets; throws std::invalid_argument otherwise.
WordPoly lie_bracket(const WordPoly& a, const WordPoly& b);

/**
 * A left-normed bracket [[...[[a, t_1], t_2]...], t_k] anchored at the
 * minimal letter of its block, with its word expansion.
 */
struct LieBasisElement {
    int anchor = 0;
    std::vector<int> tail;
    WordPoly expansion;
};

// The (|S|-1)! left-normed brackets anchored at min(S), one per ordering of
// S minus its minimum. Empty for |S| <= 1.
std::vector<LieBasisElement> reutenauer_basis(std::vector<int> S);

/**
 * One factor of a product basis element: a singleton letter (empty tail) or
 * a left-normed bracket over its block.
 */
struct BasisFactor {
    std::vector<int> block;  // sorted
    std::vector<int> tail;   // bracket ordering; empty for singletons

    auto operator<=>(const BasisFactor&) const = default;
};

struct BasisProduct {
    std::vector<BasisFactor> factors;  // in the frozen order on B
    WordPoly poly;
};

/**
 * Product basis for the free abelian group on injective words on the letter
 * set T (length |T| words): products of Reutenauer elements and singletons
 * over all set partitions of T, factors multiplied in the frozen total
 * order (larger blocks first, then lexicographically smaller letter set,
 * then bracket ordering).
 */
std::vector<BasisProduct> pi_basis(const std::vector<int>& T);

/**
 * Basis of the top homology of the complex of injective words on m letters
 * (r = 2), or of its degree-r-filtered subgroup: products of Reutenauer
 * elements over partitions of {1,...,m} into blocks of size >= r. Every
 * element is a cycle.
 */
std::vector<BasisProduct> top_homology_basis(int m, int r);

/**
 * The augmented chain complex of injective words on n letters, reindexed so
 * degree k holds the words of length k (degree 0 is the empty word). Its
 * degree-k homology is the reduced homology of the complex of injective
 * words in simplex dimension k-1.
 */
ChainComplex injective_words_complex(int n);

// One polynomial per line dumps: "coef*word +- ...", canonical term order.
std::string dump(const WordPoly& p);

}  // namespace sqconf
