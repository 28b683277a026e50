#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sqconf {

/**
 * Exact integer matrix stored as (row, col, value) triples.
 *
 * Invariants after normalize(): entries sorted by (row, col), no duplicate
 * positions, no stored zeros. Used for Smith normal form and anywhere exact
 * values matter; the compact CscMatrix below is used for the large boundary
 * matrices whose entries are +-1.
 */
struct SparseIntMatrix {
    int64_t rows = 0;
    int64_t cols = 0;
    struct Entry {
        int32_t row;
        int32_t col;
        mpz_class value;
    };
    std::vector<Entry> entries;

    void add(int32_t r, int32_t c, const mpz_class& v) { entries.push_back({r, c, v}); }
    // Sorts, merges duplicates, and drops zeros.
    void normalize();
    int64_t nnz() const { return static_cast<int64_t>(entries.size()); }
};

// Column-major matrix with small signed entries, one contiguous buffer.
struct CscMatrix {
    int64_t rows = 0;
    std::vector<int64_t> col_ptr{0};
    std::vector<int32_t> row_idx;
    std::vector<int8_t> value;

    int64_t cols() const { return static_cast<int64_t>(col_ptr.size()) - 1; }
    int64_t nnz() const { return static_cast<int64_t>(row_idx.size()); }
    void push_entry(int32_t r, int8_t v) {
        row_idx.push_back(r);
        value.push_back(v);
    }
    void close_column() { col_ptr.push_back(static_cast<int64_t>(row_idx.size())); }
};

// True iff a(b(x)) = 0 for all columns x, i.e. the composite matrix product
// a*b vanishes. a maps the row space of b onward: a.cols() == b.rows.
bool compose_is_zero(const CscMatrix& a, const CscMatrix& b);

SparseIntMatrix to_sparse_int(const CscMatrix& m);

}  // namespace sqconf
