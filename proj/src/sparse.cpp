#include "sqconf/sparse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sqconf {

void SparseIntMatrix::normalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (auto& e : entries) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
            out.back().value += e.value;
        } else {
            out.push_back(std::move(e));
        }
    }
    entries.clear();
    for (auto& e : out)
        if (e.value != 0) entries.push_back(std::move(e));
}

bool compose_is_zero(const CscMatrix& a, const CscMatrix& b) {
    if (a.cols() != b.rows) throw std::invalid_argument("compose_is_zero: shape mismatch");
    // Accumulate a * (column of b) for each column; everything must cancel.
    std::vector<std::pair<int32_t, long long>> acc;
    for (int64_t j = 0; j < b.cols(); ++j) {
        acc.clear();
        for (int64_t t = b.col_ptr[j]; t < b.col_ptr[j + 1]; ++t) {
            int32_t mid = b.row_idx[t];
            long long s = b.value[t];
            for (int64_t u = a.col_ptr[mid]; u < a.col_ptr[mid + 1]; ++u)
                acc.emplace_back(a.row_idx[u], s * a.value[u]);
        }
        std::sort(acc.begin(), acc.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        size_t i = 0;
        while (i < acc.size()) {
            long long sum = 0;
            size_t k = i;
            while (k < acc.size() && acc[k].first == acc[i].first) sum += acc[k++].second;
            if (sum != 0) return false;
            i = k;
        }
    }
    return true;
}

SparseIntMatrix to_sparse_int(const CscMatrix& m) {
    SparseIntMatrix out;
    out.rows = m.rows;
    out.cols = m.cols();
    for (int64_t j = 0; j < m.cols(); ++j)
        for (int64_t t = m.col_ptr[j]; t < m.col_ptr[j + 1]; ++t)
            out.add(m.row_idx[t], static_cast<int32_t>(j), mpz_class(static_cast<int>(m.value[t])));
    out.normalize();
    return out;
}

}  // namespace sqconf
