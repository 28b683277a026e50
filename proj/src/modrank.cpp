#include "sqconf/modrank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "sqconf/zp.hpp"

namespace sqconf {

namespace {

using Col = std::vector<std::pair<int32_t, uint32_t>>;  // (row, value), sorted by row

// dst += factor * src over Z/p, both sorted by row. Rows newly introduced to
// dst are reported through `added`, rows removed through `removed`.
void axpy(const Zp& F, Col& dst, const Col& src, uint32_t factor,
          std::vector<int32_t>& added, std::vector<int32_t>& removed) {
    Col out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            uint32_t v = F.mul(src[j].second, factor);
            if (v) {
                out.emplace_back(src[j].first, v);
                added.push_back(src[j].first);
            }
            ++j;
        } else {
            uint32_t v = F.add(dst[i].second, F.mul(src[j].second, factor));
            if (v)
                out.emplace_back(dst[i].first, v);
            else
                removed.push_back(dst[i].first);
            ++i;
            ++j;
        }
    }
    dst.swap(out);
}

struct Eliminator {
    Zp F;
    int64_t nrows;
    std::vector<Col> cols;
    std::vector<char> col_done;
    std::vector<char> row_done;
    std::vector<int32_t> row_nnz;
    std::vector<std::vector<int32_t>> row_cols;  // may hold stale column ids
    // Bucket queue on column nnz; entries validated lazily on pop.
    std::vector<std::vector<int32_t>> buckets;

    explicit Eliminator(const CscMatrix& m, uint32_t p)
        : F(p), nrows(m.rows), cols(m.cols()), col_done(m.cols(), 0),
          row_done(m.rows, 0), row_nnz(m.rows, 0), row_cols(m.rows) {
        for (int64_t j = 0; j < m.cols(); ++j) {
            Col& c = cols[j];
            for (int64_t t = m.col_ptr[j]; t < m.col_ptr[j + 1]; ++t) {
                uint32_t v = F.reduce(m.value[t]);
                if (v) c.emplace_back(m.row_idx[t], v);
            }
            std::sort(c.begin(), c.end());
            for (auto& [r, v] : c) {
                ++row_nnz[r];
                row_cols[r].push_back(static_cast<int32_t>(j));
            }
        }
        for (int64_t j = 0; j < m.cols(); ++j) enqueue(static_cast<int32_t>(j));
    }

    void enqueue(int32_t j) {
        size_t b = cols[j].size();
        if (b == 0) return;
        if (buckets.size() <= b) buckets.resize(b + 1);
        buckets[b].push_back(j);
    }

    int32_t pop_best_column() {
        for (size_t b = 1; b < buckets.size(); ++b) {
            auto& bucket = buckets[b];
            while (!bucket.empty()) {
                int32_t j = bucket.back();
                bucket.pop_back();
                if (col_done[j] || cols[j].size() != b) {
                    if (!col_done[j] && !cols[j].empty() && cols[j].size() < b) enqueue(j);
                    continue;
                }
                return j;
            }
        }
        return -1;
    }

    int64_t run() {
        int64_t rank = 0;
        for (;;) {
            int32_t pc = pop_best_column();
            if (pc < 0) break;
            // Pick the pivot row with minimal row count inside the column.
            int32_t pr = -1;
            int32_t best = INT32_MAX;
            uint32_t pv = 0;
            for (auto& [r, v] : cols[pc]) {
                if (row_done[r]) continue;
                if (row_nnz[r] < best) {
                    best = row_nnz[r];
                    pr = r;
                    pv = v;
                }
            }
            if (pr < 0) {  // all rows already consumed; column is dead weight
                col_done[pc] = 1;
                continue;
            }
            ++rank;
            col_done[pc] = 1;
            row_done[pr] = 1;
            for (auto& [r, v] : cols[pc]) --row_nnz[r];
            uint32_t pinv = F.inv(pv);

            std::vector<int32_t> targets;
            targets.swap(row_cols[pr]);
            std::vector<int32_t> added, removed;
            for (int32_t j : targets) {
                if (j == pc || col_done[j]) continue;
                auto it = std::lower_bound(cols[j].begin(), cols[j].end(),
                                           std::make_pair(pr, 0u),
                                           [](const auto& a, const auto& b) {
                                               return a.first < b.first;
                                           });
                if (it == cols[j].end() || it->first != pr) continue;
                uint32_t factor = F.neg(F.mul(it->second, pinv));
                added.clear();
                removed.clear();
                axpy(F, cols[j], cols[pc], factor, added, removed);
                for (int32_t r : added) {
                    ++row_nnz[r];
                    row_cols[r].push_back(j);
                }
                for (int32_t r : removed) --row_nnz[r];
                if (cols[j].empty())
                    col_done[j] = 1;
                else
                    enqueue(j);
            }
            cols[pc].clear();
            cols[pc].shrink_to_fit();
        }
        return rank;
    }
};

}  // namespace

int64_t rank_mod_p(const CscMatrix& m, uint32_t p) {
    if (m.rows == 0 || m.cols() == 0) return 0;
    Eliminator e(m, p);
    return e.run();
}

int64_t rank_over_q(const CscMatrix& m) {
    static thread_local std::mt19937 rng(std::random_device{}());
    size_t nprimes = std::size(kRankPrimes);
    size_t i = rng() % nprimes;
    size_t j = rng() % (nprimes - 1);
    if (j >= i) ++j;
    int64_t r1 = rank_mod_p(m, kRankPrimes[i]);
    int64_t r2 = rank_mod_p(m, kRankPrimes[j]);
    if (r1 != r2)
        throw std::runtime_error("rank_over_q: modular ranks disagree (unlucky prime)");
    return r1;
}

}  // namespace sqconf
