#include "sqconf/config_complex.hpp"

#include <algorithm>
#include <string>

namespace sqconf {

namespace {

// Lexicographic comparison of the tuple at `pos` (flattened storage) with `key`.
inline int cmp_tuple(const int32_t* a, const int32_t* b, int n) {
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

ConfigComplex ConfigComplex::build(const CubicalComplex& ambient, int n, Options opts) {
    if (n < 1) throw std::invalid_argument("ConfigComplex: n must be positive");
    ConfigComplex cx;
    cx.ambient_ = &ambient;
    cx.n_ = n;
    cx.max_dim_ = opts.max_dim < 0 ? 2 * n : std::min(opts.max_dim, 2 * n);

    const int64_t ncells = ambient.cell_count();

    // Upfront size estimate: each placed square blocks at least the nine
    // cells of its closed star, so prod(ncells - 9i) bounds the tuple count
    // from a practical direction. The running count below is the hard stop.
    double est = 1.0;
    for (int i = 0; i < n; ++i) est *= std::max<double>(1.0, static_cast<double>(ncells - 9 * i));
    if (est > static_cast<double>(opts.cell_budget) * 64.0)
        throw SizeBudgetError("ConfigComplex: estimated cell count " + std::to_string(est) +
                              " exceeds budget " + std::to_string(opts.cell_budget));

    // Disjointness lists per ambient cell, ids ascending.
    std::vector<std::vector<int32_t>> disj(ncells);
    for (int32_t a = 0; a < ncells; ++a)
        for (int32_t b = 0; b < ncells; ++b)
            if (ambient.closures_disjoint_ids(a, b)) disj[a].push_back(b);

    std::vector<int> cell_dim(ncells);
    for (int32_t a = 0; a < ncells; ++a) cell_dim[a] = ambient.dim(a);

    cx.cells_.assign(cx.max_dim_ + 1, {});
    int64_t count = 0;

    // Depth-first enumeration in part-tuple lex order; buckets by dimension
    // preserve that order within each degree.
    std::vector<int32_t> tuple(n);
    std::vector<std::vector<int32_t>> cand(n + 1);
    cand[0].resize(ncells);
    for (int32_t a = 0; a < ncells; ++a) cand[0][a] = a;

    auto place = [&](auto&& self, int depth, int dim_so_far) -> void {
        for (int32_t c : cand[depth]) {
            int d_here = dim_so_far + cell_dim[c];
            if (d_here > cx.max_dim_) continue;
            tuple[depth] = c;
            if (depth == n - 1) {
                auto& bucket = cx.cells_[d_here];
                bucket.insert(bucket.end(), tuple.begin(), tuple.end());
                if (++count > opts.cell_budget)
                    throw SizeBudgetError("ConfigComplex: cell budget exceeded at " +
                                          std::to_string(count));
            } else {
                auto& next = cand[depth + 1];
                next.clear();
                std::set_intersection(cand[depth].begin(), cand[depth].end(),
                                      disj[c].begin(), disj[c].end(),
                                      std::back_inserter(next));
                self(self, depth + 1, d_here);
            }
        }
    };
    place(place, 0, 0);

    // Trim empty top degrees (but keep degree 0 even if empty).
    while (cx.cells_.size() > 1 && cx.cells_.back().empty()) cx.cells_.pop_back();

    // Boundary matrices: coordinatewise faces with the product sign
    // (-1)^{sum of dims of earlier parts}.
    ChainComplex& cc = cx.chain_;
    for (const auto& bucket : cx.cells_)
        cc.dims.push_back(static_cast<int64_t>(bucket.size()) / n);
    std::vector<int32_t> face(n);
    for (int d = 0; d < static_cast<int>(cx.cells_.size()); ++d) {
        CscMatrix b;
        b.rows = d == 0 ? 0 : cc.dims[d - 1];
        int64_t cnt = cc.dims[d];
        std::vector<std::pair<int64_t, int8_t>> col;
        for (int64_t i = 0; i < cnt; ++i) {
            const int32_t* t = cx.cells_[d].data() + i * n;
            if (d > 0) {
                col.clear();
                int prefix = 0;
                for (int part = 0; part < n; ++part) {
                    for (const auto& f : ambient.faces(t[part])) {
                        std::copy(t, t + n, face.begin());
                        face[part] = f.id;
                        int64_t row = cx.find_cell(d - 1, face);
                        int8_t s = static_cast<int8_t>((prefix % 2 ? -1 : 1) * f.sign);
                        col.emplace_back(row, s);
                    }
                    prefix += cell_dim[t[part]];
                }
                std::sort(col.begin(), col.end());
                for (auto& [r, s] : col) b.push_entry(static_cast<int32_t>(r), s);
            }
            b.close_column();
        }
        cc.boundary.push_back(std::move(b));
    }
    return cx;
}

int64_t ConfigComplex::total_cells() const {
    int64_t t = 0;
    for (const auto& b : cells_) t += static_cast<int64_t>(b.size()) / n_;
    return t;
}

int64_t ConfigComplex::find_cell(int d, std::span<const int32_t> key) const {
    if (d < 0 || d > top_dim()) return -1;
    const auto& bucket = cells_[d];
    int64_t lo = 0, hi = static_cast<int64_t>(bucket.size()) / n_;
    while (lo < hi) {
        int64_t mid = (lo + hi) / 2;
        int c = cmp_tuple(bucket.data() + mid * n_, key.data(), n_);
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < static_cast<int64_t>(bucket.size()) / n_ &&
        cmp_tuple(bucket.data() + lo * n_, key.data(), n_) == 0)
        return lo;
    return -1;
}

}  // namespace sqconf
