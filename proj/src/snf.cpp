#include "sqconf/snf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sqconf {

namespace {

struct Work {
    std::vector<std::map<int32_t, mpz_class>> rows;  // row -> (col -> value)
    std::vector<std::set<int32_t>> col_rows;         // col -> rows with an entry
    std::vector<char> row_alive, col_alive;

    explicit Work(const SparseIntMatrix& m)
        : rows(m.rows), col_rows(m.cols), row_alive(m.rows, 1), col_alive(m.cols, 1) {
        for (const auto& e : m.entries) {
            if (e.value == 0) continue;
            rows[e.row][e.col] = e.value;
            col_rows[e.col].insert(e.row);
        }
    }

    void set(int32_t r, int32_t c, const mpz_class& v) {
        if (v == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            if (rows[r].emplace(c, v).second)
                col_rows[c].insert(r);
            else
                rows[r][c] = v;
        }
    }

    // row r2 -= q * row r1
    void row_axpy(int32_t r2, int32_t r1, const mpz_class& q) {
        if (q == 0) return;
        for (const auto& [c, v] : rows[r1]) {
            auto it = rows[r2].find(c);
            mpz_class nv = (it != rows[r2].end() ? it->second : mpz_class(0)) - q * v;
            set(r2, c, nv);
        }
    }

    // Markowitz pivot with unit preference; (-1,-1) when the matrix is empty.
    std::pair<int32_t, int32_t> select_pivot() const {
        int32_t br = -1, bc = -1;
        bool best_unit = false;
        long long best_cost = -1;
        mpz_class best_abs;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (!row_alive[r]) continue;
            long long rn = static_cast<long long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                long long cost = rn * (static_cast<long long>(col_rows[c].size()) - 1);
                mpz_class av = abs(v);
                bool unit = av == 1;
                bool better;
                if (br < 0)
                    better = true;
                else if (unit != best_unit)
                    better = unit;
                else if (cost != best_cost)
                    better = cost < best_cost;
                else
                    better = av < best_abs;
                if (better) {
                    br = static_cast<int32_t>(r);
                    bc = c;
                    best_unit = unit;
                    best_cost = cost;
                    best_abs = av;
                }
            }
        }
        return {br, bc};
    }
};

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
    Work w(m);
    std::vector<mpz_class> diag;

    for (;;) {
        auto [pr, pc] = w.select_pivot();
        if (pr < 0) break;

        // Clear the pivot column and row. A nonzero remainder replaces the
        // pivot with a strictly smaller value, so this loop terminates.
        for (;;) {
            mpz_class pv = w.rows[pr][pc];
            bool restart = false;
            // Column pass.
            std::vector<int32_t> in_col(w.col_rows[pc].begin(), w.col_rows[pc].end());
            for (int32_t r2 : in_col) {
                if (r2 == pr) continue;
                mpz_class v2 = w.rows[r2][pc];
                mpz_class q = v2 / pv;  // truncated division
                w.row_axpy(r2, pr, q);
                mpz_class rem = v2 - q * pv;
                if (rem != 0) {
                    pr = r2;  // smaller pivot value, same column
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            // Row pass: the column now holds only the pivot, so subtracting a
            // multiple of the pivot column touches only row pr.
            std::vector<std::pair<int32_t, mpz_class>> in_row(w.rows[pr].begin(),
                                                              w.rows[pr].end());
            for (const auto& [c2, v2] : in_row) {
                if (c2 == pc) continue;
                mpz_class q = v2 / pv;
                mpz_class rem = v2 - q * pv;
                w.set(pr, c2, rem);
                if (rem != 0) {
                    pc = c2;
                    restart = true;
                    break;
                }
            }
            if (!restart) break;
        }

        mpz_class d = abs(w.rows[pr][pc]);
        diag.push_back(d);
        w.set(pr, pc, 0);
        w.row_alive[pr] = 0;
        w.col_alive[pc] = 0;
    }

    // The diagonal of a unimodular diagonalization becomes the invariant
    // factor chain via pairwise gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            for (size_t j = i + 1; j < diag.size(); ++j) {
                if (diag[j] % diag[i] != 0) {
                    mpz_class g, l;
                    mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
                    l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(diag.begin(), diag.end());

    SnfResult out;
    out.factors = std::move(diag);
    out.rank = static_cast<int64_t>(out.factors.size());
    return out;
}

}  // namespace sqconf
