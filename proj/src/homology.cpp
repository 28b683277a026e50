#include "sqconf/homology.hpp"

#include <stdexcept>

#include "sqconf/modrank.hpp"
#include "sqconf/snf.hpp"

namespace sqconf {

std::vector<HomologySummary> betti_numbers(const ChainComplex& cc, Coefficients coeff,
                                           const HomologyOptions& opts) {
    if (!cc.boundary_squares_to_zero())
        throw std::runtime_error("betti_numbers: boundary does not square to zero");

    int top = cc.top_degree();
    std::vector<int64_t> rank(top + 2, 0);       // rank of boundary[k]; rank[top+1] = 0
    std::vector<SnfResult> snf(top + 2);
    std::vector<char> have_snf(top + 2, 0);

    for (int k = 1; k <= top; ++k) {
        const CscMatrix& b = cc.boundary[k];
        if (b.rows == 0 || b.cols() == 0) continue;
        bool small = std::max(b.rows, b.cols()) <= opts.snf_threshold;
        switch (coeff.kind) {
            case Coefficients::integers:
                if (small) {
                    snf[k] = smith_normal_form(to_sparse_int(b));
                    rank[k] = snf[k].rank;
                    have_snf[k] = 1;
                } else {
                    rank[k] = rank_over_q(b);
                }
                break;
            case Coefficients::rationals:
                rank[k] = rank_over_q(b);
                break;
            case Coefficients::prime:
                rank[k] = rank_mod_p(b, coeff.p);
                break;
        }
    }

    std::vector<HomologySummary> out;
    for (int k = 0; k <= top; ++k) {
        HomologySummary s;
        s.degree = k;
        s.betti = cc.dims[k] - rank[k] - rank[k + 1];
        if (coeff.kind == Coefficients::integers) {
            if (k + 1 <= top && cc.dims[k + 1] > 0) {
                if (have_snf[k + 1])
                    s.torsion = snf[k + 1].torsion();
                else
                    s.betti_only = true;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<int64_t> betti_vector(const ChainComplex& cc, Coefficients coeff,
                                  const HomologyOptions& opts) {
    std::vector<int64_t> out;
    for (const auto& s : betti_numbers(cc, coeff, opts)) out.push_back(s.betti);
    return out;
}

}  // namespace sqconf
