#include "sqconf/wheel_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqconf/injective_words.hpp"
#include "sqconf/partitions.hpp"

namespace sqconf {

bool Wheel::canonical() const {
    if (spokes.empty()) return false;
    for (size_t i = 1; i < spokes.size(); ++i)
        if (spokes[i] <= spokes[0]) return false;
    return true;
}

int WheelProduct::degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree();
    return d;
}

bool WheelProduct::canonical() const {
    for (const auto& f : factors)
        if (!f.canonical()) return false;
    for (size_t i = 1; i < factors.size(); ++i) {
        int a = factors[i - 1].size(), b = factors[i].size();
        if (a < b) return false;
        if (a == b && factors[i - 1].spokes[0] <= factors[i].spokes[0]) return false;
    }
    return true;
}

BracketExpr BracketExpr::wheel(Wheel w) {
    BracketExpr e;
    e.leaf = std::move(w);
    return e;
}

BracketExpr BracketExpr::bracket(BracketExpr a, BracketExpr b) {
    BracketExpr e;
    e.left = std::make_unique<BracketExpr>(std::move(a));
    e.right = std::make_unique<BracketExpr>(std::move(b));
    return e;
}

BracketExpr BracketExpr::clone() const {
    if (is_leaf()) return wheel(leaf);
    return bracket(left->clone(), right->clone());
}

int BracketExpr::degree() const {
    if (is_leaf()) return leaf.degree();
    return left->degree() + right->degree() + 1;
}

std::vector<int> BracketExpr::labels() const {
    std::vector<int> out;
    if (is_leaf()) {
        out = leaf.spokes;
    } else {
        out = left->labels();
        auto r = right->labels();
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<WheelProduct> enumerate_wheel_basis(int n, int k) {
    if (n < 0 || k < 0) return {};
    std::vector<WheelProduct> out;
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    for_each_set_partition(labels, [&](const std::vector<std::vector<int>>& blocks) {
        int deg = 0;
        for (const auto& b : blocks) deg += static_cast<int>(b.size()) - 1;
        if (deg != k) return;
        // wheel choices per block: anchor the minimum, permute the rest
        std::vector<std::vector<Wheel>> options;
        for (const auto& b : blocks) {
            std::vector<Wheel> opt;
            std::vector<int> rest(b.begin() + 1, b.end());
            std::sort(rest.begin(), rest.end());
            do {
                Wheel w;
                w.spokes.push_back(b[0]);
                w.spokes.insert(w.spokes.end(), rest.begin(), rest.end());
                opt.push_back(std::move(w));
            } while (std::next_permutation(rest.begin(), rest.end()));
            options.push_back(std::move(opt));
        }
        std::vector<size_t> idx(options.size(), 0);
        for (;;) {
            std::vector<Wheel> factors;
            for (size_t i = 0; i < options.size(); ++i) factors.push_back(options[i][idx[i]]);
            out.push_back(canonical_product(std::move(factors)).first);
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t betti_fn(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (k >= n && !(n == 0 && k == 0)) return k == 0 ? 1 : 0;
    if (n > 20) throw std::overflow_error("betti_fn: n too large for exact uint64");
    // e_k(1, 2, ..., n-1)
    std::vector<uint64_t> e(static_cast<size_t>(k) + 1, 0);
    e[0] = 1;
    for (int x = 1; x <= n - 1; ++x)
        for (int j = std::min(k, x); j >= 1; --j) e[j] += e[j - 1] * static_cast<uint64_t>(x);
    return e[k];
}

std::pair<WheelProduct, int> canonical_product(std::vector<Wheel> factors) {
    int sign = 1;
    // insertion sort, accumulating the Koszul sign per adjacent transposition
    for (size_t i = 1; i < factors.size(); ++i) {
        for (size_t j = i; j > 0; --j) {
            const Wheel& a = factors[j - 1];
            const Wheel& b = factors[j];
            bool swap_needed =
                a.size() < b.size() || (a.size() == b.size() && a.spokes[0] < b.spokes[0]);
            if (!swap_needed) break;
            if ((a.degree() * b.degree()) % 2) sign = -sign;
            std::swap(factors[j - 1], factors[j]);
        }
    }
    WheelProduct p;
    p.factors = std::move(factors);
    return {p, sign};
}

namespace {

// Polynomials in single canonical wheels, used internally by the rewriter.
using WheelMap = std::map<std::vector<int>, long long>;

void acc(WheelMap& m, const std::vector<int>& w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = m.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

WheelMap psi_ww(const std::vector<int>& A, const std::vector<int>& B);

WheelMap psi_poly(const WheelMap& a, const WheelMap& b) {
    WheelMap out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            for (const auto& [w, c] : psi_ww(wa, wb)) acc(out, w, ca * cb * c);
    return out;
}

WheelMap scaled(WheelMap m, long long s) {
    for (auto& [w, c] : m) c *= s;
    return m;
}

// Bracket of two canonical wheels, expanded in canonical wheels.
WheelMap psi_ww(const std::vector<int>& A, const std::vector<int>& B) {
    const int s = static_cast<int>(A.size());
    const int t = static_cast<int>(B.size());
    WheelMap out;
    if (t == 1) {
        int b = B[0];
        if (s == 1) {
            acc(out, {std::min(A[0], b), std::max(A[0], b)}, 1);
            return out;
        }
        if (b > A[0]) {  // canonical append
            std::vector<int> w = A;
            w.push_back(b);
            acc(out, w, 1);
            return out;
        }
        // b is a new minimum: rotate with the Jacobi relation on
        // (A', a_last, b), where A = psi(A', a_last).
        std::vector<int> Ap(A.begin(), A.end() - 1);
        int alast = A.back();
        WheelMap t1 = psi_ww(Ap, {b});           // anchored at b afterwards
        WheelMap r1 = psi_poly(t1, {{{alast}, 1}});
        WheelMap r2 = psi_ww({b, alast}, Ap);
        for (const auto& [w, c] : r1) acc(out, w, -c);
        for (const auto& [w, c] : r2) acc(out, w, -c);
        return out;
    }
    // Right argument is a big wheel B = psi(B', b_last): shrink it with the
    // Jacobi relation, using psi(x, y) = (-1)^{deg x deg y} psi(y, x).
    std::vector<int> Bp(B.begin(), B.end() - 1);
    int blast = B.back();
    int dA = s - 1, dB = t - 1;
    long long sign = ((dA * dB) % 2 ? -1 : 1) * -1;
    WheelMap u1 = psi_ww(A, Bp);
    WheelMap r1 = psi_poly(u1, {{{blast}, 1}});
    WheelMap u2 = psi_ww(A, {blast});
    WheelMap r2 = psi_poly(u2, {{Bp, 1}});
    for (const auto& [w, c] : r1) acc(out, w, sign * c);
    for (const auto& [w, c] : r2) acc(out, w, sign * c);
    return out;
}

WheelMap eval_expr(const BracketExpr& e) {
    if (e.is_leaf()) {
        const auto& sp = e.leaf.spokes;
        if (sp.empty()) throw std::invalid_argument("bracket_to_wheels: empty wheel");
        // Fold the defining iterated bracket; this also canonicalizes wheels
        // whose first spoke is not minimal.
        WheelMap m{{{sp[0]}, 1}};
        for (size_t i = 1; i < sp.size(); ++i) m = psi_poly(m, {{{sp[i]}, 1}});
        return m;
    }
    return psi_poly(eval_expr(*e.left), eval_expr(*e.right));
}

}  // namespace

WheelPoly bracket_to_wheels(const BracketExpr& e) {
    auto labels = e.labels();
    std::set<int> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("bracket_to_wheels: leaf label sets overlap");
    WheelPoly out;
    for (const auto& [w, c] : eval_expr(e)) {
        WheelProduct p;
        p.factors.push_back(Wheel{w});
        out[p] = c;
    }
    return out;
}

std::vector<WheelProduct> ar_reduced_basis(int n, int k, int r) {
    std::vector<WheelProduct> out;
    for (auto& p : enumerate_wheel_basis(n, k)) {
        bool ok = true;
        for (const auto& f : p.factors)
            if (f.size() < r + 1) ok = false;
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

uint64_t er_entry_rank(int n, int p, int q, int r) {
    if (r < 2) throw std::invalid_argument("er_entry_rank: r >= 2 required");
    if (p < -1 || q < 0 || p + 1 > n) return 0;
    uint64_t reduced = ar_reduced_basis(n - p - 1, q, r - 1).size();
    if (p == -1) return reduced;  // top factor is the empty-word class
    if (p + 1 == 1) return 0;     // injective words on one letter are acyclic
    uint64_t top = top_homology_basis(p + 1, r).size();
    return binomial(n, p + 1) * reduced * top;
}

}  // namespace sqconf
