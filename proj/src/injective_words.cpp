#include "sqconf/injective_words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqconf/partitions.hpp"

namespace sqconf {

int WordPoly::degree() const {
    if (terms.empty()) return -1;
    size_t len = terms.begin()->first.size();
    for (const auto& [w, c] : terms)
        if (w.size() != len) throw std::logic_error("WordPoly: not homogeneous");
    return static_cast<int>(len);
}

void WordPoly::add_term(const Word& w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) {
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
}

WordPoly WordPoly::operator*(long long c) const {
    WordPoly out;
    if (c == 0) return out;
    for (const auto& [w, k] : terms) out.terms.emplace(w, k * c);
    return out;
}

WordPoly word_poly(const Word& w) {
    WordPoly p;
    p.add_term(w, 1);
    return p;
}

WordPoly concat(const WordPoly& a, const WordPoly& b) {
    WordPoly out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

WordPoly word_boundary(const Word& w) {
    WordPoly out;
    long long sign = 1;
    for (size_t j = 0; j < w.size(); ++j) {
        Word d;
        d.reserve(w.size() - 1);
        d.insert(d.end(), w.begin(), w.begin() + j);
        d.insert(d.end(), w.begin() + j + 1, w.end());
        out.add_term(d, sign);
        sign = -sign;
    }
    return out;
}

WordPoly word_boundary(const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p.terms) out += word_boundary(w) * c;
    return out;
}

namespace {

std::set<int> letter_set(const WordPoly& p) {
    std::set<int> s;
    for (const auto& [w, c] : p.terms) s.insert(w.begin(), w.end());
    return s;
}

}  // namespace

WordPoly lie_bracket(const WordPoly& a, const WordPoly& b) {
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return {};
    auto sa = letter_set(a), sb = letter_set(b);
    for (int x : sa)
        if (sb.count(x)) throw std::invalid_argument("lie_bracket: letter sets overlap");
    WordPoly out = concat(a, b);
    long long sign = (da * db) % 2 ? -1 : 1;
    out -= concat(b, a) * sign;
    return out;
}

std::vector<LieBasisElement> reutenauer_basis(std::vector<int> S) {
    std::sort(S.begin(), S.end());
    std::vector<LieBasisElement> out;
    if (S.size() < 2) return out;
    std::vector<int> rest(S.begin() + 1, S.end());
    std::sort(rest.begin(), rest.end());
    do {
        LieBasisElement e;
        e.anchor = S[0];
        e.tail = rest;
        e.expansion = word_poly({S[0]});
        for (int t : rest) e.expansion = lie_bracket(e.expansion, word_poly({t}));
        out.push_back(std::move(e));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

namespace {

// Frozen total order on the basis B of factors: larger block first, then
// lexicographically smaller letter set, then the bracket ordering tuple.
bool factor_less(const BasisFactor& a, const BasisFactor& b) {
    if (a.block.size() != b.block.size()) return a.block.size() > b.block.size();
    if (a.block != b.block) return a.block < b.block;
    return a.tail < b.tail;
}

std::vector<BasisProduct> products_over_partitions(const std::vector<int>& T, size_t min_block) {
    std::vector<BasisProduct> out;
    for_each_set_partition(T, [&](const std::vector<std::vector<int>>& blocks) {
        for (const auto& b : blocks)
            if (b.size() < min_block) return;
        // factor choices per block
        std::vector<std::vector<BasisFactor>> options;
        for (const auto& b : blocks) {
            std::vector<BasisFactor> opt;
            if (b.size() == 1) {
                opt.push_back({b, {}});
            } else {
                for (const auto& e : reutenauer_basis(b)) opt.push_back({b, e.tail});
            }
            options.push_back(std::move(opt));
        }
        std::vector<size_t> idx(options.size(), 0);
        for (;;) {
            BasisProduct prod;
            for (size_t i = 0; i < options.size(); ++i) prod.factors.push_back(options[i][idx[i]]);
            std::sort(prod.factors.begin(), prod.factors.end(), factor_less);
            prod.poly = word_poly({});
            for (const auto& f : prod.factors) {
                WordPoly fp;
                if (f.tail.empty()) {
                    fp = word_poly({f.block[0]});
                } else {
                    fp = word_poly({f.block[0]});
                    for (int t : f.tail) fp = lie_bracket(fp, word_poly({t}));
                }
                prod.poly = concat(prod.poly, fp);
            }
            out.push_back(std::move(prod));
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    });
    std::sort(out.begin(), out.end(), [](const BasisProduct& a, const BasisProduct& b) {
        return std::lexicographical_compare(a.factors.begin(), a.factors.end(),
                                            b.factors.begin(), b.factors.end(),
                                            factor_less);
    });
    return out;
}

}  // namespace

std::vector<BasisProduct> pi_basis(const std::vector<int>& T) {
    std::vector<int> t = T;
    std::sort(t.begin(), t.end());
    return products_over_partitions(t, 1);
}

std::vector<BasisProduct> top_homology_basis(int m, int r) {
    if (m < 2) throw std::invalid_argument("top_homology_basis: need m >= 2");
    if (r < 2) throw std::invalid_argument("top_homology_basis: need r >= 2");
    std::vector<int> letters(m);
    for (int i = 0; i < m; ++i) letters[i] = i + 1;
    return products_over_partitions(letters, static_cast<size_t>(r));
}

ChainComplex injective_words_complex(int n) {
    if (n < 1) throw std::invalid_argument("injective_words_complex: n >= 1");
    // words by length, lexicographic within each length
    std::vector<std::vector<Word>> words(n + 1);
    words[0].push_back({});
    for (int len = 1; len <= n; ++len) {
        for (const auto& w : words[len - 1]) {
            for (int a = 1; a <= n; ++a) {
                if (std::find(w.begin(), w.end(), a) != w.end()) continue;
                Word x = w;
                x.push_back(a);
                words[len].push_back(std::move(x));
            }
        }
        std::sort(words[len].begin(), words[len].end());
    }
    ChainComplex cc;
    for (int len = 0; len <= n; ++len) cc.dims.push_back(static_cast<int64_t>(words[len].size()));
    for (int len = 0; len <= n; ++len) {
        CscMatrix b;
        b.rows = len == 0 ? 0 : cc.dims[len - 1];
        for (const auto& w : words[len]) {
            if (len > 0) {
                std::vector<std::pair<int64_t, int8_t>> col;
                auto bd = word_boundary(w);
                for (const auto& [d, c] : bd.terms) {
                    auto it = std::lower_bound(words[len - 1].begin(), words[len - 1].end(), d);
                    col.emplace_back(it - words[len - 1].begin(), static_cast<int8_t>(c));
                }
                std::sort(col.begin(), col.end());
                for (auto& [r, s] : col) b.push_entry(static_cast<int32_t>(r), s);
            }
            b.close_column();
        }
        cc.boundary.push_back(std::move(b));
    }
    return cc;
}

std::string dump(const WordPoly& p) {
    if (p.terms.empty()) return "0";
    bool multi_digit = false;
    for (const auto& [w, c] : p.terms)
        for (int a : w)
            if (a > 9) multi_digit = true;
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms) {
        long long v = c;
        if (first) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        out += std::to_string(v) + "*";
        if (w.empty()) out += "()";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i && multi_digit) out += ".";
            out += std::to_string(w[i]);
        }
        first = false;
    }
    return out;
}

}  // namespace sqconf
