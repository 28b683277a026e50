#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sqconf {

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / i;
    return r;
}

inline uint64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    if (n > 20) throw std::overflow_error("factorial overflow");
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Calls fn once per set partition of elems (blocks listed in order of their
// minima, elements ascending within each block).
inline void for_each_set_partition(const std::vector<int>& elems,
                                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == elems.size()) {
            fn(blocks);
            return;
        }
        for (auto& b : blocks) {
            b.push_back(elems[idx]);
            self(self, idx + 1);
            b.pop_back();
        }
        blocks.push_back({elems[idx]});
        self(self, idx + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

}  // namespace sqconf
