#pragma once

#include <cstdint>
#include <stdexcept>

namespace sqconf {

// Arithmetic in Z/p for a prime p < 2^31, so products fit in uint64.
struct Zp {
    uint32_t p;

    explicit Zp(uint32_t prime) : p(prime) {
        if (prime < 2 || prime >= (1u << 31))
            throw std::invalid_argument("Zp: prime out of range");
    }

    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = static_cast<uint64_t>(a) + b;
        return s >= p ? static_cast<uint32_t>(s - p) : static_cast<uint32_t>(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : static_cast<uint32_t>(a + static_cast<uint64_t>(p) - b);
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("Zp: inverse of zero");
        return pow(a, p - 2);
    }
};

// Primes used for modular rank computations. Any two distinct entries
// make an acceptable pair; callers pick two and require agreement.
inline constexpr uint32_t kRankPrimes[] = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u,
    2147483563u, 2147483549u, 2147483543u, 2147483497u,
};

}  // namespace sqconf
