#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eps {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(int64_t a, int64_t b) {
    Rat r(Int(static_cast<long>(a)), Int(static_cast<long>(b)));
    r.canonicalize();
    return r;
}

inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// (prime, exponent) pairs by trial division; fine for the sizes used here.
inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> ds{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = ds.size();
        uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Multiplicative order of a modulo m (gcd(a,m) = 1 assumed).
inline uint64_t mult_order(uint64_t a, uint64_t m) {
    if (m == 1) return 1;
    uint64_t ord = euler_phi(m);
    for (auto [p, e] : factorize(ord)) {
        for (int i = 0; i < e && ord % p == 0 && powmod(a, ord / p, m) == 1; ++i) ord /= p;
    }
    return ord;
}

inline int64_t inv_mod(int64_t a, int64_t m) {
    int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        int64_t t = g / a1;
        g -= t * a1; std::swap(g, a1);
        x -= t * x1; std::swap(x, x1);
    }
    return mod(x, m);
}

inline uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace eps
