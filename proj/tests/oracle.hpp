#pragma once

// Independent numeric oracles: complex evaluation under zeta_m -> exp(2 pi i / m)
// and brute-force character sums built from raw field arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>

#include "epsilon/cyclotomic.hpp"
#include "epsilon/field.hpp"

namespace oracle {

using cplx = std::complex<double>;

inline cplx root(uint64_t m, int64_t k) {
    const double a = 2.0 * M_PI * static_cast<double>(k % static_cast<int64_t>(m)) / static_cast<double>(m);
    return {std::cos(a), std::sin(a)};
}

inline cplx eval(const eps::CycNum &a) {
    cplx s = 0;
    for (size_t i = 0; i < a.degree(); ++i) s += a.coeff(i).get_d() * root(a.order(), static_cast<int64_t>(i));
    return s;
}

inline bool close(cplx a, cplx b, double tol = 1e-7) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

// Tr_{F_q/F_p}(a) by summing Frobenius conjugates.
inline uint32_t trace(const eps::Fq &F, eps::Elem a) {
    eps::Elem s = 0, c = a;
    for (uint32_t i = 0; i < F.f(); ++i) {
        s = F.add(s, c);
        c = F.pow(c, F.p());
    }
    return s;   // lies in F_p, whose elements are indexed by their value
}

// Discrete log by walking powers of the generator.
inline uint64_t dlog(const eps::Fq &F, eps::Elem a) {
    eps::Elem g = F.generator(), x = 1;
    for (uint64_t e = 0; e + 1 < F.q(); ++e) {
        if (x == a) return e;
        x = F.mul(x, g);
    }
    return UINT64_MAX;
}

// -sum chi^{-1}(a) psi_c(a), chi(g) = exp(2 pi i k/(q-1)).
inline cplx gauss(const eps::Fq &F, int64_t k, eps::Elem c = 1) {
    cplx s = 0;
    const uint64_t q1 = F.q() - 1;
    for (eps::Elem a = 1; a < F.q(); ++a) {
        const int64_t e = static_cast<int64_t>((q1 - (static_cast<uint64_t>(((k % (int64_t)q1) + (int64_t)q1) % (int64_t)q1) * dlog(F, a)) % q1) % q1);
        s += root(q1, e) * root(F.p(), trace(F, F.mul(c, a)));
    }
    return -s;
}

} // namespace oracle
