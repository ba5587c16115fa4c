#pragma once

#include <vector>

#include "epsilon/cyclotomic.hpp"
#include "epsilon/sheaf.hpp"
#include "epsilon/theta.hpp"

namespace eps {

// Worker threads used by point enumeration (at least 1).
void set_point_count_jobs(unsigned jobs);
unsigned point_count_jobs();

// S_n = sum over y in U(F_{q^n}) of the trace of Frobenius, for n = 1..N.
std::vector<CycNum> point_count_traces(const SheafExpr &S, uint32_t N);

// Single S_n through the generic enumeration (no SIMD kernel), for cross-checks.
CycNum point_count_generic(const SheafExpr &S, uint32_t n);
// Single S_n through the linear-Kummer kernel; requires fast_path_applies.
CycNum point_count_fast(const SheafExpr &S, uint32_t n, bool use_avx2);
bool fast_path_applies(const SheafExpr &S, uint32_t n);

struct LPolynomial {
    std::vector<CycNum> coeffs;   // constant term 1, degree = -euler_char
    std::vector<CycNum> S;        // S_1..S_{d+1}
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Throws cohomology-obstruction when H^2 may be nonzero (no bad point) and
// degree-inconsistency when the coefficient of t^{d+1} does not vanish.
LPolynomial l_polynomial(const SheafExpr &S);

struct GlobalEpsilon {
    CycNum exact;          // prod det(-Frob, H^i)^{(-1)^{i+1}}
    ThetaClass cls;
    ThetaClass det_rgamma; // class of prod det(Frob, H^i)^{(-1)^i}
    bool constant_case = false;
};
GlobalEpsilon global_epsilon(const SheafExpr &S);

// Class of det R Gamma(P^1, alpha-twisted constant sheaf) = alpha^2 q.
ThetaClass det_cohomology_geometric_constant(const CycNum &alpha, uint64_t q);

} // namespace eps
