#include <doctest.h>

#include "epsilon/charsums.hpp"
#include "epsilon/error.hpp"
#include "epsilon/lfunction.hpp"
#include "oracle.hpp"

using namespace eps;

namespace {

// S_n by summing trace_frobenius over every point of F_{q^n} and infinity.
CycNum brute_trace(const SheafExpr &S, uint32_t n) {
    auto F = S.field();
    auto E = Fq::make(F->p(), F->f() * n);
    CycNum s(0);
    for (Elem y = 0; y < E->q(); ++y) {
        try {
            s += trace_frobenius(S, E, y);
        } catch (const Error &e) {
            if (e.code() != "point-outside-U") throw;   // extension by zero
        }
    }
    const ClosedPoint inf = ClosedPoint::infinity(F);
    return S.bad_at(inf) ? s : s + trace_at_infinity(S, n);
}

} // namespace

TEST_CASE("point counts against brute force") {
    for (auto [p, f, spec] : std::vector<std::tuple<uint32_t, uint32_t, const char *>>{
             {5, 1, "kummer(chi[1], x*(x-1))"},
             {7, 1, "kummer(chi[2], x*(x^2+1)) * twist([3] 1+z)"},
             {3, 1, "as(1, x^2+x) * kummer(chi[1], x)"},
             {2, 2, "kummer(chi[1], x*(x+1))"},
             {3, 2, "as(1, 1/x)"}}) {
        auto F = Fq::make(p, f);
        SheafExpr S = parse_sheaf_spec(F, spec);
        auto tr = point_count_traces(S, 3);
        for (uint32_t n = 1; n <= 3; ++n) CHECK(tr[n - 1] == brute_trace(S, n));
    }
}

TEST_CASE("L-polynomial of a Kummer sheaf with two branch points") {
    auto F = Fq::make(5, 1);
    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[1], x*(x-1))");
    LPolynomial L = l_polynomial(S);
    REQUIRE(L.degree() == 1);
    CHECK(L.coeffs[1] == CycNum::parse("[4] 1 + 2*z"));
    CHECK(L.coeffs[1] == brute_trace(S, 1));   // L = det(1 - FT | H^1), so c_1 = S_1
}

TEST_CASE("purity: |c_d|^2 = q^d") {
    for (auto [p, spec] : std::vector<std::pair<uint32_t, const char *>>{
             {5, "kummer(chi[1], x*(x-1)*(x-2))"}, {7, "kummer(chi[1], x*(x^2+1)*(x-3))"}, {3, "as(1, x^2+1/x)"}}) {
        auto F = Fq::make(p, 1);
        LPolynomial L = l_polynomial(parse_sheaf_spec(F, spec));
        const double cd = std::norm(oracle::eval(L.coeffs.back()));
        CHECK(cd == doctest::Approx(std::pow(static_cast<double>(p), L.degree())));
        CHECK(L.degree() == -euler_char(parse_sheaf_spec(F, spec)));
    }
}

TEST_CASE("global epsilon") {
    auto F = Fq::make(7, 1);
    // constant sheaf twisted by alpha: epsilon = 1 / (alpha^2 q)
    const CycNum alpha = CycNum::parse("[3] 1 + 2*z");
    GlobalEpsilon G = global_epsilon(parse_sheaf_spec(F, "const * twist([3] 1 + 2*z)"));
    CHECK(G.constant_case);
    CHECK(G.exact == (alpha * alpha * CycNum(7)).inverse());
    CHECK(theta_eq(G.det_rgamma, det_cohomology_geometric_constant(alpha, 7)));
    // trivial monodromy without the constant special case
    CHECK_THROWS_AS(global_epsilon(parse_sheaf_spec(F, "kummer(chi[1], x^6)")), Error);
}

TEST_CASE("global epsilon of Kummer(chi, x) Kummer(rho, 1-x) is the classical Jacobi sum") {
    for (uint32_t p : {5u, 7u}) {
        auto F = Fq::make(p, 1);
        AddChar psi = AddChar::canonical(F);
        for (int64_t a = 1; a + 1 < p; ++a)
            for (int64_t b = 1; b + 1 < p; ++b) {
                MultChar chi(F, a), rho(F, b);
                if ((chi * rho).is_trivial()) continue;
                SheafExpr S = parse_sheaf_spec(F, "kummer(chi[" + std::to_string(a) + "], x) * kummer(chi[" + std::to_string(b) + "], 1-x)");
                GlobalEpsilon G = global_epsilon(S);
                CHECK(G.exact == classical_jacobi_sum(chi, rho));
                // through Gauss sums of the conjugate characters
                MultChar cb = chi.inverse(), rb = rho.inverse();
                CHECK(theta_eq(G.cls, ThetaClass::of(gauss_sum(cb, psi) * gauss_sum(rb, psi) / gauss_sum(cb * rb, psi))));
            }
    }
}

TEST_CASE("errors") {
    auto F = Fq::make(5, 1);
    CHECK_THROWS_AS(l_polynomial(parse_sheaf_spec(F, "const")), Error);
}
