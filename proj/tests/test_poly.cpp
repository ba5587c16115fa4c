#include <doctest.h>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"
#include "epsilon/local_epsilon.hpp"
#include "epsilon/poly.hpp"
#include "epsilon/sheaf.hpp"

using namespace eps;

namespace {

int64_t moebius(uint64_t n) {
    int64_t m = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

// Gauss's count of monic irreducibles of degree n over F_q.
uint64_t irreducible_count(uint64_t q, uint32_t n) {
    int64_t s = 0;
    for (auto d : divisors(n)) s += moebius(n / d) * static_cast<int64_t>(ipow(q, static_cast<unsigned>(d)));
    return static_cast<uint64_t>(s) / n;
}

// enumerate monic polynomials of degree n over F
std::vector<Poly> monics(const FqPtr &F, uint32_t n) {
    std::vector<Poly> out;
    const uint64_t total = ipow(F->q(), n);
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> c(n + 1);
        uint64_t t = idx;
        for (uint32_t i = 0; i < n; ++i) {
            c[i] = static_cast<Elem>(t % F->q());
            t /= F->q();
        }
        c[n] = 1;
        out.emplace_back(F, c);
    }
    return out;
}

} // namespace

TEST_CASE("irreducible counts match the necklace formula") {
    for (auto [p, f, n] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{{2, 1, 5}, {3, 1, 3}, {5, 1, 2}, {2, 2, 3}, {7, 1, 2}}) {
        auto F = Fq::make(p, f);
        uint64_t count = 0;
        for (auto &P : monics(F, n)) count += poly_is_irreducible(P);
        CHECK(count == irreducible_count(F->q(), n));
    }
}

TEST_CASE("factorization reconstructs") {
    auto F = Fq::make(3, 1);
    for (auto &P : monics(F, 4)) {
        Poly prod = Poly::constant(F, 1);
        for (auto &[Q, e] : poly_factor(P)) {
            CHECK(poly_is_irreducible(Q));
            prod = prod * Q.pow(static_cast<uint64_t>(e));
        }
        CHECK(prod == P);
    }
}

TEST_CASE("division and gcd") {
    auto F = Fq::make(5, 1);
    Poly a(F, {1, 2, 3, 4}), b(F, {2, 0, 1});
    Poly q, r;
    poly_divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(poly_gcd(a * b, b * Poly(F, {1, 1})) == b.monic());
}

TEST_CASE("rational functions and divisors") {
    auto F = Fq::make(7, 1);
    RatFunc f = parse_ratfunc(F, "x^2/(x-1)");
    int total = 0;
    for (auto &[x, o] : f.divisor()) total += o * static_cast<int>(x.degree());
    CHECK(total == 0);
    CHECK(f.ord(ClosedPoint::rational(F, 0)) == 2);
    CHECK(f.ord(ClosedPoint::rational(F, 1)) == -1);
    CHECK(f.ord(ClosedPoint::infinity(F)) == -1);
    CHECK_THROWS_AS(parse_ratfunc(F, "x^"), Error);
    CHECK_THROWS_AS(parse_ratfunc(F, "x/(x-x)"), Error);
}

TEST_CASE("the form dx has degree -2") {
    auto F = Fq::make(5, 1);
    for (const char *g : {"1", "x^2/(x-1)", "x^2+2", "3*x"}) {
        LocalForm w = LocalForm::parse(F, g);
        int deg = 0;
        for (auto &[x, o] : w.divisor()) deg += o * static_cast<int>(x.degree());
        CHECK(deg == -2);
    }
    CHECK_THROWS_AS(LocalForm::parse(F, "0"), Error);
}

TEST_CASE("points") {
    auto F = Fq::make(5, 1);
    CHECK(parse_point(F, "inf").at_infinity);
    CHECK(parse_point(F, "3") == ClosedPoint::rational(F, 3));
    CHECK(parse_point(F, "x^2+2").degree() == 2);
    CHECK_THROWS_AS(parse_point(F, "x^2-1"), Error);
    auto kx = residue_field(parse_point(F, "x^2+2"));
    CHECK(kx.field->q() == 25);
}
