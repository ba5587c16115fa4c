#include <doctest.h>

#include <random>

#include "epsilon/cyclotomic.hpp"
#include "epsilon/error.hpp"
#include "oracle.hpp"

using namespace eps;

namespace {

CycNum random_cyc(std::mt19937_64 &rng, uint32_t m) {
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<Int> v(m);
    for (auto &x : v) x = c(rng);
    return CycNum::from_poly(m, v, Int(std::uniform_int_distribution<int>(1, 3)(rng)));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == std::vector<int64_t>{-1, 1});
    CHECK(cyclotomic_poly(4) == std::vector<int64_t>{1, 0, 1});
    CHECK(cyclotomic_poly(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_poly(105).size() == 49);   // phi(105) = 48
    // Phi_105 is the first with a coefficient -2
    bool two = false;
    for (auto c : cyclotomic_poly(105)) two = two || c == -2;
    CHECK(two);
}

TEST_CASE("roots of unity and collapse to Q") {
    CHECK(CycNum::zeta(7).pow(7) == CycNum(1));
    CHECK(CycNum::zeta(4).pow(2) == CycNum(-1));
    CycNum s = CycNum::zeta(3) + CycNum::zeta(3, 2);
    CHECK(s == CycNum(-1));
    CHECK(s.order() == 1);
    CHECK(s.is_rational());
    auto r = CycNum::zeta(12, 5).root_of_unity();
    REQUIRE(r);
    CHECK(r->first == 12);
    CHECK(r->second == 5);
    CHECK_FALSE((CycNum(1) + CycNum::zeta(5)).root_of_unity());
}

TEST_CASE("text round trip") {
    for (const char *t : {"[4] 1 + 2*z", "[1] -5", "[12] -1/3*z + z^3", "[5] 1 + z"}) {
        CycNum a = CycNum::parse(t);
        CHECK(CycNum::parse(a.str()) == a);
    }
    CHECK(CycNum::parse("[4] 1 + 2*z").str() == "[4] 1 + 2*z");
    CHECK_THROWS_AS(CycNum::parse("1+[4]z"), Error);
}

TEST_CASE("field operations agree with complex evaluation") {
    std::mt19937_64 rng(7);
    for (uint32_t m : {3u, 4u, 5u, 8u, 12u, 15u, 20u}) {
        for (int i = 0; i < 20; ++i) {
            CycNum a = random_cyc(rng, m), b = random_cyc(rng, m);
            CHECK(oracle::close(oracle::eval(a + b), oracle::eval(a) + oracle::eval(b)));
            CHECK(oracle::close(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)));
            if (!b.is_zero()) {
                CHECK(oracle::close(oracle::eval(a / b), oracle::eval(a) / oracle::eval(b)));
                CHECK(b * b.inverse() == CycNum(1));
            }
            CHECK(oracle::close(oracle::eval(a.conj()), std::conj(oracle::eval(a))));
        }
    }
}

TEST_CASE("mixed orders and embeddings") {
    std::mt19937_64 rng(11);
    CycNum a = random_cyc(rng, 4), b = random_cyc(rng, 6);
    CycNum c = a * b;
    CHECK(c.lies_in(12));
    CHECK(oracle::close(oracle::eval(c), oracle::eval(a) * oracle::eval(b)));
    CHECK(a.embed(24) == a);
    CHECK(a.embed(24).order() == 24);
    CHECK(CycNum(0).embed(8) == CycNum(0));
    CHECK(CycNum(3).embed(6).order() == 6);
    CHECK(CycNum::zeta(4).lies_in(8));
    CHECK_FALSE(CycNum::zeta(8).lies_in(4));
    CHECK(CycNum::zeta(12, 3).reduce_conductor().order() == 4);
}

TEST_CASE("galois action") {
    for (int64_t t : {1, 5, 7, 11})
        CHECK(CycNum::zeta(12).galois(t) == CycNum::zeta(12, t));
    CHECK_THROWS_AS(CycNum::zeta(12).galois(2), Error);
}

TEST_CASE("root of unity ratio") {
    CycNum a = CycNum(1) + CycNum::zeta(5);
    auto j = root_of_unity_ratio(a * CycNum::zeta(3), a);
    CHECK(j.has_value());
    CHECK_FALSE(root_of_unity_ratio(a * CycNum(2), a).has_value());
}
