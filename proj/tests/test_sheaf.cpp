#include <doctest.h>

#include "epsilon/error.hpp"
#include "epsilon/sheaf.hpp"
#include "oracle.hpp"

using namespace eps;

TEST_CASE("Kummer sheaf on G_m") {
    auto F = Fq::make(5, 1);
    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[2], x)");
    REQUIRE(S.bad_points().size() == 2);
    CHECK(S.bad_points()[0].x == ClosedPoint::rational(F, 0));
    CHECK(S.bad_points()[1].x.at_infinity);
    CHECK(S.is_tame());
    CHECK(euler_char(S) == 0);
    // chi of order 4 on x^2: the weight 2 gives the quadratic character
    SheafExpr T = parse_sheaf_spec(F, "kummer(chi[1], x^2)");
    CHECK(T.bad_points().size() == 2);
    // chi^4 = 1: no bad point at all
    SheafExpr U = parse_sheaf_spec(F, "kummer(chi[1], x^4)");
    CHECK(U.bad_points().empty());
    CHECK(euler_char(U) == 2);
}

TEST_CASE("Artin-Schreier sheaves") {
    auto F = Fq::make(3, 1);
    SheafExpr S = parse_sheaf_spec(F, "as(1, x)");
    REQUIRE(S.bad_points().size() == 1);
    CHECK(S.bad_points()[0].swan == 1);
    CHECK(euler_char(S) == 0);
    // x^3 reduces to x at infinity
    CHECK(as_reduce(parse_ratfunc(F, "x^3"), ClosedPoint::infinity(F)) == RatFunc::x(F));
    SheafExpr T = parse_sheaf_spec(F, "as(1, 1/x)");
    auto inv = local_invariants(T, ClosedPoint::rational(F, 0));
    CHECK(inv.swan == 1);
    CHECK(inv.artin == 2);
    // x^3 - x is h^p - h: trivial
    CHECK(parse_sheaf_spec(F, "as(1, x^3-x)").bad_points().empty());
}

TEST_CASE("constant sheaf") {
    auto F = Fq::make(7, 1);
    SheafExpr S = parse_sheaf_spec(F, "const");
    CHECK(S.is_constant());
    CHECK(euler_char(S) == 2);
    CHECK(trace_frobenius(S, F, 3) == CycNum(1));
}

TEST_CASE("traces against direct character evaluation") {
    for (uint32_t p : {5u, 7u}) {
        auto F = Fq::make(p, 1);
        SheafExpr S = parse_sheaf_spec(F, "kummer(chi[1], x*(x-1)^2) * as(2, x^2+1/x) * twist([4] 1+z)");
        const CycNum tw = CycNum::parse("[4] 1+z");
        for (Elem y = 2; y < p; ++y) {
            Elem fy = F->mul(y, F->mul(F->sub(y, 1), F->sub(y, 1)));
            Elem gy = F->add(F->mul(y, y), F->inv(y));
            CycNum expect = char_eval(MultChar(F, 1), fy) * add_char_eval(AddChar(F, 2), gy) * tw;
            CHECK(trace_frobenius(S, F, y) == expect);
        }
        // over F_{p^2} the trace uses the norm and trace of the extension
        auto E = Fq::make(p, 2);
        auto emb = FieldEmbedding::make(F, E);
        for (Elem y = p; y < p + 6; ++y) {
            Elem fy = E->mul(y, E->mul(E->sub(y, 1), E->sub(y, 1)));
            Elem gy = E->add(E->mul(y, y), E->inv(y));
            CycNum expect = char_eval(MultChar(F, 1), emb->norm(fy)) * add_char_eval(AddChar(F, 2), emb->trace(gy)) * tw.pow(2);
            CHECK(trace_frobenius(S, E, y) == expect);
        }
    }
}

TEST_CASE("bad input") {
    auto F = Fq::make(5, 1);
    CHECK_THROWS_AS(parse_sheaf_spec(F, "kummer(chi[1]"), Error);
    CHECK_THROWS_AS(parse_sheaf_spec(F, "sheaf(1, x)"), Error);
    CHECK_THROWS_AS(parse_sheaf_spec(F, "kummer(chi[1], 0)"), Error);
}
