#include <doctest.h>

#include "epsilon/charsums.hpp"
#include "epsilon/error.hpp"
#include "epsilon/lfunction.hpp"
#include "epsilon/local_epsilon.hpp"

using namespace eps;

namespace {

const std::vector<const char *> kForms{"1", "x^2/(x-1)", "x+3", "1/(x^2+2)", "2*x^3"};

} // namespace

TEST_CASE("product formula for tame Kummer sheaves and several forms") {
    for (auto [p, spec] : std::vector<std::pair<uint32_t, const char *>>{
             {5, "kummer(chi[1], x*(x-1))"},
             {5, "kummer(chi[2], x^2+2) * twist([4] 1+z)"},
             {7, "kummer(chi[1], x*(x^2+1)*(x-3))"},
             {7, "kummer(chi[3], (x-1)*(x-2))"},
             {11, "kummer(chi[2], x^3+x+4)"}}) {
        auto F = Fq::make(p, 1);
        SheafExpr S = parse_sheaf_spec(F, spec);
        const ThetaClass global = global_epsilon(S).cls;
        for (const char *g : kForms) {
            INFO(spec << " with " << g);
            CHECK(theta_eq(global, local_product(S, LocalForm::parse(F, g))));
        }
    }
}

TEST_CASE("local factor at a tame point") {
    auto F = Fq::make(5, 1);
    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[2], x)");
    LocalEpsilon le = local_epsilon(S, ClosedPoint::rational(F, 0), LocalForm::dx(F));
    CHECK(le.m == 0);
    CHECK(le.ramified);
    CHECK(le.exact0 == gauss_sum(MultChar(F, 2), AddChar::canonical(F)));
    // at infinity dx has a double pole
    LocalEpsilon li = local_epsilon(S, ClosedPoint::infinity(F), LocalForm::dx(F));
    CHECK(li.m == -2);
    CHECK(li.exact0 == gauss_sum(MultChar(F, 2), AddChar::canonical(F)) / CycNum(25));
}

TEST_CASE("unramified points and change of form") {
    auto F = Fq::make(7, 1);
    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[1], x*(x-1)) * twist([3] z+2)");
    LocalForm w = LocalForm::parse(F, "(x-3)^2");
    LocalEpsilon le = local_epsilon(S, ClosedPoint::rational(F, 3), w);
    CHECK_FALSE(le.ramified);
    CHECK(le.m == 2);
    const CycNum A = CycNum::parse("[3] z+2");
    CHECK(le.exact0 == A.pow(3) * CycNum(49));
    CHECK(theta_eq(le.eps, ThetaClass::of(A * CycNum(7)).pow(Rat(2))));
}

TEST_CASE("uniformizer independence") {
    auto F = Fq::make(5, 1);
    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[1], x*(x^2+2))");
    // d(pi) for three local parameters at each bad point
    const std::vector<std::pair<std::string, std::vector<std::string>>> params{
        {"0", {"1", "1+2*x", "2+3*x^2"}},
        {"x^2+2", {"2*x", "2*x+(x^2+2)*4*x", "(2*x)*(x+1)+(x^2+2)"}},
        {"inf", {"-1/x^2", "-1/x^2-2/x^3", "-2/(x+1)^2"}}};
    for (auto &[pt, forms] : params) {
        ClosedPoint x = parse_point(F, pt);
        ThetaClass first = local_epsilon_class(S, x, LocalForm::parse(F, forms[0]));
        for (auto &g : forms) {
            LocalForm w = LocalForm::parse(F, g);
            CHECK(w.ord(x) == 0);
            CHECK(theta_eq(local_epsilon_class(S, x, w), first));
        }
    }
}

TEST_CASE("wild points") {
    auto F = Fq::make(3, 1);
    SheafExpr S = parse_sheaf_spec(F, "as(1, x^2) * kummer(chi[1], x)");
    CHECK_THROWS_AS(local_epsilon(S, ClosedPoint::infinity(F), LocalForm::dx(F)), Error);
    WildDivision w = wild_epsilon_by_global_division(S, LocalForm::dx(F));
    CHECK(w.x.at_infinity);
    // reassembling gives back the global class
    ThetaClass rest = ThetaClass::power_of(Int(3), Rat(1)) * local_epsilon(S, ClosedPoint::rational(F, 0), LocalForm::dx(F)).eps;
    CHECK(theta_eq(rest * w.cls, global_epsilon(S).cls));
    CHECK_THROWS_AS(wild_epsilon_by_global_division(parse_sheaf_spec(F, "kummer(chi[1], x)"), LocalForm::dx(F)), Error);
}

TEST_CASE("vanishing cycles of the Kummer cover") {
    auto F = Fq::make(7, 1);
    VanishingCycleData V = vanishing_cycles_kummer_cover(F, 3);
    CHECK(V.dimtot == 2);
    CHECK(V.char_field == F);
    VanishingCycleData V4 = vanishing_cycles_kummer_cover(F, 4);
    CHECK(V4.dimtot == 3);
    CHECK(V4.char_field->q() == 49);
    // n = 2: the quadratic Gauss sum, class cls(7)^{1/2}
    CHECK(theta_eq(epsilon_of_vanishing_cycles(vanishing_cycles_kummer_cover(F, 2)), ThetaClass::power_of(Int(7), Rat(1, 2))));
    CHECK_THROWS_AS(vanishing_cycles_kummer_cover(F, 7), Error);
}
