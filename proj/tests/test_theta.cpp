#include <doctest.h>

#include <random>

#include "epsilon/charsums.hpp"
#include "epsilon/checks.hpp"
#include "epsilon/theta.hpp"

using namespace eps;

namespace {

ThetaClass cls(long n) { return ThetaClass::of(CycNum(n)); }

} // namespace

TEST_CASE("roots of unity are trivial") {
    CHECK(theta_is_trivial(ThetaClass::of(CycNum(-1))));
    CHECK(theta_is_trivial(ThetaClass::of(CycNum::zeta(15, 4))));
    CycNum a = CycNum(1) + CycNum::zeta(5);
    CHECK(theta_eq(ThetaClass::of(a * CycNum::zeta(10, 3)), ThetaClass::of(a)));
    // 1 + zeta_5 is a unit of infinite order
    CHECK_FALSE(theta_is_trivial(ThetaClass::of(a)));
}

TEST_CASE("rational exponents and primes") {
    CHECK(theta_eq(cls(4).pow(Rat(1, 2)), cls(2)));
    CHECK(theta_eq(cls(6), cls(2) * cls(3)));
    CHECK_FALSE(theta_eq(cls(2), cls(3)));
    CHECK(theta_eq(ThetaClass::power_of(Int(5), Rat(-1)), ThetaClass::chi_cyc(5)));
    CHECK(theta_eq(ThetaClass::of_rational(Rat(9, 4)).pow(Rat(1, 2)), cls(3) / cls(2)));
}

TEST_CASE("Gauss sum classes") {
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        auto F = Fq::make(p, f);
        const ThetaClass q = ThetaClass::power_of(Int(static_cast<unsigned long>(F->q())), Rat(1));
        for (uint64_t k = 1; k + 1 < F->q(); ++k) {
            MultChar chi(F, static_cast<int64_t>(k));
            ThetaClass t = ThetaClass::of(gauss_sum(chi, AddChar::canonical(F)));
            CHECK(theta_eq(t * ThetaClass::of(gauss_sum(chi.inverse(), AddChar::canonical(F))), q));
            // changing psi multiplies tau by a character value
            CHECK(theta_eq(t, ThetaClass::of(gauss_sum(chi, AddChar(F, F->generator())))));
            if (chi.order() == 2) CHECK(theta_eq(t, q.pow(Rat(1, 2))));
        }
    }
}

TEST_CASE("valuation homomorphism") {
    CHECK(theta_p_valuation(cls(25).pow(Rat(1, 3)), 5) == Rat(2, 3));
    CHECK(theta_p_valuation(cls(7), 5) == 0);
    auto F = Fq::make(5, 1);
    ThetaClass t = ThetaClass::of(gauss_sum(MultChar(F, 1), AddChar::canonical(F)));
    CHECK(theta_p_valuation(t, 5) + theta_p_valuation(t.inverse(), 5) == 0);
    CHECK(theta_p_valuation(t.pow(Rat(4)), 5) == 4 * theta_p_valuation(t, 5));
}

TEST_CASE("randomized group laws, fixed seed") {
    CheckParams P;
    P.values["cases"] = "300";
    P.values["seed"] = "99";
    for (auto &r : check_theta_laws(P)) {
        INFO(r.input << " " << r.left);
        CHECK(r.verdict);
    }
}
