#include <doctest.h>

#include "epsilon/charsums.hpp"
#include "epsilon/error.hpp"
#include "epsilon/padic.hpp"

using namespace eps;

namespace {

// Minimal polynomial of a over the prime field, found by brute force over monic
// polynomials of the degree of a.
bool same_minpoly(const Fq &A, Elem a, const Fq &B, Elem b) {
    // conjugates of a in A versus conjugates of b in B: compare through the
    // elementary symmetric functions, which lie in F_p
    auto sym = [](const Fq &F, Elem x) {
        std::vector<Elem> conj{x};
        for (Elem y = F.frobenius(x); y != x; y = F.frobenius(y)) conj.push_back(y);
        std::vector<Elem> c{1};
        for (Elem r : conj) {
            std::vector<Elem> n(c.size() + 1, 0);
            for (size_t i = 0; i < c.size(); ++i) {
                n[i + 1] = F.add(n[i + 1], c[i]);
                n[i] = F.sub(n[i], F.mul(c[i], r));
            }
            c = n;
        }
        return c;
    };
    return sym(A, a) == sym(B, b);
}

} // namespace

TEST_CASE("Teichmuller lifts") {
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
        auto F = Fq::make(p, f);
        for (Elem x = 1; x < F->q(); ++x) {
            PadicUnram T = teichmuller_lift(F, x, 6);
            CHECK(T.pow(F->q()) == T);
            // reduction mod p recovers x
            std::vector<uint32_t> c;
            for (auto &v : T.coeffs()) {
                Int r = v % Int(p);
                if (r < 0) r += p;
                c.push_back(static_cast<uint32_t>(r.get_ui()));
            }
            c.resize(f, 0);
            CHECK(F->from_coeffs(c) == x);
        }
    }
}

TEST_CASE("Stickelberger against the p-adic Gauss sum") {
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}}) {
        auto F = Fq::make(p, f);
        for (uint64_t k = 0; k + 1 < F->q(); ++k) {
            MultChar chi(F, static_cast<int64_t>(k));
            CHECK(stickelberger_valuation(chi) == gauss_sum_valuation(chi, AddChar::canonical(F)));
        }
    }
}

TEST_CASE("valuations of cyclotomic numbers") {
    CHECK(cyclotomic_valuation(CycNum(Rat(50)), 5) == 2);
    CHECK(cyclotomic_valuation(CycNum(Rat(1, 9)), 3) == -2);
    CHECK(cyclotomic_valuation(CycNum(1) - CycNum::zeta(5), 5) == Rat(1, 4));
    CHECK(cyclotomic_valuation(CycNum(1) - CycNum::zeta(3), 3) == Rat(1, 2));
    CHECK(cyclotomic_valuation(CycNum::zeta(7), 5) == 0);
    CHECK(cyclotomic_valuation(CycNum(1) + CycNum::zeta(6), 2) == 0);
    // p^2 | m is outside the supported embeddings
    CHECK_THROWS_AS(cyclotomic_valuation(CycNum(1) + CycNum::zeta(4), 2), Error);
    CHECK_THROWS_AS(cyclotomic_valuation(CycNum(0), 3), Error);
}

TEST_CASE("valuation of a Gauss sum matches its p-adic value") {
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{5, 1}, {7, 1}, {3, 2}}) {
        auto F = Fq::make(p, f);
        for (uint64_t k = 1; k + 1 < F->q(); ++k) {
            MultChar chi(F, static_cast<int64_t>(k));
            CycNum tau = gauss_sum(chi, AddChar::canonical(F));
            const Rat v = cyclotomic_valuation(tau, p);
            // tau * tau(chi-bar) = chi(-1) q: valuations of the pair add to f
            CHECK(v + cyclotomic_valuation(gauss_sum(chi.inverse(), AddChar::canonical(F)), p) == Rat(f));
            CHECK(v >= 0);
            CHECK(v <= Rat(f));
        }
    }
}

TEST_CASE("compatible generators form a norm-coherent system") {
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}, {2, 6}, {3, 4}, {5, 2}, {2, 12}}) {
        auto F = Fq::make(p, f);
        Elem h = compatible_generator(F);
        CHECK(F->log(h) != 0);
        for (uint32_t d = 1; d < f; ++d) {
            if (f % d) continue;
            auto D = Fq::make(p, d);
            Elem down = F->pow(h, static_cast<int64_t>((F->q() - 1) / (D->q() - 1)));
            CHECK(same_minpoly(*F, down, *D, compatible_generator(D)));
        }
    }
    CHECK(compatible_generator(Fq::make(7, 1)) == Fq::make(7, 1)->generator());
}
