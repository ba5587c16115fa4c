#include <doctest.h>

#include <random>
#include <set>

#include "epsilon/arith.hpp"
#include "epsilon/field.hpp"
#include "oracle.hpp"

using namespace eps;

TEST_CASE("defining polynomial and generator") {
    auto F4 = Fq::make(2, 2);
    CHECK(F4->modulus() == std::vector<uint32_t>{1, 1, 1});   // x^2 + x + 1
    auto F9 = Fq::make(3, 2);
    CHECK(F9->modulus() == std::vector<uint32_t>{1, 0, 1});   // x^2 + 1
    // x is not primitive in F_9 = F_3[x]/(x^2+1); the smallest primitive index is x + 1
    CHECK(F9->generator() == 4);
    CHECK(Fq::make(7, 1)->generator() == 3);
    CHECK(Fq::make(13, 1)->generator() == 2);
    CHECK(Fq::make(5, 2) == Fq::make(5, 2));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(3);
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 4}, {3, 2}, {5, 2}, {7, 1}, {3, 5}}) {
        auto F = Fq::make(p, f);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F->q() - 1));
        for (int i = 0; i < 200; ++i) {
            Elem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, F->neg(a)) == 0);
            CHECK(F->frobenius(a, f) == a);
            if (a) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->exp(F->log(a)) == a);
                CHECK(F->log(a) == oracle::dlog(*F, a));
            }
            CHECK(F->trace_to_prime(a) == oracle::trace(*F, a));
        }
        std::set<Elem> powers;
        for (uint64_t e = 0; e + 1 < F->q(); ++e) powers.insert(F->exp(static_cast<int64_t>(e)));
        CHECK(powers.size() == F->q() - 1);
    }
}

TEST_CASE("subfield embeddings") {
    for (auto [p, a, b] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{{2, 1, 4}, {2, 2, 4}, {3, 1, 2}, {3, 2, 4}, {5, 1, 2}}) {
        auto S = Fq::make(p, a), B = Fq::make(p, b);
        auto E = FieldEmbedding::make(S, B);
        std::mt19937_64 rng(p * 100 + b);
        std::uniform_int_distribution<Elem> ps(0, static_cast<Elem>(S->q() - 1)), pb(1, static_cast<Elem>(B->q() - 1));
        for (int i = 0; i < 100; ++i) {
            Elem x = ps(rng), y = ps(rng);
            CHECK(E->map(S->mul(x, y)) == B->mul(E->map(x), E->map(y)));
            CHECK(E->map(S->add(x, y)) == B->add(E->map(x), E->map(y)));
            CHECK(E->preimage(E->map(x)) == x);
            Elem u = pb(rng), v = pb(rng);
            CHECK(E->norm(B->mul(u, v)) == S->mul(E->norm(u), E->norm(v)));
            CHECK(E->trace(B->add(u, v)) == S->add(E->trace(u), E->trace(v)));
        }
        CHECK(E->norm(B->generator()) == S->exp(static_cast<int64_t>(E->norm_exponent())));
    }
}

TEST_CASE("arith helpers") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(euler_phi(36) == 12);
    CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(rat(2, -4) == Rat(-1, 2));
}
