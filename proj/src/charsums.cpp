#include "epsilon/charsums.hpp"

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"

namespace eps {

CycNum gauss_sum(const MultChar &chi, const AddChar &psi) {
    if (chi.field != psi.field) fail("field-mismatch", "Gauss sum of characters over different fields");
    const FqPtr &F = chi.field;
    const uint64_t n = F->order(), d = chi.order(), p = F->p();
    const uint64_t M = d * p;
    const uint64_t kd = static_cast<uint64_t>(chi.k) / (n / d);
    // chi^{-1}(g^t) psi(g^t) = zeta_M^{p (-kd t mod d) + d Tr(c g^t)}
    std::vector<int64_t> counts(M, 0);
    const uint32_t *ex = F->exp_table();
    for (uint64_t t = 0; t < n; ++t) {
        uint64_t e = (d - (kd * (t % d)) % d) % d;
        uint64_t j = F->trace_to_prime(F->mul(psi.shift, ex[t]));
        ++counts[(e * p + j * d) % M];
    }
    return -CycNum::from_counts(static_cast<uint32_t>(M), counts);
}

CycNum classical_jacobi_sum(const MultChar &chi, const MultChar &rho) {
    if (chi.field != rho.field) fail("field-mismatch", "Jacobi sum of characters over different fields");
    const FqPtr &F = chi.field;
    const uint64_t n = F->order();
    const uint64_t d = std::lcm(chi.order(), rho.order());
    const uint64_t step = n / d;
    std::vector<int64_t> counts(d, 0);
    for (uint64_t t = 0; t < n; ++t) {
        Elem x = F->exp(static_cast<int64_t>(t));
        Elem y = F->sub(1, x);
        if (y == 0) continue;
        uint64_t e = (static_cast<uint64_t>(chi.k) * t + static_cast<uint64_t>(rho.k) * F->log(y)) % n;
        ++counts[e / step];
    }
    return CycNum::from_counts(static_cast<uint32_t>(d), counts);
}

namespace {

// Exponent of chi restricted to F_q^x, as a character of the base.
int64_t restriction_exponent(const MultChar &chi, const FqPtr &base) {
    if (chi.field->p() != base->p() || chi.field->f() % base->f() != 0)
        fail("field-mismatch", chi.str() + " is not over an extension of F_" + std::to_string(base->q()));
    const int64_t n = static_cast<int64_t>(base->order());
    if (chi.field == base) return mod(chi.k, n);
    auto emb = FieldEmbedding::make(base, chi.field);
    // Image of the base generator is G^{j0 step}; chi of it is zeta_{q-1}^{k j0}.
    const uint64_t step = chi.field->order() / base->order();
    Elem img = emb->map(base->generator());
    uint64_t j0 = chi.field->log(img) / step;
    return static_cast<int64_t>((static_cast<unsigned __int128>(static_cast<uint64_t>(chi.k)) * j0) % static_cast<uint64_t>(n));
}

} // namespace

bool JacobiDatum::is_valid() const {
    const int64_t n = static_cast<int64_t>(base->order());
    int64_t s = 0;
    for (const auto &c : chars) s = (s + restriction_exponent(c, base)) % n;
    return s == 0;
}

CycNum jacobi_sum(const JacobiDatum &datum, const AddChar &psi0) {
    if (psi0.field != datum.base) fail("field-mismatch", "additive character not over the base field");
    if (!datum.is_valid()) fail("not-a-jacobi-datum", "product of the norm characters is nontrivial");
    CycNum j(1);
    for (const auto &c : datum.chars) {
        AddChar psi = add_char_inflate(psi0, c.field->f() / datum.base->f());
        j *= gauss_sum(c.inverse(), psi);
    }
    return j;
}

int64_t determinant_exponent(const TameMonodromy &V) {
    const int64_t n = static_cast<int64_t>(V.base->order());
    int64_t s = 0;
    for (const auto &c : V.chars) s = (s + restriction_exponent(c, V.base)) % n;
    return s;
}

ThetaClass jacobi_character_class(const TameMonodromy &V) {
    const uint64_t n = V.base->order();
    const uint64_t a = static_cast<uint64_t>(determinant_exponent(V));
    const uint64_t mult = n / std::gcd(n, a);
    JacobiDatum datum{V.base, {}};
    for (uint64_t r = 0; r < mult; ++r)
        datum.chars.insert(datum.chars.end(), V.chars.begin(), V.chars.end());
    CycNum j = jacobi_sum(datum, AddChar::canonical(V.base));
    return ThetaClass::of(j).pow(Rat(1, static_cast<unsigned long>(mult)));
}

Rat stickelberger_valuation(const MultChar &chi) {
    const uint64_t p = chi.field->p();
    uint64_t k = static_cast<uint64_t>(chi.k) % chi.field->order(), s = 0;
    while (k) {
        s += k % p;
        k /= p;
    }
    Rat v(static_cast<unsigned long>(s), static_cast<unsigned long>(p - 1));
    v.canonicalize();
    return v;
}

std::pair<CycNum, CycNum> hasse_davenport(const MultChar &chi, const AddChar &psi, uint32_t n) {
    if (n == 0) fail("bad-degree", "Hasse-Davenport degree must be positive");
    // tau already carries the sign, so no extra (-1)^{n+1} appears.
    CycNum lhs = gauss_sum(char_inflate(chi, n), add_char_inflate(psi, n));
    CycNum rhs = gauss_sum(chi, psi).pow(n);
    return {lhs, rhs};
}

} // namespace eps
