#include "epsilon/sheaf.hpp"

#include <algorithm>
#include <map>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"

namespace eps {

namespace {

// a^{-1} mod P for a coprime to P.
Poly poly_inv_mod(const Poly &a, const Poly &P) {
    const FqPtr &F = P.field();
    Poly r0 = P, r1 = poly_mod(a, P), s0(F), s1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) fail("internal", "inverse modulo a non-coprime polynomial");
    return s0.scaled(F->inv(r0.lc()));
}

Poly powmod_u128(const Poly &a, unsigned __int128 e, const Poly &m) {
    Poly r = poly_mod(Poly::constant(m.field(), 1), m), b = poly_mod(a, m);
    while (e) {
        if (e & 1) r = poly_mod(r * b, m);
        e >>= 1;
        if (e) b = poly_mod(b * b, m);
    }
    return r;
}

int64_t dlog_mod(const FqPtr &F, Elem a) { return static_cast<int64_t>(F->log(a)); }

} // namespace

RatFunc as_reduce(const RatFunc &f0, const ClosedPoint &x) {
    RatFunc f = f0;
    if (f.is_zero()) return f;
    const FqPtr &F = f.field();
    const uint32_t p = F->p();
    for (;;) {
        if (f.is_zero()) return f;
        const int m = -f.ord(x);
        if (m <= 0 || m % static_cast<int>(p) != 0) return f;
        RatFunc h;
        if (x.at_infinity) {
            Elem r = F->div(f.num().lc(), f.den().lc());
            Elem B = F->frobenius(r, F->f() - 1);   // r^{1/p}
            h = RatFunc(Poly::constant(F, B).shifted(static_cast<size_t>(m) / p));
        } else {
            Poly N0, D0;
            poly_valuation(f.num(), x.P, &N0);
            poly_valuation(f.den(), x.P, &D0);
            Poly r = poly_mod(N0 * poly_inv_mod(D0, x.P), x.P);
            // B^p = r in F_q[x]/P, a field with q^d elements.
            unsigned __int128 qd = 1;
            for (int i = 0; i < x.P.degree(); ++i) qd *= F->q();
            Poly B = powmod_u128(r, qd / p, x.P);
            h = RatFunc(B, x.P.pow(static_cast<uint64_t>(m) / p));
        }
        f = f - h.pow(p) + h;
    }
}

SheafExpr::SheafExpr(FqPtr F, std::vector<KummerFactor> kummer, std::vector<ASFactor> as, CycNum twist, std::string text)
    : F_(std::move(F)), kummer_(std::move(kummer)), as_(std::move(as)), twist_(std::move(twist)), text_(std::move(text)) {
    analyze();
}

void SheafExpr::analyze() {
    const int64_t n = static_cast<int64_t>(F_->order());
    std::map<ClosedPoint, int64_t> w;
    const_log_ = 0;
    w_inf_ = 0;
    for (auto &kf : kummer_) {
        if (kf.f.is_zero()) fail("zero-function", "Kummer argument is the zero function");
        kf.k = mod(kf.k, n);
        const_log_ = mod(const_log_ + kf.k * dlog_mod(F_, kf.f.num().lc()), n);
        for (auto &[x, o] : kf.f.divisor()) {
            if (x.at_infinity) w_inf_ = mod(w_inf_ + kf.k * o, n);
            else w[x] = mod(w[x] + kf.k * o, n);
        }
    }
    weights_.clear();
    for (auto &[x, e] : w)
        if (e != 0) weights_.emplace_back(x.P, e);

    // Artin-Schreier part: one function, reduced at each of its poles.
    as_fn_ = RatFunc::constant(F_, 0);
    for (auto &af : as_) {
        if (af.c == 0) fail("zero-function", "Artin-Schreier scalar must be nonzero");
        as_fn_ = as_fn_ + RatFunc::constant(F_, af.c) * af.f;
    }
    if (!as_fn_.is_zero()) {
        std::vector<ClosedPoint> poles;
        for (auto &[x, o] : as_fn_.divisor())
            if (o < 0) poles.push_back(x);
        for (auto &x : poles) as_fn_ = as_reduce(as_fn_, x);
    }
    std::map<ClosedPoint, int> swan;
    if (!as_fn_.is_zero())
        for (auto &[x, o] : as_fn_.divisor())
            if (o < 0) {
                if (-o % static_cast<int>(F_->p()) == 0)
                    fail("unsupported-wild-point", "pole order at " + x.str() + " stays divisible by p");
                swan[x] = -o;
            }

    bad_.clear();
    std::map<ClosedPoint, BadPoint> bad;
    for (auto &[P, e] : weights_) {
        ClosedPoint x = ClosedPoint::finite(P);
        bad[x] = BadPoint{x, e, 0};
    }
    if (w_inf_ != 0) {
        ClosedPoint x = ClosedPoint::infinity(F_);
        bad[x] = BadPoint{x, w_inf_, 0};
    }
    for (auto &[x, s] : swan) {
        auto it = bad.find(x);
        if (it == bad.end()) bad[x] = BadPoint{x, kummer_weight_at(x), s};
        else it->second.swan = s;
    }
    for (auto &[x, b] : bad) bad_.push_back(b);
}

int64_t SheafExpr::kummer_weight_at(const ClosedPoint &x) const {
    if (x.at_infinity) return w_inf_;
    for (auto &[P, e] : weights_)
        if (P == x.P) return e;
    return 0;
}

const BadPoint *SheafExpr::bad_at(const ClosedPoint &x) const {
    for (auto &b : bad_)
        if (b.x == x) return &b;
    return nullptr;
}

bool SheafExpr::is_tame() const {
    return std::all_of(bad_.begin(), bad_.end(), [](const BadPoint &b) { return b.swan == 0; });
}

CycNum trace_frobenius(const SheafExpr &S, const FqPtr &E, Elem y) {
    const FqPtr &F = S.field();
    if (E->p() != F->p() || E->f() % F->f() != 0) fail("field-mismatch", "evaluation field is not an extension");
    const uint32_t n = E->f() / F->f();
    auto emb = FieldEmbedding::make(F, E);
    const uint64_t q1 = F->order();
    const unsigned __int128 eN = emb->norm_exponent();
    unsigned __int128 e = static_cast<unsigned __int128>(n) * static_cast<uint64_t>(S.kummer_const_log());
    for (auto &[P, w] : S.kummer_weights()) {
        Elem z = poly_eval_ext(P, *emb, y);
        if (z == 0) fail("point-outside-U", "point is a tame branch point");
        e += static_cast<unsigned __int128>(static_cast<uint64_t>(w)) * ((eN * E->log(z)) % q1);
    }
    CycNum t = CycNum::zeta(static_cast<uint32_t>(q1), static_cast<int64_t>(e % q1));
    if (S.has_as() && !S.as_function().is_zero()) {
        const RatFunc &g = S.as_function();
        if (poly_eval_ext(g.den(), *emb, y) == 0) fail("point-outside-U", "point is a pole of the Artin-Schreier part");
        t *= CycNum::zeta(F->p(), E->trace_to_prime(g.eval_ext(*emb, y)));
    }
    if (!S.twist().is_one()) t *= S.twist().pow(n);
    return t;
}

CycNum trace_at_infinity(const SheafExpr &S, uint32_t n) {
    const FqPtr &F = S.field();
    ClosedPoint inf = ClosedPoint::infinity(F);
    if (S.bad_at(inf)) fail("point-outside-U", "infinity is a bad point");
    const uint64_t q1 = F->order();
    CycNum t = CycNum::zeta(static_cast<uint32_t>(q1),
                            static_cast<int64_t>((static_cast<unsigned __int128>(n) * static_cast<uint64_t>(S.kummer_const_log())) % q1));
    if (S.has_as() && !S.as_function().is_zero()) {
        auto kx = residue_field(inf);
        Elem v = S.as_function().value(inf, kx);
        t *= CycNum::zeta(F->p(), static_cast<int64_t>((static_cast<uint64_t>(n) * F->trace_to_prime(v)) % F->p()));
    }
    if (!S.twist().is_one()) t *= S.twist().pow(n);
    return t;
}

LocalInvariants local_invariants(const SheafExpr &S, const ClosedPoint &x) {
    LocalInvariants li;
    const BadPoint *b = S.bad_at(x);
    if (!b) {
        li.stalk_dim = 1;
        li.artin = 0;
        return li;
    }
    li.stalk_dim = 0;
    li.swan = b->swan;
    if (b->swan == 0) li.tame_char = char_inflate(MultChar(S.field(), b->w), x.degree());
    li.artin = li.rank + li.swan - li.stalk_dim;
    return li;
}

int64_t euler_char(const SheafExpr &S) {
    int64_t chi = 2;
    for (auto &b : S.bad_points()) chi -= static_cast<int64_t>(b.x.degree()) * (1 + b.swan);
    return chi;
}

} // namespace eps
