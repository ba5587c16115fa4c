#include "epsilon/padic.hpp"

#include <map>
#include <numeric>
#include <mutex>
#include <tuple>

#include "epsilon/error.hpp"

namespace eps {

namespace {

uint32_t vp_int(const Int &x, uint32_t p, uint32_t cap) {
    if (sgn(x) == 0) return cap;
    Int t = x;
    uint32_t v = 0;
    while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

int64_t vp_rat(const Int &x, uint32_t p) {
    Int t = abs(x);
    int64_t v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
        ++v;
    }
    return v;
}

} // namespace

std::shared_ptr<const PadicContext> PadicContext::make(const FqPtr &F, uint32_t K) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::shared_ptr<const PadicContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(F->p(), F->f(), K);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->field == F) return it->second;
    auto c = std::make_shared<PadicContext>();
    c->field = F;
    c->K = K;
    mpz_ui_pow_ui(c->pK.get_mpz_t(), F->p(), K);
    for (uint32_t v : F->modulus()) c->modulus.emplace_back(static_cast<unsigned long>(v));
    cache[key] = c;
    return c;
}

PadicUnram::PadicUnram(PadicCtxPtr ctx, long v) : ctx_(std::move(ctx)), c_(ctx_->field->f(), Int(0)) {
    c_[0] = v;
    reduce();
}

PadicUnram::PadicUnram(PadicCtxPtr ctx, std::vector<Int> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    reduce();
}

void PadicUnram::reduce() {
    const size_t f = ctx_->field->f();
    const auto &m = ctx_->modulus;
    for (size_t i = c_.size(); i-- > f;) {
        if (sgn(c_[i]) == 0) continue;
        Int c = c_[i];
        for (size_t j = 0; j < f; ++j)
            if (sgn(m[j]) != 0) c_[i - f + j] -= c * m[j];
    }
    c_.resize(f, Int(0));
    for (auto &x : c_) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), ctx_->pK.get_mpz_t());
}

bool PadicUnram::is_zero() const {
    for (const auto &x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

uint32_t PadicUnram::valuation() const {
    uint32_t v = ctx_->K;
    for (const auto &x : c_) v = std::min(v, vp_int(x, ctx_->field->p(), ctx_->K));
    return v;
}

PadicUnram operator+(const PadicUnram &a, const PadicUnram &b) {
    std::vector<Int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return PadicUnram(a.ctx_, std::move(c));
}

PadicUnram operator-(const PadicUnram &a, const PadicUnram &b) {
    std::vector<Int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return PadicUnram(a.ctx_, std::move(c));
}

PadicUnram operator*(const PadicUnram &a, const PadicUnram &b) {
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return PadicUnram(a.ctx_, std::move(c));
}

PadicUnram PadicUnram::pow(uint64_t e) const {
    PadicUnram r(ctx_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

PadicUnram PadicUnram::scaled(const Int &s) const {
    std::vector<Int> c = c_;
    for (auto &x : c) x *= s;
    return PadicUnram(ctx_, std::move(c));
}

namespace {

// lambda^{p-1} = -sum_{i < p-1} C(p, i+1) lambda^i
std::vector<Int> eisenstein_relation(uint32_t p) {
    std::vector<Int> r(p - 1);
    for (uint32_t i = 0; i + 1 < p; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), p, i + 1);
        r[i] = -b;
    }
    return r;
}

} // namespace

EisensteinElem::EisensteinElem(const PadicUnram &c0) {
    const uint32_t p = c0.ctx()->field->p();
    c_.assign(p - 1, PadicUnram(c0.ctx(), 0));
    c_[0] = c0;
}

EisensteinElem EisensteinElem::lambda(const PadicCtxPtr &ctx) {
    const uint32_t p = ctx->field->p();
    EisensteinElem e{PadicUnram(ctx, 0)};
    if (p == 2) {
        e.c_[0] = PadicUnram(ctx, -2);
    } else {
        e.c_[1] = PadicUnram(ctx, 1);
    }
    return e;
}

EisensteinElem EisensteinElem::one_plus_lambda_pow(const PadicCtxPtr &ctx, uint64_t e) {
    EisensteinElem base = lambda(ctx) + EisensteinElem(PadicUnram(ctx, 1));
    return base.pow(e % ctx->field->p());
}

EisensteinElem operator+(const EisensteinElem &a, const EisensteinElem &b) {
    EisensteinElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

EisensteinElem operator-(const EisensteinElem &a, const EisensteinElem &b) {
    EisensteinElem r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

EisensteinElem operator*(const EisensteinElem &a, const EisensteinElem &b) {
    const auto &ctx = a.ctx();
    const uint32_t p = ctx->field->p();
    const size_t n = p - 1;
    std::vector<PadicUnram> c(2 * n - 1, PadicUnram(ctx, 0));
    for (size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
    }
    static thread_local std::map<uint32_t, std::vector<Int>> rel_cache;
    auto it = rel_cache.find(p);
    if (it == rel_cache.end()) it = rel_cache.emplace(p, eisenstein_relation(p)).first;
    const auto &rel = it->second;
    for (size_t k = c.size(); k-- > n;) {
        if (c[k].is_zero()) continue;
        PadicUnram top = c[k];
        for (size_t i = 0; i < n; ++i) c[k - n + i] = c[k - n + i] + top.scaled(rel[i]);
    }
    c.resize(n, PadicUnram(ctx, 0));
    EisensteinElem r;
    r.c_ = std::move(c);
    return r;
}

EisensteinElem EisensteinElem::scaled(const PadicUnram &s) const {
    EisensteinElem r = *this;
    for (auto &x : r.c_) x = x * s;
    return r;
}

EisensteinElem EisensteinElem::pow(uint64_t e) const {
    EisensteinElem r{PadicUnram(ctx(), 1)}, b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

PadicUnram teichmuller_lift(const FqPtr &F, Elem x, uint32_t K) {
    if (x == 0) fail("zero-input", "Teichmuller lift of zero");
    auto ctx = PadicContext::make(F, K);
    std::vector<Int> c;
    for (uint32_t v : F->coeffs(x)) c.emplace_back(static_cast<unsigned long>(v));
    PadicUnram t(ctx, std::move(c));
    for (uint32_t i = 0; i < K; ++i) t = t.pow(F->q());
    return t;
}

Rat padic_valuation(const EisensteinElem &e) {
    const auto &ctx = e.ctx();
    const uint32_t p = ctx->field->p(), K = ctx->K;
    bool found = false;
    Rat best;
    const auto &c = e.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        uint32_t v = c[i].valuation();
        if (v >= K) continue;
        Rat cand = Rat(v) + Rat(static_cast<long>(i), static_cast<long>(p - 1));
        cand.canonicalize();
        if (!found || cand < best) best = cand;
        found = true;
    }
    if (!found) fail("precision-exhausted", "all coordinates vanish modulo p^" + std::to_string(K));
    return best;
}

EisensteinElem gauss_sum_padic(const MultChar &chi, const AddChar &psi, uint32_t K) {
    const FqPtr &F = chi.field;
    if (psi.field != F) fail("field-mismatch", "characters over different fields");
    auto ctx = PadicContext::make(F, K);
    const uint64_t n = F->order();
    const uint32_t p = F->p();
    PadicUnram T = teichmuller_lift(F, F->generator(), K);
    std::vector<PadicUnram> Tpow;
    Tpow.reserve(n);
    Tpow.emplace_back(ctx, 1);
    for (uint64_t i = 1; i < n; ++i) Tpow.push_back(Tpow.back() * T);
    // S_j = sum over a with Tr(c a) = j of Teich(a)^{-k}
    std::vector<PadicUnram> S(p, PadicUnram(ctx, 0));
    for (uint64_t t = 0; t < n; ++t) {
        Elem a = F->exp(static_cast<int64_t>(t));
        uint64_t e = static_cast<uint64_t>(mod(-static_cast<int64_t>((static_cast<unsigned __int128>(chi.k) * t) % n), static_cast<int64_t>(n)));
        uint32_t j = psi.exponent_at(a);
        S[j] = S[j] + Tpow[e];
    }
    EisensteinElem zeta = EisensteinElem::lambda(ctx) + EisensteinElem(PadicUnram(ctx, 1));
    EisensteinElem acc{PadicUnram(ctx, 0)}, zj{PadicUnram(ctx, 1)};
    for (uint32_t j = 0; j < p; ++j) {
        acc = acc + zj.scaled(S[j]);
        zj = zj * zeta;
    }
    return EisensteinElem(PadicUnram(ctx, 0)) - acc;
}

Rat gauss_sum_valuation(const MultChar &chi, const AddChar &psi) {
    for (uint32_t K = kDefaultPadicPrecision;; K *= 2) {
        try {
            return padic_valuation(gauss_sum_padic(chi, psi, K));
        } catch (const Error &e) {
            if (e.code() != "precision-exhausted" || K > 256) throw;
        }
    }
}

namespace {

// minimal polynomial over F_p of a, low coefficient first
std::vector<uint32_t> prime_minpoly(const Fq &F, Elem a) {
    std::vector<Elem> c{1};
    Elem r = a;
    do {
        std::vector<Elem> n(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            n[i + 1] = F.add(n[i + 1], c[i]);
            n[i] = F.sub(n[i], F.mul(c[i], r));
        }
        c = std::move(n);
        r = F.frobenius(r);
    } while (r != a);
    return {c.begin(), c.end()};
}

bool is_root(const Fq &F, const std::vector<uint32_t> &poly, Elem y) {
    Elem acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, y), F.from_int(poly[i]));
    return acc == 0;
}

} // namespace

Elem compatible_generator(const FqPtr &F) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, Elem> cache;
    const auto key = std::make_pair(F->p(), F->f());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Elem h = F->generator();
    if (F->f() > 1) {
        const uint64_t Q1 = F->q() - 1;
        struct Constraint { uint64_t mod; std::vector<char> ok; };
        std::vector<Constraint> cons;
        for (auto [r, e] : factorize(F->f())) {
            (void)e;
            const FqPtr Fd = Fq::make(F->p(), F->f() / static_cast<uint32_t>(r));
            const auto mp = prime_minpoly(*Fd, compatible_generator(Fd));
            Constraint c{Fd->q() - 1, std::vector<char>(Fd->q() - 1, 0)};
            const uint64_t step = Q1 / c.mod;
            for (uint64_t s = 0; s < c.mod; ++s) c.ok[s] = is_root(*F, mp, F->exp(static_cast<int64_t>(s * step)));
            cons.push_back(std::move(c));
        }
        uint64_t t = 1;
        for (; t < Q1; ++t) {
            if (std::gcd(t, Q1) != 1) continue;
            bool good = true;
            for (auto &c : cons) good = good && c.ok[t % c.mod];
            if (good) break;
        }
        if (t == Q1) fail("internal", "no compatible generator for F_" + std::to_string(F->q()));
        h = F->exp(static_cast<int64_t>(t));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, h);
    return h;
}

Rat cyclotomic_valuation(const CycNum &a, uint32_t p) {
    if (a.is_zero()) fail("zero-input", "valuation of zero");
    if (a.is_rational()) {
        Rat r = a.rational_value();
        return Rat(vp_rat(r.get_num(), p) - vp_rat(r.get_den(), p));
    }
    const uint32_t m = a.order();
    uint32_t mp = m, e = 0;
    while (mp % p == 0) { mp /= p; ++e; }
    if (e > 1) fail("unembeddable-base", "order " + std::to_string(m) + " is divisible by p^2");
    const uint32_t fp = static_cast<uint32_t>(mult_order(p % mp == 0 ? 1 : p, mp));
    FqPtr F;
    try {
        F = Fq::make(p, fp);
    } catch (const Error &) {
        fail("unembeddable-base", "unramified part of Q(zeta_" + std::to_string(m) + ") is too large");
    }
    for (uint32_t K = kDefaultPadicPrecision;; K *= 2) {
        auto ctx = PadicContext::make(F, K);
        PadicUnram T = teichmuller_lift(F, compatible_generator(F), K).pow((F->q() - 1) / mp);
        EisensteinElem Z{T};
        if (e == 1) {
            uint64_t ea = static_cast<uint64_t>(inv_mod(mp % p, p));
            uint64_t eb = mp == 1 ? 0 : static_cast<uint64_t>(inv_mod(p % mp, mp));
            Z = EisensteinElem::one_plus_lambda_pow(ctx, ea).scaled(T.pow(eb));
        }
        EisensteinElem acc{PadicUnram(ctx, 0)}, zi{PadicUnram(ctx, 1)};
        const auto &num = a.numerators();
        for (size_t i = 0; i < num.size(); ++i) {
            if (sgn(num[i]) != 0) acc = acc + zi.scaled(PadicUnram(ctx, std::vector<Int>{num[i]}));
            zi = zi * Z;
        }
        try {
            Rat v = padic_valuation(acc);
            return v - Rat(vp_rat(a.denominator(), p));
        } catch (const Error &err) {
            if (err.code() != "precision-exhausted" || K > 512) throw;
        }
    }
}

} // namespace eps
