#include "epsilon/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"

namespace eps {

Poly::Poly(FqPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FqPtr &F, Elem a) { return Poly(F, {a}); }
Poly Poly::x(const FqPtr &F) { return Poly(F, {0, 1}); }
Poly Poly::linear(const FqPtr &F, Elem a) { return Poly(F, {F->neg(a), 1}); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(F_->inv(lc()));
}

Poly Poly::derivative() const {
    std::vector<Elem> d(c_.size() > 1 ? c_.size() - 1 : 0);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<int64_t>(i % F_->p())));
    return Poly(F_, d);
}

Poly Poly::scaled(Elem a) const {
    std::vector<Elem> d(c_);
    for (auto &v : d) v = F_->mul(v, a);
    return Poly(F_, d);
}

Poly Poly::shifted(size_t k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> d(k, 0);
    d.insert(d.end(), c_.begin(), c_.end());
    return Poly(F_, d);
}

Elem Poly::eval(Elem a) const {
    Elem acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, a), c_[i]);
    return acc;
}

Poly operator+(const Poly &a, const Poly &b) {
    const FqPtr &F = a.F_ ? a.F_ : b.F_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F->add(a.coeff(i), b.coeff(i));
    return Poly(F, c);
}

Poly operator-(const Poly &a, const Poly &b) {
    const FqPtr &F = a.F_ ? a.F_ : b.F_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F->sub(a.coeff(i), b.coeff(i));
    return Poly(F, c);
}

Poly operator*(const Poly &a, const Poly &b) {
    const FqPtr &F = a.F_ ? a.F_ : b.F_;
    if (a.c_.empty() || b.c_.empty()) return Poly(F);
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F->add(c[i + j], F->mul(a.c_[i], b.c_[j]));
    }
    return Poly(F, c);
}

Poly Poly::pow(uint64_t e) const {
    Poly r = constant(F_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string Poly::str(const std::string &var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        std::string coef = F_->str(c_[i]);
        bool compound = coef.find('+') != std::string::npos || coef.find('*') != std::string::npos ||
                        coef.find('^') != std::string::npos;
        if (compound && i > 0) coef = "(" + coef + ")";
        std::string term;
        if (i == 0) term = coef;
        else {
            term = coef == "1" ? "" : coef + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s;
}

int Poly::compare(const Poly &o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    return 0;
}

void poly_divmod(const Poly &a, const Poly &b, Poly &q, Poly &r) {
    if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
    const FqPtr &F = b.field();
    std::vector<Elem> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        q = Poly(F);
        r = Poly(F, rem);
        return;
    }
    std::vector<Elem> quo(static_cast<size_t>(a.degree() - db + 1), 0);
    const Elem inv = F->inv(b.lc());
    for (int i = a.degree(); i >= db; --i) {
        Elem c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        Elem t = F->mul(c, inv);
        quo[static_cast<size_t>(i - db)] = t;
        for (int j = 0; j <= db; ++j) {
            size_t k = static_cast<size_t>(i - db + j);
            rem[k] = F->sub(rem[k], F->mul(t, b.coeffs()[static_cast<size_t>(j)]));
        }
    }
    rem.resize(static_cast<size_t>(db));
    q = Poly(F, quo);
    r = Poly(F, rem);
}

Poly poly_div(const Poly &a, const Poly &b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    return q;
}

Poly poly_mod(const Poly &a, const Poly &b) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    return r;
}

Poly poly_gcd(const Poly &a0, const Poly &b0) {
    Poly a = a0, b = b0;
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_powmod(const Poly &a, uint64_t e, const Poly &m) {
    Poly r = poly_mod(Poly::constant(m.field(), 1), m), b = poly_mod(a, m);
    while (e) {
        if (e & 1) r = poly_mod(r * b, m);
        e >>= 1;
        if (e) b = poly_mod(b * b, m);
    }
    return r;
}

namespace {

Poly powmod_big(const Poly &a, const Int &e, const Poly &m) {
    Poly r = poly_mod(Poly::constant(m.field(), 1), m), b = poly_mod(a, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = poly_mod(r * r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mod(r * b, m);
    }
    return r;
}

// p-th root of a polynomial whose exponents are all multiples of p.
Poly poly_pth_root(const Poly &a) {
    const FqPtr &F = a.field();
    const uint32_t p = F->p();
    std::vector<Elem> c(static_cast<size_t>(a.degree()) / p + 1, 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F->frobenius(a.coeff(i * p), F->f() - 1);
    return Poly(F, c);
}

void square_free(const Poly &f, int mult, std::vector<std::pair<Poly, int>> &out) {
    const uint32_t p = f.field()->p();
    if (f.degree() <= 0) return;
    Poly g = f.derivative();
    if (g.is_zero()) {
        square_free(poly_pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    Poly c = poly_gcd(f, g);
    Poly w = poly_div(f, c);
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_div(w, y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = poly_div(c, y);
    }
    if (c.degree() > 0) square_free(poly_pth_root(c), mult * static_cast<int>(p), out);
}

void equal_degree(const Poly &f, int d, std::mt19937_64 &rng, std::vector<Poly> &out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const FqPtr &F = f.field();
    Int qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), F->q(), static_cast<unsigned long>(d));
    for (;;) {
        std::vector<Elem> c(static_cast<size_t>(f.degree()));
        for (auto &v : c) v = static_cast<Elem>(rng() % F->q());
        Poly a(F, c);
        if (a.degree() <= 0) continue;
        Poly b;
        if (F->p() == 2) {
            // Absolute trace of a to F_2, over F_{q^d} of degree f*d over F_2.
            Poly t = poly_mod(a, f), acc = t;
            for (uint32_t i = 1; i < F->f() * static_cast<uint32_t>(d); ++i) {
                t = poly_mod(t * t, f);
                acc = acc + t;
            }
            b = acc;
        } else {
            b = powmod_big(a, (qd - 1) / 2, f) - Poly::constant(F, 1);
        }
        Poly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(poly_div(f, g), d, rng, out);
            return;
        }
    }
}

void distinct_degree(Poly f, std::vector<Poly> &out) {
    const FqPtr &F = f.field();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    Poly X = Poly::x(F), h = X;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = poly_powmod(h, F->q(), f);
        Poly g = poly_gcd(f, h - X);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            f = poly_div(f, g);
            h = poly_mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f.monic());
}

} // namespace

std::vector<std::pair<Poly, int>> poly_factor(const Poly &a) {
    if (a.is_zero()) fail("zero-function", "factorisation of the zero polynomial");
    std::vector<std::pair<Poly, int>> sf, out;
    square_free(a.monic(), 1, sf);
    for (auto &[g, m] : sf) {
        std::vector<Poly> irr;
        distinct_degree(g, irr);
        for (auto &P : irr) out.emplace_back(P, m);
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.first.compare(y.first) < 0; });
    // Merge repeated factors coming from different square-free parts.
    std::vector<std::pair<Poly, int>> merged;
    for (auto &e : out) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
    }
    return merged;
}

bool poly_is_irreducible(const Poly &a) {
    if (a.degree() <= 0) return false;
    auto f = poly_factor(a);
    return f.size() == 1 && f[0].second == 1;
}

int poly_valuation(const Poly &a, const Poly &P, Poly *rest) {
    if (a.is_zero()) fail("zero-function", "valuation of the zero polynomial");
    int k = 0;
    Poly cur = a;
    for (;;) {
        Poly q, r;
        poly_divmod(cur, P, q, r);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++k;
    }
    if (rest) *rest = cur;
    return k;
}

ClosedPoint ClosedPoint::infinity(const FqPtr &F) {
    ClosedPoint x;
    x.at_infinity = true;
    x.P = Poly(F);
    return x;
}

ClosedPoint ClosedPoint::finite(const Poly &P) {
    if (P.degree() < 1 || P.lc() != 1) fail("bad-point", "closed points are given by monic irreducible polynomials");
    ClosedPoint x;
    x.P = P;
    return x;
}

std::string ClosedPoint::str() const { return at_infinity ? "inf" : P.str(); }

bool operator<(const ClosedPoint &a, const ClosedPoint &b) {
    if (a.at_infinity != b.at_infinity) return b.at_infinity;
    if (a.at_infinity) return false;
    return a.P.compare(b.P) < 0;
}

Elem poly_eval_ext(const Poly &a, const FieldEmbedding &emb, Elem y) {
    const FqPtr &E = emb.big();
    Elem acc = 0;
    const auto &c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = E->add(E->mul(acc, y), emb.map(c[i]));
    return acc;
}

ResidueField residue_field(const ClosedPoint &x) {
    const FqPtr &F = x.field();
    ResidueField r;
    if (x.at_infinity || x.P.degree() == 1) {
        r.field = F;
        r.emb = FieldEmbedding::make(F, F);
        r.root = x.at_infinity ? 0 : F->neg(x.P.coeff(0));
        return r;
    }
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<Elem>>, ResidueField> cache;
    auto key = std::make_tuple(F->p(), F->f(), x.P.coeffs());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.emb->small() == F) return it->second;
    }
    r.field = field_extend(F, static_cast<uint32_t>(x.P.degree()));
    r.emb = FieldEmbedding::make(F, r.field);
    bool found = false;
    for (uint64_t y = 0; y < r.field->q(); ++y) {
        if (poly_eval_ext(x.P, *r.emb, static_cast<Elem>(y)) == 0) {
            r.root = static_cast<Elem>(y);
            found = true;
            break;
        }
    }
    if (!found) fail("internal", "no root of " + x.P.str() + " in its residue field");
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = r;
    return r;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
RatFunc::RatFunc(const Poly &num) : num_(num), den_(Poly::constant(num.field(), 1)) { normalize(); }

RatFunc RatFunc::constant(const FqPtr &F, Elem a) { return RatFunc(Poly::constant(F, a)); }

void RatFunc::normalize() {
    if (den_.is_zero()) fail("division-by-zero", "rational function with zero denominator");
    const FqPtr F = den_.field();
    if (!num_.field()) num_ = Poly(F);
    if (num_.is_zero()) {
        den_ = Poly::constant(F, 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_div(num_, g);
        den_ = poly_div(den_, g);
    }
    Elem inv = F->inv(den_.lc());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

RatFunc operator+(const RatFunc &a, const RatFunc &b) { return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
RatFunc operator-(const RatFunc &a, const RatFunc &b) { return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
RatFunc operator*(const RatFunc &a, const RatFunc &b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero()) fail("division-by-zero", "division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int64_t e) const {
    if (e < 0) {
        if (is_zero()) fail("division-by-zero", "negative power of the zero function");
        return RatFunc(den_.pow(static_cast<uint64_t>(-e)), num_.pow(static_cast<uint64_t>(-e)));
    }
    return RatFunc(num_.pow(static_cast<uint64_t>(e)), den_.pow(static_cast<uint64_t>(e)));
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::ord(const ClosedPoint &x) const {
    if (is_zero()) fail("zero-function", "order of the zero function");
    if (x.at_infinity) return den_.degree() - num_.degree();
    return poly_valuation(num_, x.P) - poly_valuation(den_, x.P);
}

Elem RatFunc::value(const ClosedPoint &x, const ResidueField &kx) const {
    if (is_zero()) return 0;
    int o = ord(x);
    if (o < 0) fail("pole", "rational function has a pole at " + x.str());
    if (o > 0) return 0;
    if (x.at_infinity) {
        const FqPtr &F = field();
        return kx.emb->map(F->div(num_.lc(), den_.lc()));
    }
    const FqPtr &E = kx.field;
    return E->div(poly_eval_ext(num_, *kx.emb, kx.root), poly_eval_ext(den_, *kx.emb, kx.root));
}

Elem RatFunc::eval_ext(const FieldEmbedding &emb, Elem y) const {
    Elem d = poly_eval_ext(den_, emb, y);
    if (d == 0) fail("pole", "evaluation at a pole");
    return emb.big()->div(poly_eval_ext(num_, emb, y), d);
}

std::vector<std::pair<ClosedPoint, int>> RatFunc::divisor() const {
    if (is_zero()) fail("zero-function", "divisor of the zero function");
    std::map<ClosedPoint, int> d;
    if (num_.degree() > 0)
        for (auto &[P, m] : poly_factor(num_)) d[ClosedPoint::finite(P)] += m;
    if (den_.degree() > 0)
        for (auto &[P, m] : poly_factor(den_)) d[ClosedPoint::finite(P)] -= m;
    int oi = den_.degree() - num_.degree();
    if (oi != 0) d[ClosedPoint::infinity(field())] += oi;
    std::vector<std::pair<ClosedPoint, int>> out;
    for (auto &[x, m] : d)
        if (m != 0) out.emplace_back(x, m);
    return out;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace eps
