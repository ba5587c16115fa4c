#include "epsilon/field.hpp"

#include <map>
#include <tuple>
#include <mutex>
#include <sstream>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"

namespace eps {

namespace {

using PPoly = std::vector<uint32_t>;   // over F_p, low degree first

void ptrim(PPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly &a, const PPoly &b, const PPoly &m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    const size_t n = m.size() - 1;   // m monic
    for (size_t i = r.size(); i-- > n;) {
        uint64_t c = r[i];
        if (!c) continue;
        for (size_t j = 0; j <= n; ++j) r[i - n + j] = (r[i - n + j] + (p - c) * m[j]) % p;
    }
    PPoly out(r.begin(), r.begin() + std::min(r.size(), n));
    ptrim(out);
    return out;
}

PPoly ppowmod(PPoly a, uint64_t e, const PPoly &m, uint32_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, a, m, p);
        e >>= 1;
        if (e) a = pmulmod(a, a, m, p);
    }
    return r;
}

PPoly pmod(PPoly a, const PPoly &b, uint32_t p) {
    ptrim(a);
    const size_t n = b.size() - 1;
    uint64_t inv_lead = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        uint64_t c = a.back() * inv_lead % p;
        size_t s = a.size() - b.size();
        for (size_t j = 0; j <= n; ++j) a[s + j] = static_cast<uint32_t>((a[s + j] + (p - c) * b[j]) % p);
        ptrim(a);
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const PPoly &m, uint32_t p) {
    const uint32_t n = static_cast<uint32_t>(m.size() - 1);
    if (n == 1) return true;
    PPoly x{0, 1};
    // x^{p^k} mod m for k = 1..n
    std::vector<PPoly> frob(n + 1);
    frob[0] = x;
    for (uint32_t k = 1; k <= n; ++k) frob[k] = ppowmod(frob[k - 1], p, m, p);
    PPoly d = frob[n];
    d.resize(std::max<size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    ptrim(d);
    if (!d.empty()) return false;
    for (auto [r, e] : factorize(n)) {
        PPoly t = frob[n / r];
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        ptrim(t);
        PPoly g = pgcd(m, t, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::map<std::pair<uint32_t, uint32_t>, FqPtr> &field_cache() {
    static std::map<std::pair<uint32_t, uint32_t>, FqPtr> c;
    return c;
}
std::mutex &field_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

FqPtr Fq::make(uint32_t p, uint32_t f) {
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    if (f == 0) fail("bad-degree", "field degree must be positive");
    std::lock_guard<std::mutex> lock(field_mutex());
    auto key = std::make_pair(p, f);
    auto it = field_cache().find(key);
    if (it != field_cache().end()) return it->second;
    auto F = std::make_shared<const Fq>(p, f);
    field_cache().emplace(key, F);
    return F;
}

void Fq::clear_cache() {
    std::lock_guard<std::mutex> lock(field_mutex());
    field_cache().clear();
}

Fq::Fq(uint32_t p, uint32_t f) : p_(p), f_(f), q_(ipow(p, f)) {
    if (q_ > kMaxTabulatedField)
        fail("field-too-large", "F_" + std::to_string(p) + "^" + std::to_string(f) + " exceeds the table limit");
    // Defining polynomial.
    const uint64_t lower = q_;   // p^f choices for the lower coefficients
    for (uint64_t enc = 0; enc < lower; ++enc) {
        PPoly m(f + 1);
        uint64_t t = enc;
        for (uint32_t i = 0; i < f; ++i) { m[i] = static_cast<uint32_t>(t % p); t /= p; }
        m[f] = 1;
        if (f == 1 || is_irreducible(m, p)) {
            modulus_ = m;
            break;
        }
    }
    auto to_poly = [&](uint64_t idx) {
        PPoly a(f);
        for (uint32_t i = 0; i < f; ++i) { a[i] = static_cast<uint32_t>(idx % p); idx /= p; }
        ptrim(a);
        return a;
    };
    auto to_index = [&](const PPoly &a) {
        uint64_t idx = 0;
        for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
        return static_cast<Elem>(idx);
    };
    const uint64_t n = q_ - 1;
    auto primes = factorize(n);
    if (f == 1) {
        for (uint64_t c = 1; c < p; ++c) {
            bool ok = true;
            for (auto [r, e] : primes) ok = ok && powmod(c, n / r, p) != 1;
            if (ok) { gen_ = static_cast<Elem>(c); break; }
        }
    } else {
        for (uint64_t c = 2; c < q_; ++c) {
            PPoly a = to_poly(c);
            bool ok = true;
            for (auto [r, e] : primes) {
                PPoly t = ppowmod(a, n / r, modulus_, p);
                ok = ok && !(t.size() == 1 && t[0] == 1);
                if (!ok) break;
            }
            if (ok) { gen_ = static_cast<Elem>(c); break; }
        }
    }
    exp_.assign(n, 0);
    log_.assign(q_, kNoLog);
    if (f == 1) {
        uint64_t cur = 1;
        for (uint64_t i = 0; i < n; ++i) {
            exp_[i] = static_cast<uint32_t>(cur);
            log_[cur] = static_cast<uint32_t>(i);
            cur = cur * gen_ % p;
        }
    } else {
        PPoly g = to_poly(gen_);
        std::vector<uint32_t> cur(f, 0), nxt(f + g.size(), 0);
        cur[0] = 1;
        for (uint64_t i = 0; i < n; ++i) {
            Elem idx = to_index(cur);
            exp_[i] = idx;
            log_[idx] = static_cast<uint32_t>(i);
            std::fill(nxt.begin(), nxt.end(), 0);
            for (size_t a = 0; a < f; ++a) {
                if (!cur[a]) continue;
                for (size_t b = 0; b < g.size(); ++b)
                    if (g[b]) nxt[a + b] = (nxt[a + b] + cur[a] * g[b]) % p;
            }
            for (size_t k = f + g.size() - 1; k-- > f;) {
                uint32_t c = nxt[k];
                if (!c) continue;
                for (uint32_t j = 0; j <= f; ++j) nxt[k - f + j] = (nxt[k - f + j] + (p - c) * modulus_[j]) % p;
            }
            std::copy(nxt.begin(), nxt.begin() + f, cur.begin());
        }
        if (to_index(cur) != 1) fail("internal", "generator order mismatch");
    }
    zech_.assign(n, kNoLog);
    for (uint64_t k = 0; k < n; ++k) {
        uint32_t e = exp_[k];
        uint32_t c0 = e % p;
        uint32_t e1 = e - c0 + (c0 + 1) % p;
        zech_[k] = log_[e1];
    }
    trace_basis_.assign(f, 0);
    for (uint32_t i = 0; i < f; ++i) {
        Elem xi = static_cast<Elem>(ipow(p, i));
        Elem s = 0;
        for (uint32_t j = 0; j < f; ++j) s = add(s, frobenius(xi, j));
        if (s >= p) fail("internal", "trace left the prime field");
        trace_basis_[i] = s;
    }
}

Elem Fq::add(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const uint64_t n = q_ - 1;
    uint32_t la = log_[a], lb = log_[b];
    uint32_t d = lb >= la ? lb - la : static_cast<uint32_t>(lb + n - la);
    uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    uint64_t s = uint64_t(la) + z;
    return exp_[s >= n ? s - n : s];
}

Elem Fq::neg(Elem a) const {
    if (a == 0) return 0;
    if (p_ == 2) return a;
    // -1 = g^{(q-1)/2}
    uint64_t n = q_ - 1, s = log_[a] + n / 2;
    return exp_[s % n];
}

Elem Fq::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t s = uint64_t(log_[a]) + log_[b];
    uint64_t n = q_ - 1;
    return exp_[s >= n ? s - n : s];
}

Elem Fq::inv(Elem a) const {
    if (a == 0) fail("division-by-zero", "inverse of zero in F_" + std::to_string(q_));
    uint64_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

Elem Fq::pow(Elem a, int64_t e) const {
    if (a == 0) {
        if (e < 0) fail("division-by-zero", "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    int64_t n = static_cast<int64_t>(q_ - 1);
    __int128 s = static_cast<__int128>(log_[a]) * (e % n);
    int64_t r = static_cast<int64_t>(s % n);
    if (r < 0) r += n;
    return exp_[r];
}

Elem Fq::frobenius(Elem a, unsigned k) const {
    if (a == 0) return 0;
    uint64_t n = q_ - 1;
    uint64_t pk = powmod(p_, k, n);
    return exp_[static_cast<uint64_t>((static_cast<unsigned __int128>(log_[a]) * pk) % n)];
}

uint32_t Fq::log(Elem a) const {
    if (a == 0) fail("zero-input", "discrete log of zero");
    return log_[a];
}

Elem Fq::exp(int64_t e) const { return exp_[mod(e, static_cast<int64_t>(q_ - 1))]; }

Elem Fq::from_int(int64_t v) const { return static_cast<Elem>(mod(v, p_)); }

Elem Fq::from_coeffs(const std::vector<uint32_t> &c) const {
    if (c.size() > f_) fail("bad-element", "too many coordinates");
    uint64_t idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * p_ + (c[i] % p_);
    return static_cast<Elem>(idx);
}

std::vector<uint32_t> Fq::coeffs(Elem a) const {
    std::vector<uint32_t> c(f_);
    for (uint32_t i = 0; i < f_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

uint32_t Fq::trace_to_prime(Elem a) const {
    uint64_t s = 0;
    for (uint32_t i = 0; i < f_; ++i) {
        s += uint64_t(a % p_) * trace_basis_[i];
        a /= p_;
    }
    return static_cast<uint32_t>(s % p_);
}

std::string Fq::str(Elem a) const {
    if (f_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (!c[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) { os << c[i]; continue; }
        if (c[i] != 1) os << c[i] << '*';
        os << 'g';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

FieldEmbedding::FieldEmbedding(FqPtr small, FqPtr big) : small_(std::move(small)), big_(std::move(big)) {
    if (small_->p() != big_->p() || big_->f() % small_->f() != 0)
        fail("bad-embedding", "F_" + std::to_string(small_->q()) + " does not embed in F_" + std::to_string(big_->q()));
    const uint64_t q = small_->q(), Q = big_->q();
    const uint64_t step = (Q - 1) / (q - 1);
    const auto &mod = small_->modulus();
    // Root of the small defining polynomial inside the subfield of order q.
    Elem beta = 0;
    bool found = false;
    if (small_->f() == big_->f()) {
        // Same field: use the identity, not some other automorphism.
        beta = small_->f() > 1 ? static_cast<Elem>(small_->p()) : 0;
        found = true;
    }
    for (uint64_t j = 0; j <= q - 1 && !found; ++j) {
        Elem y = j == q - 1 ? 0 : big_->exp(static_cast<int64_t>(j * step));
        Elem acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = big_->add(big_->mul(acc, y), big_->from_int(mod[i]));
        if (acc == 0) { beta = y; found = true; }
    }
    if (!found) fail("internal", "no root of the subfield polynomial");
    image_.assign(q, 0);
    for (uint64_t a = 0; a < q; ++a) {
        auto c = small_->coeffs(static_cast<Elem>(a));
        Elem acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = big_->add(big_->mul(acc, beta), big_->from_int(c[i]));
        image_[a] = acc;
    }
    uint64_t lg = big_->log(image_[small_->generator()]);
    j0_ = lg / step;
    e_norm_ = static_cast<uint64_t>(inv_mod(static_cast<int64_t>(j0_), static_cast<int64_t>(q - 1)));
    if (q == 2) e_norm_ = 0;
}

std::shared_ptr<const FieldEmbedding> FieldEmbedding::make(const FqPtr &small, const FqPtr &big) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, uint32_t>, std::shared_ptr<const FieldEmbedding>> cache;
    auto key = std::make_tuple(small->p(), small->f(), big->f());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->small_ == small && it->second->big_ == big) return it->second;
    }
    auto e = std::make_shared<const FieldEmbedding>(small, big);
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = e;
    return e;
}

bool FieldEmbedding::in_image(Elem z) const {
    if (z == 0) return true;
    const uint64_t step = (big_->q() - 1) / (small_->q() - 1);
    return big_->log(z) % step == 0;
}

Elem FieldEmbedding::preimage(Elem z) const {
    if (z == 0) return 0;
    const uint64_t q1 = small_->q() - 1;
    const uint64_t step = (big_->q() - 1) / q1;
    uint64_t lg = big_->log(z);
    if (lg % step != 0) fail("not-in-subfield", "element is not in the subfield");
    uint64_t t = lg / step;
    // z = (image of g)^{t / j0}
    uint64_t e = static_cast<uint64_t>((static_cast<unsigned __int128>(t) * e_norm_) % q1);
    return small_->exp(static_cast<int64_t>(e));
}

Elem FieldEmbedding::norm(Elem y) const {
    if (y == 0) return 0;
    const uint64_t step = (big_->q() - 1) / (small_->q() - 1);
    return preimage(big_->pow(y, static_cast<int64_t>(step)));
}

Elem FieldEmbedding::trace(Elem y) const {
    Elem s = 0;
    const uint32_t d = degree();
    for (uint32_t i = 0; i < d; ++i) s = big_->add(s, big_->frobenius(y, small_->f() * i));
    return preimage(s);
}

FqPtr field_extend(const FqPtr &F, uint32_t n) { return Fq::make(F->p(), F->f() * n); }

} // namespace eps
