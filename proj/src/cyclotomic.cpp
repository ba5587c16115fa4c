#include "epsilon/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <cctype>
#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "epsilon/error.hpp"

namespace eps {

namespace {

std::atomic<uint32_t> g_order_cap{100000};

struct CycloData {
    std::vector<int64_t> dense;                       // Phi_m, low degree first
    std::vector<std::pair<uint32_t, int64_t>> lower;  // nonzero terms below the leading one
    uint32_t phi = 0;
};

std::vector<int64_t> poly_compose_xk(const std::vector<int64_t> &p, uint32_t k) {
    std::vector<int64_t> r((p.size() - 1) * k + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) r[i * k] = p[i];
    return r;
}

// Exact quotient a / b for monic b.
std::vector<int64_t> poly_exact_div(std::vector<int64_t> a, const std::vector<int64_t> &b) {
    size_t db = b.size() - 1;
    std::vector<int64_t> q(a.size() - db, 0);
    for (size_t i = a.size(); i-- > db;) {
        int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

std::vector<int64_t> compute_cyclotomic(uint32_t m) {
    std::vector<int64_t> p{-1, 1};
    uint32_t rad = 1;
    for (auto [pr, e] : factorize(m)) {
        p = poly_exact_div(poly_compose_xk(p, static_cast<uint32_t>(pr)), p);
        rad *= static_cast<uint32_t>(pr);
    }
    return m == rad ? p : poly_compose_xk(p, m / rad);
}

const CycloData &cyclo(uint32_t m) {
    static std::mutex mu;
    static std::map<uint32_t, std::unique_ptr<CycloData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
    if (m == 0 || m > g_order_cap.load())
        fail("order-cap", "cyclotomic order " + std::to_string(m) + " outside the configured cap");
    auto d = std::make_unique<CycloData>();
    d->dense = compute_cyclotomic(m);
    d->phi = static_cast<uint32_t>(d->dense.size() - 1);
    for (uint32_t j = 0; j < d->phi; ++j)
        if (d->dense[j] != 0) d->lower.emplace_back(j, d->dense[j]);
    auto &ref = *d;
    cache.emplace(m, std::move(d));
    return ref;
}

// Reduce a polynomial in place modulo Phi_m and truncate to phi(m) terms.
void reduce_mod_phi(std::vector<Int> &a, const CycloData &cd) {
    const uint32_t phi = cd.phi;
    for (size_t i = a.size(); i-- > phi;) {
        if (sgn(a[i]) == 0) continue;
        const size_t base = i - phi;
        for (auto [j, c] : cd.lower) {
            if (c == 1) a[base + j] -= a[i];
            else if (c == -1) a[base + j] += a[i];
            else {
                Int t = a[i] * c;
                a[base + j] -= t;
            }
        }
    }
    a.resize(phi);
}

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

// Rational polynomial helpers for the extended Euclid inverse.
using QPoly = std::vector<Rat>;

void qtrim(QPoly &p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void qdivmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r) {
    r = a;
    qtrim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
    Rat lead_inv = 1 / b.back();
    while (r.size() >= b.size() && !r.empty()) {
        size_t s = r.size() - b.size();
        Rat c = r.back() * lead_inv;
        q[s] = c;
        for (size_t j = 0; j < b.size(); ++j) r[s + j] -= c * b[j];
        qtrim(r);
    }
}

QPoly qmul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qsub(const QPoly &a, const QPoly &b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

} // namespace

uint32_t cyclotomic_order_cap() { return g_order_cap.load(); }
void set_cyclotomic_order_cap(uint32_t cap) { g_order_cap.store(cap); }

const std::vector<int64_t> &cyclotomic_poly(uint32_t m) { return cyclo(m).dense; }

uint32_t common_order(uint32_t a, uint32_t b) {
    return static_cast<uint32_t>(lcm64(a, b));
}

CycNum::CycNum(uint32_t m, std::vector<Int> num, Int den, bool collapse)
    : m_(m), num_(std::move(num)), den_(std::move(den)) {
    normalize(collapse);
}

CycNum::CycNum(const Rat &v) : m_(1), num_{v.get_num()}, den_(v.get_den()) {}

void CycNum::normalize(bool collapse) {
    if (sgn(den_) == 0) fail("division-by-zero", "zero denominator");
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto &c : num_) c = -c;
    }
    Int g = den_;
    bool all_zero = true;
    for (const auto &c : num_) {
        if (sgn(c) == 0) continue;
        all_zero = false;
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (all_zero) {
        den_ = 1;
        if (collapse) {
            m_ = 1;
            num_.assign(1, Int(0));
        }
        return;
    }
    if (g != 1) {
        for (auto &c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    // Rational values always live at order 1.
    if (collapse && m_ > 1 && std::all_of(num_.begin() + 1, num_.end(), [](const Int &c) { return sgn(c) == 0; })) {
        m_ = 1;
        num_.resize(1);
    }
}

CycNum CycNum::zeta(uint32_t m, int64_t k) {
    std::vector<Int> c(static_cast<size_t>(mod(k, m)) + 1, Int(0));
    c.back() = 1;
    return from_poly(m, c);
}

CycNum CycNum::from_poly(uint32_t m, const std::vector<Int> &coeffs, const Int &den) {
    const CycloData &cd = cyclo(m);
    std::vector<Int> a = coeffs;
    if (a.size() < cd.phi) a.resize(cd.phi, Int(0));
    reduce_mod_phi(a, cd);
    return CycNum(m, std::move(a), den);
}

CycNum CycNum::from_counts(uint32_t m, const std::vector<int64_t> &counts) {
    std::vector<Int> c(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) c[i] = static_cast<long>(counts[i]);
    return from_poly(m, c);
}

Rat CycNum::coeff(size_t i) const {
    if (i >= num_.size()) return Rat(0);
    Rat r(num_[i], den_);
    r.canonicalize();
    return r;
}

bool CycNum::is_zero() const {
    for (const auto &c : num_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

Rat CycNum::rational_value() const {
    if (!is_rational()) fail("not-rational", "element " + str() + " is not rational");
    return coeff(0);
}

CycNum CycNum::embed(uint32_t M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) fail("bad-embedding", "order " + std::to_string(M) + " is not a multiple of " + std::to_string(m_));
    const uint32_t t = M / m_;
    std::vector<Int> c(static_cast<size_t>(num_.size() - 1) * t + 1, Int(0));
    for (size_t i = 0; i < num_.size(); ++i) c[i * t] = num_[i];
    const CycloData &cd = cyclo(M);
    if (c.size() < cd.phi) c.resize(cd.phi, Int(0));
    reduce_mod_phi(c, cd);
    return CycNum(M, std::move(c), den_, false);
}

CycNum CycNum::operator-() const {
    std::vector<Int> c = num_;
    for (auto &x : c) x = -x;
    return CycNum(m_, std::move(c), den_);
}

namespace {

CycNum add_sub(const CycNum &a0, const CycNum &b0, bool sub) {
    uint32_t M = common_order(a0.order(), b0.order());
    CycNum a = a0.embed(M), b = b0.embed(M);
    Int l;
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    Int fa = l / a.denominator(), fb = l / b.denominator();
    std::vector<Int> c(a.degree());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a.numerators()[i] * fa;
        if (sub) mpz_submul(c[i].get_mpz_t(), b.numerators()[i].get_mpz_t(), fb.get_mpz_t());
        else mpz_addmul(c[i].get_mpz_t(), b.numerators()[i].get_mpz_t(), fb.get_mpz_t());
    }
    return CycNum::from_poly(M, c, l);
}

} // namespace

CycNum operator+(const CycNum &a, const CycNum &b) { return add_sub(a, b, false); }
CycNum operator-(const CycNum &a, const CycNum &b) { return add_sub(a, b, true); }

CycNum operator*(const CycNum &a0, const CycNum &b0) {
    uint32_t M = common_order(a0.m_, b0.m_);
    if (a0.m_ == 1 && a0.is_rational()) return b0.embed(M).scaled(a0.coeff(0));
    if (b0.m_ == 1 && b0.is_rational()) return a0.embed(M).scaled(b0.coeff(0));
    CycNum a = a0.embed(M), b = b0.embed(M);
    std::vector<Int> c(a.num_.size() + b.num_.size() - 1, Int(0));
    for (size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) == 0) continue;
        for (size_t j = 0; j < b.num_.size(); ++j) {
            if (sgn(b.num_[j]) == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    return CycNum::from_poly(M, c, a.den_ * b.den_);
}

CycNum operator/(const CycNum &a, const CycNum &b) { return a * b.inverse(); }

bool operator==(const CycNum &a0, const CycNum &b0) {
    if (a0.m_ == b0.m_) return a0.den_ == b0.den_ && a0.num_ == b0.num_;
    uint32_t M = common_order(a0.m_, b0.m_);
    CycNum a = a0.embed(M), b = b0.embed(M);
    return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::scaled(const Rat &r) const {
    std::vector<Int> c = num_;
    for (auto &x : c) x *= r.get_num();
    return CycNum(m_, std::move(c), den_ * r.get_den());
}

CycNum CycNum::times_zeta(int64_t k) const {
    const uint32_t sh = static_cast<uint32_t>(mod(k, m_));
    if (sh == 0) return *this;
    std::vector<Int> c(num_.size() + sh, Int(0));
    for (size_t i = 0; i < num_.size(); ++i) c[i + sh] = num_[i];
    return from_poly(m_, c, den_);
}

CycNum CycNum::inverse() const {
    if (is_zero()) fail("division-by-zero", "inverse of zero");
    if (is_rational()) return CycNum(Rat(den_, num_[0]));
    const CycloData &cd = cyclo(m_);
    QPoly A(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) A[i] = Rat(num_[i]);
    qtrim(A);
    QPoly B(cd.dense.size());
    for (size_t i = 0; i < cd.dense.size(); ++i) B[i] = Rat(static_cast<long>(cd.dense[i]));
    // Invariant: s0*A = r0 and s1*A = r1 modulo Phi_m.
    QPoly r0 = B, r1 = A, s0, s1{Rat(1)};
    while (!(r1.size() == 1)) {
        if (r1.empty()) fail("division-by-zero", "element shares a factor with Phi_m");
        QPoly q, r;
        qdivmod(r0, r1, q, r);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
    }
    Rat scale = Rat(den_) / r1[0];
    std::vector<Rat> coeffs(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) coeffs[i] = s1[i] * scale;
    Int common = 1;
    for (const auto &c : coeffs) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> nums(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) nums[i] = coeffs[i].get_num() * (common / coeffs[i].get_den());
    return from_poly(m_, nums, common);
}

CycNum CycNum::pow(int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum r = CycNum(1).embed(m_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

CycNum CycNum::galois(int64_t t) const {
    int64_t tm = mod(t, m_);
    if (std::gcd(tm, static_cast<int64_t>(m_)) != 1 && m_ > 1)
        fail("bad-galois-exponent", std::to_string(t) + " is not coprime to " + std::to_string(m_));
    if (m_ <= 2) return *this;
    std::vector<Int> c(m_, Int(0));
    for (size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) continue;
        c[static_cast<size_t>((static_cast<int64_t>(i) * tm) % m_)] += num_[i];
    }
    return from_poly(m_, c, den_);
}

std::optional<std::pair<uint32_t, uint32_t>> CycNum::root_of_unity() const {
    if (is_zero() || den_ != 1) return std::nullopt;
    const CycloData &cd = cyclo(m_);
    // Walk v = z^k through all k < m, comparing against +-this.
    std::vector<Int> v(cd.phi, Int(0));
    v[0] = 1;
    for (uint32_t k = 0; k < m_; ++k) {
        int sign = 0;
        if (v == num_) sign = 1;
        else {
            bool neg = true;
            for (size_t i = 0; i < v.size() && neg; ++i) neg = (v[i] == -num_[i]);
            if (neg) sign = -1;
        }
        if (sign != 0) {
            uint64_t N = 2ull * m_;
            uint64_t j = sign > 0 ? 2ull * k : (2ull * k + m_) % N;
            uint64_t g = std::gcd(j, N);
            return std::make_pair(static_cast<uint32_t>(N / g), static_cast<uint32_t>(j / g));
        }
        // v <- z * v
        Int top = v.empty() ? Int(0) : v.back();
        for (size_t i = v.size(); i-- > 1;) v[i] = v[i - 1];
        if (!v.empty()) v[0] = 0;
        if (sgn(top) != 0)
            for (auto [j, c] : cd.lower) v[j] -= top * c;
    }
    return std::nullopt;
}

bool CycNum::lies_in(uint32_t d) const {
    d = static_cast<uint32_t>(std::gcd(static_cast<uint64_t>(d), static_cast<uint64_t>(m_)));
    if (d == m_) return true;
    for (uint64_t t = 1 + d; t < m_; t += d) {
        if (std::gcd(t, static_cast<uint64_t>(m_)) != 1) continue;
        if (galois(static_cast<int64_t>(t)) != *this) return false;
    }
    return true;
}

CycNum CycNum::reduce_conductor() const {
    if (is_rational()) return CycNum(coeff(0));
    for (uint64_t d : divisors(m_)) {
        if (d == m_) break;
        if (d % 4 == 2) continue;
        if (!lies_in(static_cast<uint32_t>(d))) continue;
        // Solve for b in Q(zeta_d) with embed(b) = this by elimination on basis images.
        const uint32_t dd = static_cast<uint32_t>(d);
        const size_t n = cyclo(dd).phi, rows = num_.size();
        std::vector<std::vector<Rat>> mat(rows, std::vector<Rat>(n + 1, Rat(0)));
        for (size_t j = 0; j < n; ++j) {
            CycNum img = zeta(dd, static_cast<int64_t>(j)).embed(m_);
            for (size_t i = 0; i < rows; ++i) mat[i][j] = img.coeff(i);
        }
        for (size_t i = 0; i < rows; ++i) mat[i][n] = coeff(i);
        size_t r = 0;
        std::vector<size_t> pivcol;
        for (size_t c = 0; c < n && r < rows; ++c) {
            size_t piv = r;
            while (piv < rows && sgn(mat[piv][c]) == 0) ++piv;
            if (piv == rows) continue;
            std::swap(mat[piv], mat[r]);
            Rat inv = 1 / mat[r][c];
            for (auto &x : mat[r]) x *= inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || sgn(mat[i][c]) == 0) continue;
                Rat f = mat[i][c];
                for (size_t k = c; k <= n; ++k) mat[i][k] -= f * mat[r][k];
            }
            pivcol.push_back(c);
            ++r;
        }
        std::vector<Rat> sol(n, Rat(0));
        for (size_t i = 0; i < pivcol.size(); ++i) sol[pivcol[i]] = mat[i][n];
        Int common = 1;
        for (const auto &c : sol) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Int> nums(n);
        for (size_t i = 0; i < n; ++i) nums[i] = sol[i].get_num() * (common / sol[i].get_den());
        return from_poly(dd, nums, common);
    }
    return *this;
}

std::string CycNum::str() const {
    std::ostringstream os;
    os << '[' << m_ << "] ";
    bool first = true;
    for (size_t i = 0; i < num_.size(); ++i) {
        Rat c = coeff(i);
        if (sgn(c) == 0) continue;
        bool neg = sgn(c) < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
}

CycNum CycNum::parse(std::string_view text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto bad = [&](const std::string &why) -> Error {
        return Error("syntax-error", "cyclotomic number '" + std::string(text) + "' at column " +
                                         std::to_string(pos + 1) + ": " + why);
    };
    auto read_uint = [&]() -> std::string {
        size_t s = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(s, pos - s));
    };
    skip();
    uint32_t m = 1;
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        skip();
        std::string ds = read_uint();
        if (ds.empty()) throw bad("expected order");
        m = static_cast<uint32_t>(std::stoul(ds));
        if (m == 0) throw bad("order must be positive");
        skip();
        if (pos >= text.size() || text[pos] != ']') throw bad("expected ']'");
        ++pos;
    }
    std::map<uint32_t, Rat> terms;
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw bad("expected '+' or '-'");
        }
        first = false;
        Rat c = 1;
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string n = read_uint();
            Int den = 1;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                std::string d = read_uint();
                if (d.empty()) throw bad("expected denominator");
                den = Int(d);
                if (den == 0) throw bad("zero denominator");
            }
            c = Rat(Int(n), den);
            c.canonicalize();
            have_coeff = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                if (pos >= text.size() || text[pos] != 'z') throw bad("expected 'z' after '*'");
            }
        }
        uint32_t e = 0;
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                std::string es = read_uint();
                if (es.empty()) throw bad("expected exponent");
                e = static_cast<uint32_t>(std::stoul(es));
            }
        } else if (!have_coeff) {
            throw bad("expected a term");
        }
        terms[e] += sign * c;
    }
    if (first) throw bad("empty expression");
    Int common = 1;
    uint32_t top = 0;
    for (auto &[e, c] : terms) {
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
        top = std::max(top, e);
    }
    std::vector<Int> nums(top + 1, Int(0));
    for (auto &[e, c] : terms) nums[e] = c.get_num() * (common / c.get_den());
    // z^e with e >= m wraps around; fold through x^m = 1 before reducing.
    if (nums.size() > m) {
        std::vector<Int> folded(m, Int(0));
        for (size_t i = 0; i < nums.size(); ++i) folded[i % m] += nums[i];
        nums = std::move(folded);
    }
    return from_poly(m, nums, common);
}

double CycNum::log2_abs_approx(bool *reliable) const {
    long emax = LONG_MIN;
    std::vector<std::pair<double, long>> parts(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) { parts[i] = {0.0, 0}; continue; }
        long e;
        double d = mpz_get_d_2exp(&e, num_[i].get_mpz_t());
        parts[i] = {d, e};
        emax = std::max(emax, e);
    }
    if (emax == LONG_MIN) { *reliable = false; return 0.0; }
    std::complex<long double> acc = 0;
    long double mass = 0;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L / m_;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].first == 0.0) continue;
        long double v = std::ldexp(static_cast<long double>(parts[i].first), static_cast<int>(parts[i].second - emax));
        acc += v * std::polar(1.0L, tau * static_cast<long double>(i));
        mass += std::fabs(v);
    }
    long double a = std::abs(acc);
    *reliable = a > mass * 1e-9L;
    long de;
    double dd = mpz_get_d_2exp(&de, den_.get_mpz_t());
    return static_cast<double>(std::log2(a) + emax - (std::log2(static_cast<long double>(dd)) + de));
}

std::optional<uint32_t> root_of_unity_ratio(const CycNum &a0, const CycNum &b0) {
    if (a0.is_zero() || b0.is_zero()) fail("division-by-zero", "root-of-unity ratio with a zero entry");
    bool ra, rb;
    double la = a0.log2_abs_approx(&ra), lb = b0.log2_abs_approx(&rb);
    if (ra && rb && std::fabs(la - lb) > 1e-6 * (1.0 + std::fabs(la))) return std::nullopt;
    const uint32_t L = common_order(a0.order(), b0.order());
    CycNum a = a0.embed(L), b = b0.embed(L);
    // Compare a.num * b.den against +-zeta^k * b.num * a.den.
    std::vector<Int> target = a.numerators();
    for (auto &x : target) x *= b.denominator();
    std::vector<Int> v = b.numerators();
    for (auto &x : v) x *= a.denominator();
    const CycloData &cd = cyclo(L);
    v.resize(cd.phi, Int(0));
    target.resize(cd.phi, Int(0));
    for (uint32_t k = 0; k < L; ++k) {
        if (v == target) return static_cast<uint32_t>((2ull * k) % (2ull * L));
        bool neg = true;
        for (size_t i = 0; i < v.size() && neg; ++i) neg = (v[i] == -target[i]);
        if (neg) return static_cast<uint32_t>((2ull * k + L) % (2ull * L));
        Int top = v.back();
        for (size_t i = v.size(); i-- > 1;) v[i] = v[i - 1];
        v[0] = 0;
        if (sgn(top) != 0)
            for (auto [j, c] : cd.lower) v[j] -= top * c;
    }
    return std::nullopt;
}

int CycNum::compare_repr(const CycNum &o) const {
    if (m_ != o.m_) return m_ < o.m_ ? -1 : 1;
    int c = cmp(den_, o.den_);
    if (c) return c < 0 ? -1 : 1;
    for (size_t i = 0; i < num_.size(); ++i) {
        c = cmp(num_[i], o.num_[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

} // namespace eps
