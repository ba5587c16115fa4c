#include "epsilon/theta.hpp"

#include <algorithm>
#include <cmath>

#include "epsilon/error.hpp"
#include "epsilon/padic.hpp"

namespace eps {

namespace {

// Trial division up to a fixed bound; whatever is left stays as one opaque key.
std::vector<std::pair<Int, long>> rough_factor(Int n) {
    std::vector<std::pair<Int, long>> out;
    if (n < 0) n = -n;
    for (unsigned long p = 2; p < 100000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        out.emplace_back(Int(p), e);
        if (Int(p) * Int(p) > n) break;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int lcm_int(const Int &a, const Int &b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long small_exponent(const Rat &e) {
    if (e.get_den() != 1 || !e.get_num().fits_slong_p())
        fail("exponent-overflow", "theta exponent " + e.get_str() + " is not a small integer");
    return e.get_num().get_si();
}

bool obviously_not_unit(const CycNum &a) {
    bool reliable;
    double l = a.log2_abs_approx(&reliable);
    return reliable && std::fabs(l) > 1e-6;
}

} // namespace

void ThetaClass::add_base(const CycNum &b, const Rat &e) {
    if (sgn(e) == 0) return;
    auto it = std::lower_bound(bases_.begin(), bases_.end(), b,
                               [](const auto &entry, const CycNum &key) { return entry.first.compare_repr(key) < 0; });
    if (it != bases_.end() && it->first.compare_repr(b) == 0) {
        it->second += e;
        if (sgn(it->second) == 0) bases_.erase(it);
        return;
    }
    bases_.insert(it, {b, e});
}

void ThetaClass::add_prime(const Int &p, const Rat &e) {
    if (sgn(e) == 0 || p == 1) return;
    Rat &slot = primes_[p];
    slot += e;
    if (sgn(slot) == 0) primes_.erase(p);
}

ThetaClass ThetaClass::of(const CycNum &a) {
    if (a.is_zero()) fail("zero-class", "cls of zero");
    if (a.is_rational()) return of_rational(a.rational_value());
    ThetaClass t;
    if (!obviously_not_unit(a) && a.root_of_unity()) return t;
    t.add_base(a, Rat(1));
    return t;
}

ThetaClass ThetaClass::of_rational(const Rat &r) {
    if (sgn(r) == 0) fail("zero-class", "cls of zero");
    ThetaClass t;
    for (auto &[p, e] : rough_factor(r.get_num())) t.add_prime(p, Rat(e));
    for (auto &[p, e] : rough_factor(r.get_den())) t.add_prime(p, Rat(-e));
    return t;
}

ThetaClass ThetaClass::power_of(const Int &n, const Rat &e) { return of_rational(Rat(n)).pow(e); }

ThetaClass operator*(const ThetaClass &a, const ThetaClass &b) {
    ThetaClass r = a;
    for (const auto &[base, e] : b.bases_) r.add_base(base, e);
    for (const auto &[p, e] : b.primes_) r.add_prime(p, e);
    return r;
}

ThetaClass ThetaClass::pow(const Rat &r) const {
    ThetaClass t;
    if (sgn(r) == 0) return t;
    t.bases_ = bases_;
    for (auto &entry : t.bases_) entry.second *= r;
    for (const auto &[p, e] : primes_) t.primes_[p] = e * r;
    return t;
}

std::vector<std::pair<std::string, std::string>> ThetaClass::terms() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &[p, e] : primes_) out.emplace_back(p.get_str(), e.get_str());
    for (const auto &[b, e] : bases_) out.emplace_back(b.str(), e.get_str());
    return out;
}

std::string ThetaClass::str() const {
    if (is_trivial_repr()) return "1";
    std::string s;
    for (const auto &[b, e] : terms()) {
        if (!s.empty()) s += " * ";
        s += "cls(" + b + ")";
        if (e != "1") s += "^(" + e + ")";
    }
    return s;
}

bool theta_is_trivial(const ThetaClass &c) {
    if (c.is_trivial_repr()) return true;
    Int N = 1;
    for (const auto &[b, e] : c.bases()) N = lcm_int(N, e.get_den());
    for (const auto &[p, e] : c.primes()) N = lcm_int(N, e.get_den());
    const Rat NR(N);
    Int rnum = 1, rden = 1;
    for (const auto &[p, e] : c.primes()) {
        long k = small_exponent(e * NR);
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(k)));
        (k > 0 ? rnum : rden) *= pk;
    }
    if (c.bases().empty()) return rnum == rden;
    CycNum P(rnum), D(rden);
    for (const auto &[b, e] : c.bases()) {
        long k = small_exponent(e * NR);
        if (k > 0) P *= b.pow(k);
        else D *= b.pow(-k);
    }
    return root_of_unity_ratio(P, D).has_value();
}

bool theta_eq(const ThetaClass &a, const ThetaClass &b) { return theta_is_trivial(a / b); }
ThetaClass theta_mul(const ThetaClass &a, const ThetaClass &b) { return a * b; }
ThetaClass theta_pow(const ThetaClass &a, const Rat &r) { return a.pow(r); }

Rat theta_p_valuation(const ThetaClass &a, uint32_t p) {
    Rat v = 0;
    for (const auto &[pr, e] : a.primes()) {
        Int n = pr;
        long k = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++k;
        }
        v += e * Rat(k);
    }
    for (const auto &[b, e] : a.bases()) v += e * cyclotomic_valuation(b, p);
    return v;
}

bool differ_by_root_of_unity(const CycNum &a, const CycNum &b) { return root_of_unity_ratio(a, b).has_value(); }

} // namespace eps
