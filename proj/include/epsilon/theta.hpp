#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "epsilon/arith.hpp"
#include "epsilon/cyclotomic.hpp"

namespace eps {

// An element of Qbar^x (x) Q modulo roots of unity: a formal product of
// cyclotomic bases and positive rational primes with rational exponents.
// Equality is decided by evaluation, so the formal presentation need not be
// a normal form.
class ThetaClass {
public:
    ThetaClass() = default;
    static ThetaClass of(const CycNum &a);             // cls(a), a != 0
    static ThetaClass of_rational(const Rat &r);
    static ThetaClass power_of(const Int &n, const Rat &e);   // cls(n)^e
    // Value of the cyclotomic character at geometric Frobenius of F_q.
    static ThetaClass chi_cyc(uint64_t q) { return power_of(Int(static_cast<unsigned long>(q)), Rat(-1)); }

    friend ThetaClass operator*(const ThetaClass &a, const ThetaClass &b);
    friend ThetaClass operator/(const ThetaClass &a, const ThetaClass &b) { return a * b.inverse(); }
    ThetaClass &operator*=(const ThetaClass &b) { return *this = *this * b; }
    ThetaClass pow(const Rat &r) const;
    ThetaClass inverse() const { return pow(Rat(-1)); }

    bool is_trivial_repr() const { return bases_.empty() && primes_.empty(); }
    const std::vector<std::pair<CycNum, Rat>> &bases() const { return bases_; }
    const std::map<Int, Rat> &primes() const { return primes_; }

    // (base text, exponent text) pairs in deterministic order.
    std::vector<std::pair<std::string, std::string>> terms() const;
    std::string str() const;

private:
    void add_base(const CycNum &b, const Rat &e);
    void add_prime(const Int &p, const Rat &e);

    std::vector<std::pair<CycNum, Rat>> bases_;   // sorted, non-rational, nonzero exponents
    std::map<Int, Rat> primes_;                   // rational part, factored where cheap
};

bool theta_eq(const ThetaClass &a, const ThetaClass &b);
bool theta_is_trivial(const ThetaClass &a);
ThetaClass theta_mul(const ThetaClass &a, const ThetaClass &b);
ThetaClass theta_pow(const ThetaClass &a, const Rat &r);
Rat theta_p_valuation(const ThetaClass &a, uint32_t p);

// Exact test of a / b in mu for nonzero cyclotomic numbers.
bool differ_by_root_of_unity(const CycNum &a, const CycNum &b);

} // namespace eps
