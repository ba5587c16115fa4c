#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epsilon/arith.hpp"

namespace eps {

// Upper bound on the order m of Q(zeta_m); guards the cyclotomic polynomial cache.
uint32_t cyclotomic_order_cap();
void set_cyclotomic_order_cap(uint32_t cap);

// Coefficients of Phi_m, lowest degree first (degree phi(m), monic).
const std::vector<int64_t> &cyclotomic_poly(uint32_t m);

// Exact element of Q(zeta_m) in the power basis 1, z, .., z^{phi(m)-1} reduced
// modulo Phi_m.  Stored as integer numerators over one positive denominator.
class CycNum {
public:
    CycNum() : m_(1), num_(1), den_(1) {}
    CycNum(long v) : m_(1), num_{Int(v)}, den_(1) {}
    CycNum(const Int &v) : m_(1), num_{v}, den_(1) {}
    CycNum(const Rat &v);

    static CycNum zeta(uint32_t m, int64_t k = 1);
    // Build from coefficients of a polynomial of arbitrary degree in z = zeta_m.
    static CycNum from_poly(uint32_t m, const std::vector<Int> &coeffs, const Int &den = 1);
    // Sum of counts[j] * zeta_m^j for j < m.
    static CycNum from_counts(uint32_t m, const std::vector<int64_t> &counts);

    uint32_t order() const { return m_; }
    size_t degree() const { return num_.size(); }
    const std::vector<Int> &numerators() const { return num_; }
    const Int &denominator() const { return den_; }
    Rat coeff(size_t i) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_value() const;   // requires is_rational()

    // Same element presented in Q(zeta_M); M must be a multiple of order().
    // This is the only operation that leaves a rational value at order > 1.
    CycNum embed(uint32_t M) const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum &a, const CycNum &b);
    friend CycNum operator-(const CycNum &a, const CycNum &b);
    friend CycNum operator*(const CycNum &a, const CycNum &b);
    friend CycNum operator/(const CycNum &a, const CycNum &b);
    CycNum &operator+=(const CycNum &b) { return *this = *this + b; }
    CycNum &operator-=(const CycNum &b) { return *this = *this - b; }
    CycNum &operator*=(const CycNum &b) { return *this = *this * b; }
    friend bool operator==(const CycNum &a, const CycNum &b);
    friend bool operator!=(const CycNum &a, const CycNum &b) { return !(a == b); }

    CycNum scaled(const Rat &r) const;
    CycNum times_zeta(int64_t k) const;   // this * zeta_m^k
    CycNum inverse() const;
    CycNum pow(int64_t e) const;

    CycNum galois(int64_t t) const;
    CycNum conj() const { return galois(-1); }

    // (n, k) with this = zeta_n^k and gcd(k, n) = 1, or nothing.
    std::optional<std::pair<uint32_t, uint32_t>> root_of_unity() const;

    bool lies_in(uint32_t d) const;   // element of Q(zeta_d)?
    CycNum reduce_conductor() const;  // re-expressed at the smallest order found

    std::string str() const;
    static CycNum parse(std::string_view text);

    // log2 |iota(this)| for iota(zeta_m) = exp(2 pi i / m).  *reliable is
    // cleared when cancellation makes the estimate meaningless.
    double log2_abs_approx(bool *reliable) const;

    // Deterministic total order on representations (not on field elements).
    int compare_repr(const CycNum &o) const;

private:
    CycNum(uint32_t m, std::vector<Int> num, Int den, bool collapse = true);
    void normalize(bool collapse);

    uint32_t m_;
    std::vector<Int> num_;
    Int den_;
};

uint32_t common_order(uint32_t a, uint32_t b);

// j with a = zeta_{2L}^j * b, L = lcm of the orders, if a / b is a root of unity.
std::optional<uint32_t> root_of_unity_ratio(const CycNum &a, const CycNum &b);

} // namespace eps
