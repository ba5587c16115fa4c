#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "epsilon/field.hpp"

namespace eps {

// Dense univariate polynomial over F_q, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(FqPtr F) : F_(std::move(F)) {}
    Poly(FqPtr F, std::vector<Elem> c);
    static Poly constant(const FqPtr &F, Elem a);
    static Poly x(const FqPtr &F);
    static Poly linear(const FqPtr &F, Elem a);   // x - a

    const FqPtr &field() const { return F_; }
    const std::vector<Elem> &coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    Elem lc() const { return c_.empty() ? 0 : c_.back(); }
    Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly monic() const;
    Poly derivative() const;
    Poly scaled(Elem a) const;
    Poly shifted(size_t k) const;   // times x^k
    Elem eval(Elem a) const;

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return a.c_ != b.c_; }
    Poly pow(uint64_t e) const;

    std::string str(const std::string &var = "x") const;
    int compare(const Poly &o) const;   // by degree, then coefficients from the top

private:
    void trim();
    FqPtr F_;
    std::vector<Elem> c_;
};

void poly_divmod(const Poly &a, const Poly &b, Poly &q, Poly &r);
Poly poly_div(const Poly &a, const Poly &b);   // exact or truncating quotient
Poly poly_mod(const Poly &a, const Poly &b);
Poly poly_gcd(const Poly &a, const Poly &b);   // monic
Poly poly_powmod(const Poly &a, uint64_t e, const Poly &m);
// Multiplicity of the monic irreducible P in a (a != 0), and a / P^k.
int poly_valuation(const Poly &a, const Poly &P, Poly *rest = nullptr);

// Monic irreducible factors with multiplicities, in compare() order.
std::vector<std::pair<Poly, int>> poly_factor(const Poly &a);
bool poly_is_irreducible(const Poly &a);

// A closed point of P^1 over F_q: infinity or a monic irreducible.
struct ClosedPoint {
    bool at_infinity = false;
    Poly P;

    static ClosedPoint infinity(const FqPtr &F);
    static ClosedPoint finite(const Poly &P);
    static ClosedPoint rational(const FqPtr &F, Elem a) { return finite(Poly::linear(F, a)); }

    uint32_t degree() const { return at_infinity ? 1u : static_cast<uint32_t>(P.degree()); }
    const FqPtr &field() const { return P.field(); }
    std::string str() const;
    friend bool operator==(const ClosedPoint &a, const ClosedPoint &b) {
        return a.at_infinity == b.at_infinity && (a.at_infinity || a.P == b.P);
    }
    friend bool operator<(const ClosedPoint &a, const ClosedPoint &b);
};

// k(x) realised as the canonical field F_{q^deg}, with the class of the
// coordinate x mapped to a fixed root of P (the smallest by index).
struct ResidueField {
    FqPtr field;                                  // k(x)
    std::shared_ptr<const FieldEmbedding> emb;    // F_q -> k(x)
    Elem root = 0;                                // image of x (finite points)
};
ResidueField residue_field(const ClosedPoint &x);

// Evaluate a at y in an extension E of F_q given the embedding F_q -> E.
Elem poly_eval_ext(const Poly &a, const FieldEmbedding &emb, Elem y);

// Rational function num / den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den);
    explicit RatFunc(const Poly &num);
    static RatFunc constant(const FqPtr &F, Elem a);
    static RatFunc x(const FqPtr &F) { return RatFunc(Poly::x(F)); }

    const FqPtr &field() const { return num_.field(); }
    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator-(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator*(const RatFunc &a, const RatFunc &b);
    friend RatFunc operator/(const RatFunc &a, const RatFunc &b);
    friend bool operator==(const RatFunc &a, const RatFunc &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    RatFunc pow(int64_t e) const;
    RatFunc derivative() const;

    int ord(const ClosedPoint &x) const;   // throws zero-function for 0
    // Value at x in k(x); requires ord(x) >= 0.
    Elem value(const ClosedPoint &x, const ResidueField &kx) const;
    // Value at y in an extension E of F_q (not a pole).
    Elem eval_ext(const FieldEmbedding &emb, Elem y) const;
    // Divisor in ClosedPoint order, nonzero orders only.
    std::vector<std::pair<ClosedPoint, int>> divisor() const;

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

} // namespace eps
