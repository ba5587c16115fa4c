#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "epsilon/arith.hpp"
#include "epsilon/characters.hpp"
#include "epsilon/cyclotomic.hpp"
#include "epsilon/field.hpp"

namespace eps {

constexpr uint32_t kDefaultPadicPrecision = 8;

// Z_q / p^K with q = p^f, presented as Z/p^K[x] modulo the lift of the
// defining polynomial of F_q.
struct PadicContext {
    FqPtr field;
    uint32_t K;
    Int pK;
    std::vector<Int> modulus;   // monic, degree f

    static std::shared_ptr<const PadicContext> make(const FqPtr &F, uint32_t K);
};
using PadicCtxPtr = std::shared_ptr<const PadicContext>;

class PadicUnram {
public:
    PadicUnram() = default;
    PadicUnram(PadicCtxPtr ctx, long v);
    PadicUnram(PadicCtxPtr ctx, std::vector<Int> coeffs);

    const PadicCtxPtr &ctx() const { return ctx_; }
    const std::vector<Int> &coeffs() const { return c_; }
    bool is_zero() const;
    // min v_p over coordinates; ctx->K when zero at this precision
    uint32_t valuation() const;

    friend PadicUnram operator+(const PadicUnram &a, const PadicUnram &b);
    friend PadicUnram operator-(const PadicUnram &a, const PadicUnram &b);
    friend PadicUnram operator*(const PadicUnram &a, const PadicUnram &b);
    friend bool operator==(const PadicUnram &a, const PadicUnram &b) { return a.c_ == b.c_; }
    PadicUnram pow(uint64_t e) const;
    PadicUnram scaled(const Int &s) const;

private:
    void reduce();
    PadicCtxPtr ctx_;
    std::vector<Int> c_;
};

// sum_{i < p-1} c_i lambda^i with lambda = zeta_p - 1.
class EisensteinElem {
public:
    EisensteinElem() = default;
    explicit EisensteinElem(const PadicUnram &c0);
    static EisensteinElem lambda(const PadicCtxPtr &ctx);
    static EisensteinElem one_plus_lambda_pow(const PadicCtxPtr &ctx, uint64_t e);   // zeta_p^e

    const std::vector<PadicUnram> &coeffs() const { return c_; }
    const PadicCtxPtr &ctx() const { return c_.front().ctx(); }

    friend EisensteinElem operator+(const EisensteinElem &a, const EisensteinElem &b);
    friend EisensteinElem operator-(const EisensteinElem &a, const EisensteinElem &b);
    friend EisensteinElem operator*(const EisensteinElem &a, const EisensteinElem &b);
    EisensteinElem scaled(const PadicUnram &s) const;
    EisensteinElem pow(uint64_t e) const;

private:
    std::vector<PadicUnram> c_;
};

PadicUnram teichmuller_lift(const FqPtr &F, Elem x, uint32_t K);

// Normalised so that v(p) = 1.  Throws precision-exhausted when every
// coordinate vanishes at the working precision.
Rat padic_valuation(const EisensteinElem &e);

// -sum_{a != 0} chi^{-1}(a) psi(a) with zeta_{q-1} -> Teichmuller(generator)
// and zeta_p -> 1 + lambda.
EisensteinElem gauss_sum_padic(const MultChar &chi, const AddChar &psi, uint32_t K = kDefaultPadicPrecision);

// Valuation of the Gauss sum, doubling the precision until it resolves.
Rat gauss_sum_valuation(const MultChar &chi, const AddChar &psi);

// Generator h_f of F_{p^f}^* such that h_f^{(p^f-1)/(p^d-1)} and h_d have the
// same minimal polynomial over F_p for every d | f (a pseudo-Conway system).
// h_1 is the generator of F_p.
Elem compatible_generator(const FqPtr &F);

// p-adic valuation of a cyclotomic number under the embedding
// zeta_{m'} -> Teichmuller(h')^{(q'-1)/m'}, zeta_p -> 1 + lambda, where m = p^e m'
// with e <= 1, q' = p^{ord_{m'}(p)} and h' = compatible_generator(F_{q'}).
// Roots of unity of different orders then land in one compatible system.
Rat cyclotomic_valuation(const CycNum &a, uint32_t p);

} // namespace eps
