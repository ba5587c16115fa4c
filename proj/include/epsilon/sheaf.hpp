#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epsilon/characters.hpp"
#include "epsilon/cyclotomic.hpp"
#include "epsilon/poly.hpp"

namespace eps {

// L_chi(f) with chi = chi_base^k, chi_base(generator) = zeta_{q-1}.
struct KummerFactor {
    int64_t k = 0;
    RatFunc f;
};

// L_psi(c f) with psi = psi_1 on F_q.
struct ASFactor {
    Elem c = 1;
    RatFunc f;
};

struct BadPoint {
    ClosedPoint x;
    int64_t w = 0;   // tame residue exponent: theta = chi_base^w o N_{k(x)/F_q}
    int swan = 0;
};

// Rank-1 sheaf on an open of P^1, extended by zero.
class SheafExpr {
public:
    SheafExpr() = default;
    SheafExpr(FqPtr F, std::vector<KummerFactor> kummer, std::vector<ASFactor> as, CycNum twist, std::string text);

    const FqPtr &field() const { return F_; }
    const std::vector<KummerFactor> &kummer() const { return kummer_; }
    const std::vector<ASFactor> &as() const { return as_; }
    const CycNum &twist() const { return twist_; }
    const std::string &text() const { return text_; }

    // Kummer part as L_{chi_base}(c * prod_j P_j^{w_j}), only w_j != 0 kept.
    const std::vector<std::pair<Poly, int64_t>> &kummer_weights() const { return weights_; }
    int64_t kummer_const_log() const { return const_log_; }
    int64_t kummer_weight_infinity() const { return w_inf_; }
    int64_t kummer_weight_at(const ClosedPoint &x) const;
    // Sum of the AS arguments c*f, reduced at every pole.
    const RatFunc &as_function() const { return as_fn_; }
    bool has_as() const { return !as_.empty(); }

    const std::vector<BadPoint> &bad_points() const { return bad_; }
    const BadPoint *bad_at(const ClosedPoint &x) const;
    bool is_tame() const;
    bool is_constant() const { return kummer_.empty() && as_.empty(); }

private:
    void analyze();

    FqPtr F_;
    std::vector<KummerFactor> kummer_;
    std::vector<ASFactor> as_;
    CycNum twist_ = CycNum(1);
    std::string text_;

    std::vector<std::pair<Poly, int64_t>> weights_;
    int64_t const_log_ = 0, w_inf_ = 0;
    RatFunc as_fn_;
    std::vector<BadPoint> bad_;
};

RatFunc parse_ratfunc(const FqPtr &F, const std::string &text);
// kummer(chi[k], f) | as(c, f) | twist(cycnum) | const, joined by '*'.
SheafExpr parse_sheaf_spec(const FqPtr &F, const std::string &text);

// Trace of Frobenius at y in E = F_{q^n} (given as field_extend(F, n)).
CycNum trace_frobenius(const SheafExpr &S, const FqPtr &E, Elem y);
CycNum trace_at_infinity(const SheafExpr &S, uint32_t n);

// f' = f - (h^p - h) with pole order at x either <= 0 or prime to p.
RatFunc as_reduce(const RatFunc &f, const ClosedPoint &x);

struct LocalInvariants {
    int rank = 1;
    int stalk_dim = 1;
    int swan = 0;
    std::optional<MultChar> tame_char;   // over k(x)
    int artin = 0;
};
LocalInvariants local_invariants(const SheafExpr &S, const ClosedPoint &x);

// chi(P^1, j_! F) = chi_c(U) - sum deg(x) swan_x.
int64_t euler_char(const SheafExpr &S);

} // namespace eps
