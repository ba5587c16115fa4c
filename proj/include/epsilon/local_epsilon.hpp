#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epsilon/characters.hpp"
#include "epsilon/sheaf.hpp"
#include "epsilon/theta.hpp"

namespace eps {

// omega = g dx.
struct LocalForm {
    RatFunc g;

    static LocalForm dx(const FqPtr &F) { return LocalForm{RatFunc::constant(F, 1)}; }
    static LocalForm parse(const FqPtr &F, const std::string &text);
    int ord(const ClosedPoint &x) const;   // ord_inf(dx) = -2
    std::vector<std::pair<ClosedPoint, int>> divisor() const;
};

// "inf", a field element, or a monic irreducible polynomial in x.
ClosedPoint parse_point(const FqPtr &F, const std::string &text);

struct LocalEpsilon {
    ClosedPoint x;
    int m = 0;              // ord_x(omega)
    uint64_t qx = 0;        // |k(x)|
    bool ramified = false;
    std::optional<MultChar> theta;   // residue character over k(x)
    CycNum exact0;          // tau(theta-bar, psi_x) q_x^m A^{m+1}, or A^{m+1} q_x^m
    ThetaClass eps0;        // class of exact0
    ThetaClass eps;         // eps0 divided by the stalk class, the factor entering the product
};

// Throws wild-point-unsupported at a wild point.
LocalEpsilon local_epsilon(const SheafExpr &S, const ClosedPoint &x, const LocalForm &omega);
inline ThetaClass local_epsilon_class(const SheafExpr &S, const ClosedPoint &x, const LocalForm &omega) {
    return local_epsilon(S, x, omega).eps0;
}

// Points where the local factor can differ from 1: bad points and the support of div(omega).
std::vector<ClosedPoint> relevant_points(const SheafExpr &S, const LocalForm &omega);

// q * prod_x eps_x over the relevant points (all must be tame).
ThetaClass local_product(const SheafExpr &S, const LocalForm &omega);

// Class at the unique wild point obtained from the global class; not an independent computation.
struct WildDivision {
    ClosedPoint x;
    ThetaClass cls;
    ThetaClass global;
};
WildDivision wild_epsilon_by_global_division(const SheafExpr &S, const LocalForm &omega);

// RPhi at 0 of the direct image under t -> t^n of the constant sheaf (chi trivial)
// or of L_chi.  Characters live on char_field = F_{q^r} with r minimal.
struct VanishingCycleData {
    FqPtr base;
    ClosedPoint point;
    FqPtr char_field;
    std::vector<MultChar> characters;
    int dimtot = 0;
    CycNum twist = CycNum(1);   // unramified twist carried by every character
};
VanishingCycleData vanishing_cycles_kummer_cover(const FqPtr &F, uint32_t n, const MultChar &chi);
inline VanishingCycleData vanishing_cycles_kummer_cover(const FqPtr &F, uint32_t n) {
    return vanishing_cycles_kummer_cover(F, n, MultChar(F, 0));
}

// prod over characters of cls(tau_{F_{q^r}}(theta-bar, psi o Tr))^{1/r}, times cls(twist)^{dimtot}.
ThetaClass epsilon_of_vanishing_cycles(const VanishingCycleData &V);

} // namespace eps
