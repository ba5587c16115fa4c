#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "epsilon/local_epsilon.hpp"
#include "epsilon/sheaf.hpp"
#include "epsilon/theta.hpp"

namespace eps {

// T*_X X (zero section) or the conormal fiber T*_x X of one closed point.
struct CurveComponent {
    bool zero = true;
    ClosedPoint x;

    static CurveComponent zero_section() { return CurveComponent{}; }
    static CurveComponent fiber(const ClosedPoint &x) { return CurveComponent{false, x}; }
    std::string str() const;
    friend bool operator==(const CurveComponent &a, const CurveComponent &b) {
        return a.zero == b.zero && (a.zero || a.x == b.x);
    }
    friend bool operator<(const CurveComponent &a, const CurveComponent &b);
};

// A component on a product of curves is the ordered tuple of factor components;
// for a single curve the tuple has length one.
using Component = std::vector<CurveComponent>;
std::string component_str(const Component &c);

struct CharCycle {
    uint32_t dim = 1;   // number of curve factors
    std::map<Component, int64_t> mult;
    int64_t at(const Component &c) const;
};

struct EpsilonCycle {
    uint64_t q = 0;
    CharCycle cc;
    std::map<Component, ThetaClass> coeff;
    std::set<Component> derived;   // components obtained by global division
    const ThetaClass &at(const Component &c) const;
};

CharCycle char_cycle_curve(const SheafExpr &S);
// With wild_by_division the unique wild fiber is filled in from the global class.
EpsilonCycle epsilon_cycle_curve(const SheafExpr &S, bool wild_by_division = false);

EpsilonCycle tate_twist(const EpsilonCycle &E, const Rat &r);
// E' with coefficients cls(alpha)^{m_a} * E_a, the expected cycle of twist(alpha) * F.
EpsilonCycle twist_by(const EpsilonCycle &E, const CycNum &alpha);

ThetaClass intersect_zero_section(const EpsilonCycle &E, int genus = 0);
int64_t intersect_zero_section(const CharCycle &C, int genus = 0);

// Local intersection with the section df at a rational point u of a curve.
ThetaClass intersect_df(const EpsilonCycle &E, const RatFunc &f, const ClosedPoint &u);
int64_t intersect_df(const CharCycle &C, const RatFunc &f, const ClosedPoint &u);

EpsilonCycle external_product(const std::vector<EpsilonCycle> &factors);
// Drops every component with a fiber at infinity (restriction to affine space).
EpsilonCycle restrict_affine(const EpsilonCycle &E);
// Pullback along X x A^1 -> X, components (a, zero section).
EpsilonCycle smooth_pullback(const EpsilonCycle &E);

// j_! of the external product of L_{chi_i}(x_i) on A^n, n in {1, 2, 3}, twisted by alpha.
EpsilonCycle tame_snc_epsilon(const std::vector<MultChar> &chars, const CycNum &alpha = CycNum(1));

bool cycles_theta_eq(const EpsilonCycle &a, const EpsilonCycle &b);

} // namespace eps
