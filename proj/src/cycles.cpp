#include "epsilon/cycles.hpp"

#include "epsilon/arith.hpp"
#include "epsilon/charsums.hpp"
#include "epsilon/error.hpp"

namespace eps {

namespace {

ThetaClass q_power(uint64_t q, const Rat &e) { return ThetaClass::power_of(Int(static_cast<unsigned long>(q)), e); }

// d(pi) for the standard local parameter at x: 1/x at infinity, P otherwise.
LocalForm dpi(const ClosedPoint &x, const FqPtr &F) {
    if (x.at_infinity) return LocalForm{RatFunc::constant(F, F->neg(1)) / RatFunc::x(F).pow(2)};
    return LocalForm{RatFunc(x.P.derivative())};
}

} // namespace

std::string CurveComponent::str() const { return zero ? "Zero" : "F[" + x.str() + "]"; }

bool operator<(const CurveComponent &a, const CurveComponent &b) {
    if (a.zero != b.zero) return a.zero;
    if (a.zero) return false;
    return a.x < b.x;
}

std::string component_str(const Component &c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) s += (i ? " x " : "") + c[i].str();
    return s;
}

int64_t CharCycle::at(const Component &c) const {
    auto it = mult.find(c);
    return it == mult.end() ? 0 : it->second;
}

const ThetaClass &EpsilonCycle::at(const Component &c) const {
    static const ThetaClass one;
    auto it = coeff.find(c);
    return it == coeff.end() ? one : it->second;
}

CharCycle char_cycle_curve(const SheafExpr &S) {
    CharCycle C;
    C.mult[{CurveComponent::zero_section()}] = -1;
    for (auto &b : S.bad_points()) C.mult[{CurveComponent::fiber(b.x)}] = -local_invariants(S, b.x).artin;
    return C;
}

EpsilonCycle epsilon_cycle_curve(const SheafExpr &S, bool wild_by_division) {
    const FqPtr &F = S.field();
    EpsilonCycle E;
    E.q = F->q();
    E.cc = char_cycle_curve(S);
    const ThetaClass A = ThetaClass::of(S.twist());
    E.coeff[{CurveComponent::zero_section()}] = A.inverse() * q_power(E.q, Rat(-1, 2));
    for (auto &b : S.bad_points()) {
        const Component c{CurveComponent::fiber(b.x)};
        const uint32_t d = b.x.degree();
        ThetaClass e0;
        if (b.swan > 0) {
            if (!wild_by_division)
                fail("wild-point-unsupported", "epsilon cycle needs the local class at the wild point " + b.x.str());
            WildDivision w = wild_epsilon_by_global_division(S, LocalForm::dx(F));
            // move from dx to d(pi): the class scales by (A_x q_x)^{m' - m}
            const int m = LocalForm::dx(F).ord(b.x);
            e0 = w.cls * (A.pow(Rat(d)) * q_power(ipow(E.q, d), Rat(1))).pow(Rat(-m));
            E.derived.insert(c);
        } else {
            e0 = local_epsilon(S, b.x, dpi(b.x, F)).eps0;
        }
        E.coeff[c] = e0.pow(Rat(-1, static_cast<long>(d)));
    }
    return E;
}

EpsilonCycle tate_twist(const EpsilonCycle &E, const Rat &r) {
    EpsilonCycle T = E;
    for (auto &[c, v] : T.coeff) v = v * q_power(E.q, -r * Rat(E.cc.at(c)));
    return T;
}

EpsilonCycle twist_by(const EpsilonCycle &E, const CycNum &alpha) {
    EpsilonCycle T = E;
    const ThetaClass a = ThetaClass::of(alpha);
    for (auto &[c, v] : T.coeff) v = v * a.pow(Rat(E.cc.at(c)));
    return T;
}

ThetaClass intersect_zero_section(const EpsilonCycle &E, int genus) {
    if (E.cc.dim != 1) fail("not-a-curve", "zero-section intersection is implemented on curves");
    ThetaClass acc;
    for (auto &[c, v] : E.coeff) {
        if (c[0].zero) acc *= v.pow(Rat(2 * genus - 2));
        else acc *= v.pow(Rat(c[0].x.degree()));
    }
    return acc;
}

int64_t intersect_zero_section(const CharCycle &C, int genus) {
    if (C.dim != 1) fail("not-a-curve", "zero-section intersection is implemented on curves");
    int64_t acc = 0;
    for (auto &[c, m] : C.mult) acc += m * (c[0].zero ? 2 * genus - 2 : static_cast<int64_t>(c[0].x.degree()));
    return acc;
}

namespace {

int df_order(const RatFunc &f, const ClosedPoint &u) {
    if (u.at_infinity || u.degree() != 1) fail("not-rational-point", "intersection with df is implemented at finite rational points");
    if (f.ord(u) < 0) fail("not-isolated", "f has a pole at " + u.str());
    RatFunc d = f.derivative();
    if (d.is_zero()) fail("not-isolated", "df vanishes identically");
    return d.ord(u);
}

} // namespace

ThetaClass intersect_df(const EpsilonCycle &E, const RatFunc &f, const ClosedPoint &u) {
    if (E.cc.dim != 1) fail("not-a-curve", "df intersection is implemented on curves");
    const int o = df_order(f, u);
    ThetaClass acc;
    for (auto &[c, v] : E.coeff) {
        if (c[0].zero) acc *= v.pow(Rat(o));
        else if (c[0].x == u) acc *= v;
    }
    return acc;
}

int64_t intersect_df(const CharCycle &C, const RatFunc &f, const ClosedPoint &u) {
    if (C.dim != 1) fail("not-a-curve", "df intersection is implemented on curves");
    const int o = df_order(f, u);
    int64_t acc = 0;
    for (auto &[c, m] : C.mult) {
        if (c[0].zero) acc += m * o;
        else if (c[0].x == u) acc += m;
    }
    return acc;
}

EpsilonCycle external_product(const std::vector<EpsilonCycle> &factors) {
    if (factors.empty()) fail("bad-argument", "external product of no factors");
    EpsilonCycle out;
    out.q = factors[0].q;
    out.cc.dim = 0;
    for (auto &E : factors) {
        if (E.q != out.q) fail("field-mismatch", "factors live over different fields");
        out.cc.dim += E.cc.dim;
    }
    // walk the cartesian product of the supports
    std::vector<std::vector<Component>> supp;
    for (auto &E : factors) {
        std::vector<Component> s;
        for (auto &[c, m] : E.cc.mult) s.push_back(c);
        if (s.empty()) return out;
        supp.push_back(std::move(s));
    }
    std::vector<size_t> idx(factors.size(), 0);
    for (;;) {
        Component c;
        std::vector<int64_t> m(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) {
            const Component &ci = supp[i][idx[i]];
            c.insert(c.end(), ci.begin(), ci.end());
            m[i] = factors[i].cc.at(ci);
        }
        int64_t mult = 1;
        ThetaClass v;
        bool derived = false;
        for (size_t i = 0; i < factors.size(); ++i) {
            mult *= m[i];
            int64_t e = 1;
            for (size_t j = 0; j < factors.size(); ++j)
                if (j != i) e *= m[j];
            const Component &ci = supp[i][idx[i]];
            v *= factors[i].at(ci).pow(Rat(e));
            derived = derived || factors[i].derived.count(ci);
        }
        out.cc.mult[c] = mult;
        out.coeff[c] = v;
        if (derived) out.derived.insert(c);
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == supp[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

EpsilonCycle restrict_affine(const EpsilonCycle &E) {
    EpsilonCycle out;
    out.q = E.q;
    out.cc.dim = E.cc.dim;
    for (auto &[c, m] : E.cc.mult) {
        bool at_inf = false;
        for (auto &cc : c) at_inf = at_inf || (!cc.zero && cc.x.at_infinity);
        if (at_inf) continue;
        out.cc.mult[c] = m;
        out.coeff[c] = E.at(c);
        if (E.derived.count(c)) out.derived.insert(c);
    }
    return out;
}

EpsilonCycle smooth_pullback(const EpsilonCycle &E) {
    EpsilonCycle T = tate_twist(E, Rat(-1, 2)), out;
    out.q = E.q;
    out.cc.dim = E.cc.dim + 1;
    for (auto &[c, m] : E.cc.mult) {
        Component c2 = c;
        c2.push_back(CurveComponent::zero_section());
        out.cc.mult[c2] = -m;
        out.coeff[c2] = T.at(c).inverse();
    }
    return out;
}

EpsilonCycle tame_snc_epsilon(const std::vector<MultChar> &chars, const CycNum &alpha) {
    const size_t n = chars.size();
    if (n < 1 || n > 3) fail("bad-argument", "tame SNC cycles are implemented for n = 1, 2, 3");
    const FqPtr F = chars[0].field;
    std::vector<ThetaClass> J;
    for (auto &chi : chars) {
        if (chi.field != F) fail("field-mismatch", "characters over different fields");
        if (chi.order() <= 1) fail("bad-argument", "each character must be nontrivial");
        J.push_back(jacobi_character_class(TameMonodromy{F, {chi}}));
    }
    EpsilonCycle E;
    E.q = F->q();
    E.cc.dim = static_cast<uint32_t>(n);
    const int64_t s = (n % 2 == 0) ? 1 : -1;
    const ThetaClass A = ThetaClass::of(alpha);
    const ClosedPoint origin = ClosedPoint::rational(F, 0);
    for (uint32_t B = 0; B < (1u << n); ++B) {
        Component c;
        int64_t size = 0;
        ThetaClass v = A.pow(Rat(s));
        for (size_t a = 0; a < n; ++a) {
            if (B >> a & 1) {
                c.push_back(CurveComponent::fiber(origin));
                v *= J[a].pow(Rat(s));
                ++size;
            } else {
                c.push_back(CurveComponent::zero_section());
            }
        }
        v *= q_power(E.q, -rat(size - static_cast<int64_t>(n), 2) * Rat(s));
        E.cc.mult[c] = s;
        E.coeff[c] = v;
    }
    return E;
}

bool cycles_theta_eq(const EpsilonCycle &a, const EpsilonCycle &b) {
    if (a.cc.mult != b.cc.mult) return false;
    for (auto &[c, m] : a.cc.mult)
        if (!theta_eq(a.at(c), b.at(c))) return false;
    return true;
}

} // namespace eps
