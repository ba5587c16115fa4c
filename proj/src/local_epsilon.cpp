#include "epsilon/local_epsilon.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "epsilon/arith.hpp"
#include "epsilon/charsums.hpp"
#include "epsilon/error.hpp"
#include "epsilon/lfunction.hpp"

namespace eps {

LocalForm LocalForm::parse(const FqPtr &F, const std::string &text) {
    RatFunc g = parse_ratfunc(F, text);
    if (g.is_zero()) fail("zero-function", "the form g dx needs g != 0");
    return LocalForm{g};
}

int LocalForm::ord(const ClosedPoint &x) const {
    if (g.is_zero()) fail("zero-function", "the form g dx needs g != 0");
    return g.ord(x) + (x.at_infinity ? -2 : 0);
}

std::vector<std::pair<ClosedPoint, int>> LocalForm::divisor() const {
    if (g.is_zero()) fail("zero-function", "the form g dx needs g != 0");
    std::map<ClosedPoint, int> d;
    for (auto &[x, o] : g.divisor()) d[x] += o;
    d[ClosedPoint::infinity(g.field())] -= 2;
    std::vector<std::pair<ClosedPoint, int>> out;
    for (auto &[x, o] : d)
        if (o != 0) out.emplace_back(x, o);
    return out;
}

ClosedPoint parse_point(const FqPtr &F, const std::string &text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "inf" || t == "infinity") return ClosedPoint::infinity(F);
    RatFunc r = parse_ratfunc(F, t);
    if (!r.den().is_constant()) fail("bad-point", "'" + text + "' is not a polynomial");
    Poly P = r.num().scaled(F->inv(r.den().lc()));
    if (P.degree() <= 0) {
        // a field element a names the point x = a
        Elem a = P.degree() == 0 ? P.coeff(0) : 0;
        return ClosedPoint::rational(F, a);
    }
    P = P.monic();
    if (!poly_is_irreducible(P)) fail("bad-point", "'" + text + "' is not irreducible");
    return ClosedPoint::finite(P);
}

LocalEpsilon local_epsilon(const SheafExpr &S, const ClosedPoint &x, const LocalForm &omega) {
    const FqPtr &F = S.field();
    LocalEpsilon le;
    le.x = x;
    le.m = omega.ord(x);
    const uint32_t d = x.degree();
    le.qx = ipow(F->q(), d);
    const CycNum A = S.twist().pow(d);
    const CycNum qm = CycNum(Rat(Int(static_cast<unsigned long>(le.qx)))).pow(le.m);
    const BadPoint *b = S.bad_at(x);
    if (b && b->swan > 0)
        fail("wild-point-unsupported", "no closed-form local factor at the wild point " + x.str());
    if (b) {
        le.ramified = true;
        MultChar theta = char_inflate(MultChar(F, b->w), d);
        le.theta = theta;
        AddChar psi = add_char_inflate(AddChar::canonical(F), d);
        le.exact0 = gauss_sum(theta.inverse(), psi) * qm * A.pow(le.m + 1);
        le.eps0 = ThetaClass::of(le.exact0);
        le.eps = le.eps0;
    } else {
        le.exact0 = A.pow(le.m + 1) * qm;
        le.eps0 = ThetaClass::of(le.exact0);
        le.eps = ThetaClass::of(A.pow(le.m) * qm);
    }
    return le;
}

std::vector<ClosedPoint> relevant_points(const SheafExpr &S, const LocalForm &omega) {
    std::vector<ClosedPoint> pts;
    for (auto &b : S.bad_points()) pts.push_back(b.x);
    for (auto &[x, o] : omega.divisor()) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

ThetaClass local_product(const SheafExpr &S, const LocalForm &omega) {
    ThetaClass acc = ThetaClass::power_of(Int(static_cast<unsigned long>(S.field()->q())), Rat(1));
    for (auto &x : relevant_points(S, omega)) acc *= local_epsilon(S, x, omega).eps;
    return acc;
}

WildDivision wild_epsilon_by_global_division(const SheafExpr &S, const LocalForm &omega) {
    std::vector<ClosedPoint> wild;
    for (auto &b : S.bad_points())
        if (b.swan > 0) wild.push_back(b.x);
    if (wild.size() != 1)
        fail("wild-point-count", "expected exactly one wild point, found " + std::to_string(wild.size()));
    WildDivision w;
    w.x = wild[0];
    w.global = global_epsilon(S).cls;
    ThetaClass rest = ThetaClass::power_of(Int(static_cast<unsigned long>(S.field()->q())), Rat(1));
    for (auto &x : relevant_points(S, omega))
        if (!(x == w.x)) rest *= local_epsilon(S, x, omega).eps;
    w.cls = w.global / rest;
    return w;
}

VanishingCycleData vanishing_cycles_kummer_cover(const FqPtr &F, uint32_t n, const MultChar &chi) {
    if (n == 0) fail("bad-degree", "cover degree must be positive");
    if (n % F->p() == 0) fail("p-divides-n", "t -> t^" + std::to_string(n) + " is wild in characteristic " + std::to_string(F->p()));
    VanishingCycleData V;
    V.base = F;
    V.point = ClosedPoint::rational(F, 0);
    V.char_field = F;
    if (n == 1) {
        if (!chi.is_trivial()) V.characters.push_back(chi);
        V.dimtot = static_cast<int>(V.characters.size());
        return V;
    }
    // smallest r with n | q^r - 1 and chi o N an n-th power on F_{q^r}
    for (uint32_t r = 1;; ++r) {
        const uint64_t Q = ipow(F->q(), r);
        if (Q > kMaxTabulatedField) fail("field-too-large", "characters of the cover need F_" + std::to_string(Q));
        const uint64_t Q1 = Q - 1;
        if (Q1 % n != 0) continue;
        const MultChar base = char_inflate(chi, r);
        const uint64_t K = static_cast<uint64_t>(mod(base.k, static_cast<int64_t>(Q1)));
        if (K % n != 0) continue;
        V.char_field = base.field;
        for (uint64_t t = 0; t < n; ++t) {
            const uint64_t j = (K / n + t * (Q1 / n)) % Q1;
            if (j != 0) V.characters.emplace_back(base.field, static_cast<int64_t>(j));
        }
        break;
    }
    V.dimtot = static_cast<int>(V.characters.size());
    return V;
}

ThetaClass epsilon_of_vanishing_cycles(const VanishingCycleData &V) {
    ThetaClass acc;
    if (V.characters.empty()) return acc;
    const uint32_t r = V.char_field->f() / V.base->f();
    AddChar psi = AddChar::canonical(V.char_field);
    for (auto &theta : V.characters) acc *= ThetaClass::of(gauss_sum(theta.inverse(), psi)).pow(Rat(1, r));
    if (!V.twist.is_one()) acc *= ThetaClass::of(V.twist).pow(Rat(V.dimtot));
    return acc;
}

} // namespace eps
