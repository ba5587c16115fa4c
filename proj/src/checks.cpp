#include "epsilon/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "epsilon/arith.hpp"
#include "epsilon/charsums.hpp"
#include "epsilon/cycles.hpp"
#include "epsilon/error.hpp"
#include "epsilon/lfunction.hpp"
#include "epsilon/local_epsilon.hpp"
#include "epsilon/padic.hpp"

namespace eps {

std::string CheckParams::get(const std::string &key) const {
    auto it = values.find(key);
    if (it == values.end()) fail("missing-parameter", "parameter '" + key + "' is required");
    return it->second;
}

std::string CheckParams::get(const std::string &key, const std::string &dflt) const {
    auto it = values.find(key);
    return it == values.end() ? dflt : it->second;
}

int64_t CheckParams::get_int(const std::string &key) const {
    const std::string v = get(key);
    try {
        size_t used = 0;
        int64_t r = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::logic_error &) {
        fail("bad-parameter", "parameter '" + key + "' must be an integer, got '" + v + "'");
    }
}

int64_t CheckParams::get_int(const std::string &key, int64_t dflt) const { return has(key) ? get_int(key) : dflt; }

FqPtr CheckParams::field() const {
    if (has("q") && !has("p")) {
        const int64_t q = get_int("q");
        auto fs = q > 1 ? factorize(static_cast<uint64_t>(q)) : std::vector<std::pair<uint64_t, int>>{};
        if (fs.size() != 1) fail("bad-parameter", "q = " + std::to_string(q) + " is not a prime power");
        return Fq::make(static_cast<uint32_t>(fs[0].first), static_cast<uint32_t>(fs[0].second));
    }
    const int64_t p = get_int("p"), f = get_int("f", 1);
    if (p < 2 || p > 65521 || f < 1 || f > 64) fail("bad-parameter", "field parameters out of range");
    return Fq::make(static_cast<uint32_t>(p), static_cast<uint32_t>(f));
}

std::string CheckParams::echo() const {
    std::string s;
    for (auto &[k, v] : values) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

const std::vector<std::string> &check_names() {
    static const std::vector<std::string> names{"gauss-norm", "hasse-davenport", "stickelberger", "jacobi-independence",
                                                 "gos", "milnor", "convolution", "external-product", "snc",
                                                 "product-formula", "theta-laws"};
    return names;
}

bool is_check_name(const std::string &name) {
    const auto &n = check_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

std::string qstr(uint64_t q) { return std::to_string(q); }

CheckReport make(const std::string &check, const CheckParams &P, const std::string &extra) {
    CheckReport r;
    r.check = check;
    r.input = P.echo();
    if (!extra.empty()) r.input += (r.input.empty() ? "" : " ") + extra;
    return r;
}

CheckReport skipped(const std::string &check, const CheckParams &P, const std::string &extra, const std::string &why) {
    CheckReport r = make(check, P, extra);
    r.skipped = true;
    r.verdict = true;
    r.reason = why;
    return r;
}

bool is_skip_code(const std::string &c) {
    static const std::set<std::string> codes{"unsupported-wild-point", "wild-point-unsupported", "wild-point-count",
                                             "p-divides-n", "field-too-large", "cohomology-obstruction"};
    return codes.count(c) != 0;
}

ThetaClass qcls(uint64_t q, const Rat &e) { return ThetaClass::power_of(Int(static_cast<unsigned long>(q)), e); }

} // namespace

std::vector<CheckReport> check_gauss_norm(const CheckParams &P) {
    FqPtr F = P.field();
    AddChar psi = AddChar::canonical(F);
    std::vector<CheckReport> out;
    for (uint64_t k = 1; k + 1 < F->q(); ++k) {
        MultChar chi(F, static_cast<int64_t>(k));
        CycNum tau = gauss_sum(chi, psi);
        CheckReport r = make("gauss-norm", P, "k=" + std::to_string(k));
        // conj(tau(chi)) read as tau(chi-bar); the complex conjugate itself has tau * conj = q
        const CycNum q(Rat(Int(static_cast<unsigned long>(F->q()))));
        CycNum lhs = tau * gauss_sum(chi.inverse(), psi);
        CycNum rhs = char_eval(chi, F->neg(1)) * q;
        CycNum abs2 = tau * tau.conj();
        r.left = lhs.str();
        r.right = rhs.str();
        r.verdict = lhs == rhs && abs2 == q;
        r.trace.push_back("tau(chi, psi) = " + tau.str());
        r.trace.push_back("tau(chi-bar, psi) = " + gauss_sum(chi.inverse(), psi).str());
        r.trace.push_back("chi(-1) = " + char_eval(chi, F->neg(1)).str());
        r.trace.push_back("tau * complex conjugate = " + abs2.str());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_hasse_davenport(const CheckParams &P) {
    FqPtr F = P.field();
    const int64_t n = P.get_int("n", 2);
    if (n < 1 || n > 32) fail("bad-parameter", "n must be in 1..32");
    if (ipow(F->q(), static_cast<unsigned>(n)) > kMaxTabulatedField)
        return {skipped("hasse-davenport", P, "", "F_" + qstr(F->q()) + "^" + std::to_string(n) + " exceeds the table limit")};
    AddChar psi = AddChar::canonical(F);
    std::vector<CheckReport> out;
    for (uint64_t k = 0; k + 1 < F->q(); ++k) {
        MultChar chi(F, static_cast<int64_t>(k));
        auto [a, b] = hasse_davenport(chi, psi, static_cast<uint32_t>(n));
        CheckReport r = make("hasse-davenport", P, "k=" + std::to_string(k));
        r.left = a.str();
        r.right = b.str();
        r.verdict = a == b;
        r.trace.push_back("tau(chi o N, psi o Tr) = " + a.str());
        r.trace.push_back("tau(chi, psi)^n = " + b.str());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> check_stickelberger(const CheckParams &P) {
    FqPtr F = P.field();
    AddChar psi = AddChar::canonical(F);
    std::vector<CheckReport> out;
    for (uint64_t k = 1; k + 1 < F->q(); ++k) {
        MultChar chi(F, static_cast<int64_t>(k));
        CheckReport r = make("stickelberger", P, "k=" + std::to_string(k));
        Rat s = stickelberger_valuation(chi), v = gauss_sum_valuation(chi, psi);
        r.left = s.get_str();
        r.right = v.get_str();
        r.verdict = s == v;
        r.trace.push_back("digit-sum valuation = " + s.get_str());
        r.trace.push_back("valuation of the Teichmuller-lifted Gauss sum = " + v.get_str());
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

CheckReport jacobi_case(const CheckParams &P, const JacobiDatum &D, const std::string &label) {
    const FqPtr &F = D.base;
    CheckReport r = make("jacobi-independence", P, label);
    CycNum ref;
    bool ok = true;
    for (Elem c = 1; c < F->q(); ++c) {
        CycNum j = jacobi_sum(D, AddChar(F, c));
        if (c == 1) {
            ref = j;
            r.trace.push_back("psi_1: " + j.str());
        } else if (!(j == ref)) {
            ok = false;
            r.trace.push_back("psi_" + std::to_string(c) + " differs: " + j.str());
        }
    }
    r.left = ref.str();
    r.right = ok ? ref.str() : "psi-dependent";
    r.verdict = ok;
    return r;
}

} // namespace

std::vector<CheckReport> check_jacobi_independence(const CheckParams &P) {
    FqPtr F = P.field();
    const int64_t n = static_cast<int64_t>(F->order());
    std::vector<CheckReport> out;
    for (int64_t a = 1; a < n; ++a)
        for (int64_t b = a; b < n; ++b) {
            if ((a + b) % n == 0) {
                JacobiDatum D{F, {MultChar(F, a), MultChar(F, b)}};
                out.push_back(jacobi_case(P, D, "chars=" + std::to_string(a) + "," + std::to_string(b)));
            }
            for (int64_t c = b; c < n; ++c)
                if ((a + b + c) % n == 0) {
                    JacobiDatum D{F, {MultChar(F, a), MultChar(F, b), MultChar(F, c)}};
                    out.push_back(jacobi_case(P, D, "chars=" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)));
                }
        }
    // one character on F_{q^2} against one on F_q
    if (P.get_int("mixed", 1) && ipow(F->q(), 2) <= kMaxTabulatedField) {
        FqPtr E = field_extend(F, 2);
        const int64_t m = static_cast<int64_t>(E->order());
        for (int64_t j = 1; j < m; ++j)
            for (int64_t k = 1; k < n; ++k) {
                JacobiDatum D{F, {MultChar(E, j), MultChar(F, k)}};
                if (!D.is_valid()) continue;
                out.push_back(jacobi_case(P, D, "chars=" + std::to_string(j) + "@2," + std::to_string(k)));
            }
    }
    return out;
}

std::vector<CheckReport> check_gos(const CheckParams &P) {
    FqPtr F = P.field();
    SheafExpr S = parse_sheaf_spec(F, P.get("sheaf"));
    CheckReport r = make("gos", P, "");
    const int64_t chi = euler_char(S);
    const int64_t cc = intersect_zero_section(char_cycle_curve(S));
    LPolynomial L = l_polynomial(S);
    r.left = std::to_string(L.degree());
    r.right = std::to_string(-cc);
    r.verdict = L.degree() == -chi && cc == chi;
    r.trace.push_back("deg L = " + std::to_string(L.degree()));
    r.trace.push_back("euler characteristic = " + std::to_string(chi));
    r.trace.push_back("(CC, zero section) = " + std::to_string(cc));
    return {r};
}

std::vector<CheckReport> check_milnor(const CheckParams &P) {
    FqPtr F = P.field();
    const int64_t n = P.get_int("n");
    if (n < 1 || n > 64) fail("bad-parameter", "n must be in 1..64");
    const std::string spec = P.get("sheaf", "const");
    SheafExpr S = parse_sheaf_spec(F, spec);
    MultChar chi(F, 0);
    if (!S.is_constant()) {
        if (S.kummer().size() != 1 || S.has_as() || !(S.kummer()[0].f == RatFunc::x(F)))
            fail("bad-parameter", "milnor takes const or kummer(chi[k], x), optionally twisted");
        chi = MultChar(F, S.kummer()[0].k);
    }
    if (n % F->p() == 0) return {skipped("milnor", P, "", "p divides n, so x^n is not tame")};
    VanishingCycleData V;
    try {
        V = vanishing_cycles_kummer_cover(F, static_cast<uint32_t>(n), chi);
    } catch (const Error &e) {
        if (e.code() == "field-too-large") return {skipped("milnor", P, "", e.what())};
        throw;
    }
    V.twist = S.twist();
    EpsilonCycle E = epsilon_cycle_curve(S);
    const RatFunc f = RatFunc::x(F).pow(n);
    const ClosedPoint u = ClosedPoint::rational(F, 0);

    CheckReport re = make("milnor", P, "part=epsilon");
    ThetaClass lhs = intersect_df(E, f, u), rhs = epsilon_of_vanishing_cycles(V).inverse();
    re.left = lhs.str();
    re.right = rhs.str();
    re.verdict = theta_eq(lhs, rhs);
    re.trace.push_back("ord_0 f' = " + std::to_string(f.derivative().ord(u)));
    for (auto &[c, v] : E.coeff) re.trace.push_back("E " + component_str(c) + " = " + v.str());
    re.trace.push_back("RPhi on F_" + qstr(V.char_field->q()) + ": " + std::to_string(V.characters.size()) + " characters");
    for (auto &th : V.characters)
        re.trace.push_back("  " + th.str() + ": tau(theta-bar) = " + gauss_sum(th.inverse(), AddChar::canonical(V.char_field)).str());

    CheckReport rc = make("milnor", P, "part=cc");
    const int64_t cl = intersect_df(E.cc, f, u);
    rc.left = std::to_string(cl);
    rc.right = std::to_string(-V.dimtot);
    rc.verdict = cl == -V.dimtot;
    rc.trace.push_back("dimtot RPhi = " + std::to_string(V.dimtot));
    return {re, rc};
}

std::vector<CheckReport> check_convolution(const CheckParams &P) {
    FqPtr F = P.field();
    const int64_t n1 = P.get_int("n1"), n2 = P.get_int("n2");
    if (n1 < 2 || n2 < 2 || n1 > 16 || n2 > 16) fail("bad-parameter", "n1, n2 must be in 2..16");
    if ((n1 * n2) % F->p() == 0) return {skipped("convolution", P, "", "p divides n1*n2")};
    const uint64_t l = std::lcm(static_cast<uint64_t>(n1), static_cast<uint64_t>(n2));
    uint32_t r = 1;
    while ((ipow(F->q(), r) - 1) % l != 0) ++r;
    if (ipow(F->q(), r) > kMaxTabulatedField) return {skipped("convolution", P, "", "characters need F_" + qstr(F->q()) + "^" + std::to_string(r))};
    FqPtr E = field_extend(F, r);
    const int64_t Q1 = static_cast<int64_t>(E->order());
    AddChar psi = AddChar::canonical(E);
    CheckReport rep = make("convolution", P, "");
    rep.trace.push_back("characters on F_" + qstr(E->q()));
    // RPhi of x^{n1} + y^{n2}: one character theta1 theta2 twisted by a Jacobi sum per pair
    ThetaClass lhs;
    for (int64_t a = 1; a < n1; ++a)
        for (int64_t b = 1; b < n2; ++b) {
            MultChar t1(E, a * (Q1 / n1)), t2(E, b * (Q1 / n2));
            MultChar t = t1 * t2;
            ThetaClass piece;
            if (t.is_trivial()) {
                piece = qcls(E->q(), Rat(1));
                rep.trace.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ") unramified, Frobenius q^" + std::to_string(r));
            } else {
                CycNum g = gauss_sum(t.inverse(), psi), J = classical_jacobi_sum(t1, t2);
                piece = ThetaClass::of(g) * ThetaClass::of(J);
                rep.trace.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ") tau = " + g.str() + ", J = " + J.str());
            }
            lhs *= piece.pow(Rat(1, r));
        }
    VanishingCycleData V1 = vanishing_cycles_kummer_cover(F, static_cast<uint32_t>(n1));
    VanishingCycleData V2 = vanishing_cycles_kummer_cover(F, static_cast<uint32_t>(n2));
    ThetaClass rhs = epsilon_of_vanishing_cycles(V1).pow(Rat(V2.dimtot)) * epsilon_of_vanishing_cycles(V2).pow(Rat(V1.dimtot));
    rep.left = lhs.str();
    rep.right = rhs.str();
    rep.verdict = theta_eq(lhs, rhs);
    return {rep};
}

std::vector<CheckReport> check_external_product(const CheckParams &P) {
    FqPtr F = P.field();
    SheafExpr S = parse_sheaf_spec(F, P.get("sheaf"));
    EpsilonCycle E = epsilon_cycle_curve(S);
    EpsilonCycle C = restrict_affine(epsilon_cycle_curve(parse_sheaf_spec(F, "const")));
    std::vector<CheckReport> out;

    CheckReport rp = make("external-product", P, "part=pullback");
    EpsilonCycle lhs = external_product({E, C}), rhs = smooth_pullback(E);
    rp.verdict = cycles_theta_eq(lhs, rhs);
    rp.left = std::to_string(lhs.coeff.size()) + " components";
    rp.right = std::to_string(rhs.coeff.size()) + " components";
    for (auto &[c, v] : lhs.coeff) rp.trace.push_back(component_str(c) + ": " + v.str() + " vs " + rhs.at(c).str());
    out.push_back(std::move(rp));

    CheckReport rc = make("external-product", P, "part=const-const");
    EpsilonCycle cc = external_product({C, C});
    const Component zz{CurveComponent::zero_section(), CurveComponent::zero_section()};
    rc.left = cc.at(zz).str() + " mult " + std::to_string(cc.cc.at(zz));
    rc.right = "cls(" + qstr(F->q()) + ") mult 1";
    rc.verdict = cc.coeff.size() == 1 && cc.cc.at(zz) == 1 && theta_eq(cc.at(zz), qcls(F->q(), Rat(1)));
    out.push_back(std::move(rc));

    CheckReport rt = make("external-product", P, "part=twist");
    const CycNum alpha = CycNum::parse(P.get("alpha", "2"));
    if (alpha.is_zero()) fail("bad-parameter", "alpha must be nonzero");
    SheafExpr St(F, S.kummer(), S.as(), S.twist() * alpha, S.text() + " * twist(" + alpha.str() + ")");
    EpsilonCycle Et = epsilon_cycle_curve(St), Ep = twist_by(E, alpha);
    rt.verdict = cycles_theta_eq(Et, Ep);
    rt.left = std::to_string(Et.coeff.size()) + " components";
    rt.right = std::to_string(Ep.coeff.size()) + " components";
    for (auto &[c, v] : Et.coeff) rt.trace.push_back(component_str(c) + ": " + v.str() + " vs " + Ep.at(c).str());
    out.push_back(std::move(rt));
    return out;
}

std::vector<CheckReport> check_snc(const CheckParams &P) {
    FqPtr F = P.field();
    std::vector<MultChar> chars;
    std::vector<EpsilonCycle> curves;
    std::stringstream ss(P.get("chars"));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int64_t k = 0;
        try {
            k = std::stoll(tok);
        } catch (const std::logic_error &) {
            fail("bad-parameter", "chars must be a comma-separated list of exponents");
        }
        chars.emplace_back(F, k);
        if (chars.back().is_trivial()) fail("bad-parameter", "chars must be nontrivial");
        curves.push_back(restrict_affine(epsilon_cycle_curve(parse_sheaf_spec(F, "kummer(chi[" + std::to_string(k) + "], x)"))));
    }
    EpsilonCycle lhs = tame_snc_epsilon(chars), rhs = external_product(curves);
    CheckReport r = make("snc", P, "");
    r.verdict = cycles_theta_eq(lhs, rhs);
    r.left = std::to_string(lhs.coeff.size()) + " components";
    r.right = std::to_string(rhs.coeff.size()) + " components";
    for (auto &[c, v] : lhs.coeff) r.trace.push_back(component_str(c) + ": " + v.str() + " vs " + rhs.at(c).str());
    return {r};
}

std::vector<CheckReport> check_product_formula(const CheckParams &P) {
    FqPtr F = P.field();
    SheafExpr S = parse_sheaf_spec(F, P.get("sheaf"));
    LocalForm omega = LocalForm::parse(F, P.get("form", "1"));
    if (!S.is_tame()) return {skipped("product-formula", P, "", "wild point: no independent local factor")};
    GlobalEpsilon G = global_epsilon(S);

    CheckReport rl = make("product-formula", P, "part=local");
    rl.trace.push_back("global epsilon = " + G.exact.str());
    rl.trace.push_back("q-power: cls(" + qstr(F->q()) + ")^1");
    ThetaClass prod = qcls(F->q(), Rat(1));
    for (auto &x : relevant_points(S, omega)) {
        LocalEpsilon le = local_epsilon(S, x, omega);
        prod *= le.eps;
        std::string line = x.str() + ": m=" + std::to_string(le.m) + " q_x=" + qstr(le.qx);
        if (le.ramified) line += " tame, theta=" + le.theta->str() + ", tau(theta-bar) q_x^m A^(m+1)";
        else line += " unramified, (A q_x)^m";
        rl.trace.push_back(line + " -> " + le.eps.str());
    }
    rl.left = G.cls.str();
    rl.right = prod.str();
    rl.verdict = theta_eq(G.cls, prod);

    CheckReport rc = make("product-formula", P, "part=cycle");
    EpsilonCycle E = epsilon_cycle_curve(S);
    ThetaClass iz = intersect_zero_section(E);
    rc.left = G.det_rgamma.str();
    rc.right = iz.str();
    rc.verdict = theta_eq(G.det_rgamma, iz);
    for (auto &[c, v] : E.coeff) rc.trace.push_back("E " + component_str(c) + " = " + v.str());
    return {rl, rc};
}

namespace {

// Sample classes for the group-law suite, grouped by residue characteristic.
struct ThetaPool {
    uint32_t p;
    std::vector<CycNum> bases;
};

std::vector<ThetaPool> theta_pools() {
    std::vector<ThetaPool> pools;
    const std::vector<std::pair<uint32_t, uint32_t>> fields{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        ThetaPool pool{p, {}};
        for (auto [pp, f] : fields) {
            if (pp != p) continue;
            FqPtr F = Fq::make(pp, f);
            for (uint64_t k = 1; k + 1 < F->q(); ++k) pool.bases.push_back(gauss_sum(MultChar(F, static_cast<int64_t>(k)), AddChar::canonical(F)));
            if (F->q() > 3) pool.bases.push_back(classical_jacobi_sum(MultChar(F, 1), MultChar(F, 1)));
        }
        for (long r : {2L, 3L, 5L, 6L, 7L}) pool.bases.push_back(CycNum(Rat(r)));
        pool.bases.push_back(CycNum(Rat(1, 3)));
        pool.bases.push_back(CycNum(1) + CycNum::zeta(5));   // a unit of infinite order
        pool.bases.push_back(CycNum::zeta(15, 4) * CycNum(Rat(2)));
        pools.push_back(std::move(pool));
    }
    return pools;
}

ThetaClass random_class(const ThetaPool &pool, std::mt19937_64 &rng) {
    std::uniform_int_distribution<size_t> pick(0, pool.bases.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3), num(-3, 3), den(1, 3);
    ThetaClass c;
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) c *= ThetaClass::of(pool.bases[pick(rng)]).pow(rat(num(rng), den(rng)));
    return c;
}

} // namespace

std::vector<CheckReport> check_theta_laws(const CheckParams &P) {
    const int64_t seed = P.get_int("seed", 20240611), cases = P.get_int("cases", 1000);
    if (cases < 0 || cases > 1000000) fail("bad-parameter", "cases out of range");
    std::mt19937_64 rng(static_cast<uint64_t>(seed));
    const auto pools = theta_pools();
    std::uniform_int_distribution<size_t> pick_pool(0, pools.size() - 1);
    std::uniform_int_distribution<int> small(2, 5), unity(1, 60);
    int64_t pass_eq = 0, pass_div = 0, pass_val = 0, pass_grp = 0;
    std::vector<std::string> fails;
    for (int64_t i = 0; i < cases; ++i) {
        const ThetaPool &pool = pools[pick_pool(rng)];
        ThetaClass a = random_class(pool, rng), b = random_class(pool, rng), c = random_class(pool, rng);
        // roots of unity die: a, a*cls(zeta beta)/cls(beta) and a further such twist are pairwise equal
        auto mu_twist = [&](const ThetaClass &x) {
            static const uint32_t orders[] = {3, 5, 6, 7, 10, 14, 15, 21};
            const CycNum &beta = pool.bases[std::uniform_int_distribution<size_t>(0, pool.bases.size() - 1)(rng)];
            const CycNum z = CycNum::zeta(orders[std::uniform_int_distribution<int>(0, 7)(rng)], unity(rng));
            const Rat e = rat(small(rng), small(rng));
            return x * ThetaClass::of(z * beta).pow(e) / ThetaClass::of(beta).pow(e);
        };
        ThetaClass a1 = mu_twist(a), a2 = mu_twist(a1);
        bool eq = theta_eq(a, a) && theta_eq(a, a1) == theta_eq(a1, a) && theta_eq(a, a1) && theta_eq(a1, a2) && theta_eq(a, a2) &&
                  !theta_eq(a, a * qcls(2, Rat(1)));
        const int n = small(rng);
        bool div = theta_eq(a.pow(Rat(n)).pow(rat(1, n)), a) && theta_eq(a.pow(rat(1, n)).pow(Rat(n)), a);
        const Rat r = rat(small(rng) - 3, small(rng));
        const Rat va = theta_p_valuation(a, pool.p), vb = theta_p_valuation(b, pool.p);
        bool val = theta_p_valuation(a * b, pool.p) == va + vb && theta_p_valuation(a.pow(r), pool.p) == r * va &&
                   theta_p_valuation(a2, pool.p) == va;
        bool grp = theta_eq(a * b, b * a) && theta_eq((a * b) * c, a * (b * c)) && theta_is_trivial(a * a.inverse());
        pass_eq += eq;
        pass_div += div;
        pass_val += val;
        pass_grp += grp;
        if (!(eq && div && val && grp) && fails.size() < 10) fails.push_back("case " + std::to_string(i) + ": " + a.str());
    }
    std::vector<CheckReport> out;
    const std::pair<const char *, int64_t> laws[] = {
        {"equivalence", pass_eq}, {"divisibility", pass_div}, {"valuation", pass_val}, {"group", pass_grp}};
    for (auto &[name, passed] : laws) {
        CheckReport r = make("theta-laws", P, std::string("law=") + name);
        r.left = std::to_string(passed) + "/" + std::to_string(cases);
        r.right = std::to_string(cases) + "/" + std::to_string(cases);
        r.verdict = passed == cases;
        r.trace.push_back("seed " + std::to_string(seed));
        for (auto &f : fails) r.trace.push_back(f);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckReport> run_check(const std::string &name, const CheckParams &params) {
    using Fn = std::vector<CheckReport> (*)(const CheckParams &);
    static const std::map<std::string, Fn> table{
        {"gauss-norm", check_gauss_norm},     {"hasse-davenport", check_hasse_davenport},
        {"stickelberger", check_stickelberger}, {"jacobi-independence", check_jacobi_independence},
        {"gos", check_gos},                   {"milnor", check_milnor},
        {"convolution", check_convolution},   {"external-product", check_external_product},
        {"snc", check_snc},                   {"product-formula", check_product_formula},
        {"theta-laws", check_theta_laws}};
    auto it = table.find(name);
    if (it == table.end()) fail("unknown-check", "no check named '" + name + "'");
    try {
        return it->second(params);
    } catch (const Error &e) {
        if (is_skip_code(e.code())) return {skipped(name, params, "", e.what())};
        throw;
    }
}

} // namespace eps
