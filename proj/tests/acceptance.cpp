// One PASS/FAIL line per acceptance criterion; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "epsilon/charsums.hpp"
#include "epsilon/checks.hpp"
#include "epsilon/cycles.hpp"
#include "epsilon/error.hpp"
#include "epsilon/lfunction.hpp"
#include "epsilon/local_epsilon.hpp"
#include "epsilon/padic.hpp"

using namespace eps;

namespace {

struct Tally {
    int64_t ok = 0, total = 0;
    std::vector<std::string> bad;
    void add(bool pass, const std::string &what) {
        ++total;
        ok += pass;
        if (!pass && bad.size() < 5) bad.push_back(what);
    }
    bool pass() const { return total > 0 && ok == total; }
};

int failures = 0;

void line(const std::string &id, const std::string &desc, const std::function<Tally()> &body) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::string err;
    try {
        t = body();
    } catch (const std::exception &e) {
        err = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = err.empty() && t.pass();
    failures += !pass;
    std::printf("%s %-3s %s: %lld/%lld (%.1fs)\n", pass ? "PASS" : "FAIL", id.c_str(), desc.c_str(),
                static_cast<long long>(t.ok), static_cast<long long>(t.total), s);
    if (!err.empty()) std::printf("     error: %s\n", err.c_str());
    for (auto &b : t.bad) std::printf("     failed: %s\n", b.c_str());
    std::fflush(stdout);
}

CheckParams params(std::initializer_list<std::pair<const std::string, std::string>> kv) {
    CheckParams P;
    P.values = kv;
    return P;
}

void absorb(Tally &t, const std::vector<CheckReport> &reps) {
    for (auto &r : reps) t.add(!r.skipped && r.verdict, r.check + " " + r.input + (r.skipped ? " skipped: " + r.reason : " " + r.left + " vs " + r.right));
}

CycNum qnum(uint64_t q) { return CycNum(Rat(Int(static_cast<unsigned long>(q)))); }

const std::vector<std::pair<uint32_t, uint32_t>> kNormFields{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};

// Catalog for the index formula: Kummer sheaves with 2..5 bad points and
// Artin-Schreier sheaves with a single wild point.
std::vector<std::pair<FqPtr, std::string>> index_catalog() {
    std::vector<std::pair<FqPtr, std::string>> out;
    for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto F = Fq::make(p, f);
        for (const char *s : {"kummer(chi[1], x*(x-1))", "kummer(chi[1], x*(x-1)*(x+1))", "kummer(chi[1], x^2*(x^2+x+2)*(x-1))",
                              "as(1, x^2)", "as(1, 1/x) * twist(2)"})
            out.emplace_back(F, s);
    }
    return out;
}

// Tame Kummer sheaves for the product formula; three have non-rational bad points.
std::vector<std::pair<FqPtr, std::string>> product_catalog() {
    std::vector<std::pair<FqPtr, std::string>> out;
    auto F5 = Fq::make(5, 1), F7 = Fq::make(7, 1), F11 = Fq::make(11, 1), F13 = Fq::make(13, 1), F9 = Fq::make(3, 2);
    for (const char *s : {"kummer(chi[1], x*(x-1))", "kummer(chi[2], x^2+2)", "kummer(chi[1], x*(x^2+2))",
                          "kummer(chi[3], (x-1)*(x-2)*(x-3)) * twist([4] 1+z)", "kummer(chi[2], x*(x-1)*(x-2)*(x-3))"})
        out.emplace_back(F5, s);
    for (const char *s : {"kummer(chi[1], x*(x-1))", "kummer(chi[3], x*(x^2+1)*(x-3))", "kummer(chi[2], x^3+3)",
                          "kummer(chi[1], x^2*(x-4)) * twist(3)", "kummer(chi[5], (x-1)*(x+1))"})
        out.emplace_back(F7, s);
    for (const char *s : {"kummer(chi[1], x*(x-1))", "kummer(chi[5], x*(x-2)*(x-7))", "kummer(chi[2], x^2+1)",
                          "kummer(chi[3], x*(x-1)) * twist([5] z)"})
        out.emplace_back(F11, s);
    for (const char *s : {"kummer(chi[1], x*(x-1)*(x-5))", "kummer(chi[4], x*(x-1))", "kummer(chi[6], x^2+2)"})
        out.emplace_back(F13, s);
    for (const char *s : {"kummer(chi[1], x*(x-1))", "kummer(chi[2], x^3+x+1)", "kummer(chi[4], x*(x+1))"})
        out.emplace_back(F9, s);
    return out;
}

bool has_nonrational_bad_point(const SheafExpr &S) {
    for (auto &b : S.bad_points())
        if (b.x.degree() > 1) return true;
    return false;
}

// d(pi) for pi = t, t + t^2, 2t + t^3 where t is the standard parameter at x.
std::vector<LocalForm> parameter_forms(const FqPtr &F, const ClosedPoint &x) {
    const RatFunc one = RatFunc::constant(F, 1), two = RatFunc::constant(F, F->from_int(2)), three = RatFunc::constant(F, F->from_int(3));
    RatFunc t = x.at_infinity ? one / RatFunc::x(F) : RatFunc(x.P);
    std::vector<RatFunc> pis{t, t + t * t, two * t + t.pow(3)};
    std::vector<LocalForm> out;
    for (auto &pi : pis) out.push_back(LocalForm{pi.derivative()});
    return out;
}

} // namespace

int main() {
    // literal: conj is complex conjugation of the value
    line("1", "Gauss-sum norm tau(chi) conj(tau(chi)) = chi(-1) q", [] {
        Tally t;
        for (auto [p, f] : kNormFields) {
            auto F = Fq::make(p, f);
            for (uint64_t k = 1; k + 1 < F->q(); ++k) {
                MultChar chi(F, static_cast<int64_t>(k));
                CycNum tau = gauss_sum(chi, AddChar::canonical(F));
                const CycNum lhs = tau * tau.conj(), rhs = char_eval(chi, F->neg(1)) * qnum(F->q());
                t.add(lhs == rhs, "q=" + std::to_string(F->q()) + " k=" + std::to_string(k) + ": " + lhs.str() + " vs " + rhs.str());
            }
        }
        return t;
    });
    line("1p", "pair form tau(chi) tau(chi-bar) = chi(-1) q and tau conj(tau) = q", [] {
        Tally t;
        for (auto [p, f] : kNormFields) {
            auto F = Fq::make(p, f);
            AddChar psi = AddChar::canonical(F);
            for (uint64_t k = 1; k + 1 < F->q(); ++k) {
                MultChar chi(F, static_cast<int64_t>(k));
                CycNum tau = gauss_sum(chi, psi);
                const bool pair = tau * gauss_sum(chi.inverse(), psi) == char_eval(chi, F->neg(1)) * qnum(F->q());
                const bool abs2 = tau * tau.conj() == qnum(F->q());
                t.add(pair && abs2, "q=" + std::to_string(F->q()) + " k=" + std::to_string(k));
            }
        }
        return t;
    });

    line("2", "Jacobi datum psi-independence, q <= 13", [] {
        Tally t;
        for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}})
            absorb(t, run_check("jacobi-independence", params({{"p", std::to_string(p)}, {"f", std::to_string(f)}})));
        return t;
    });

    line("3", "Stickelberger against the p-adic Gauss sum", [] {
        Tally t;
        for (auto [p, f] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {11, 1}, {3, 2}, {5, 2}}) {
            auto F = Fq::make(p, f);
            for (uint64_t k = 0; k + 1 < F->q(); ++k) {
                MultChar chi(F, static_cast<int64_t>(k));
                const Rat a = stickelberger_valuation(chi), b = gauss_sum_valuation(chi, AddChar::canonical(F));
                t.add(a == b, chi.str() + ": " + a.get_str() + " vs " + b.get_str());
            }
        }
        return t;
    });

    line("4", "Hasse-Davenport, q in {3,5,7}, n in {2,3}", [] {
        Tally t;
        for (uint32_t p : {3u, 5u, 7u})
            for (uint32_t n : {2u, 3u}) {
                auto F = Fq::make(p, 1);
                for (uint64_t k = 0; k + 1 < F->q(); ++k) {
                    auto [a, b] = hasse_davenport(MultChar(F, static_cast<int64_t>(k)), AddChar::canonical(F), n);
                    t.add(a == b, "q=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        return t;
    });

    line("5", "index formula deg L = -chi, (CC, zero section) = chi, 30 sheaves", [] {
        Tally t;
        int kummer = 0, as = 0;
        for (auto &[F, spec] : index_catalog()) {
            SheafExpr S = parse_sheaf_spec(F, spec);
            const size_t nb = S.bad_points().size();
            int wild = 0;
            for (auto &b : S.bad_points()) wild += b.swan > 0;
            const bool shape = S.has_as() ? (wild == 1) : (nb >= 2 && nb <= 5 && wild == 0);
            (S.has_as() ? as : kummer) += shape;
            const int64_t chi = euler_char(S);
            const int deg = l_polynomial(S).degree();
            const int64_t cc = intersect_zero_section(char_cycle_curve(S));
            t.add(shape && deg == -chi && cc == chi,
                  "q=" + std::to_string(F->q()) + " " + spec + ": deg " + std::to_string(deg) + " chi " + std::to_string(chi) + " cc " + std::to_string(cc));
        }
        t.add(kummer + as >= 25, "catalog too small");
        return t;
    });

    line("6", "product formula, local and cycle sides, 20 tame Kummer sheaves", [] {
        Tally t;
        int nonrational = 0;
        for (auto &[F, spec] : product_catalog()) {
            SheafExpr S = parse_sheaf_spec(F, spec);
            nonrational += has_nonrational_bad_point(S);
            t.add(S.is_tame() && !S.bad_points().empty(), spec + " is not a tame nonconstant sheaf");
            for (const char *form : {"1", "x^2/(x-1)"})
                absorb(t, run_check("product-formula", params({{"p", std::to_string(F->p())}, {"f", std::to_string(F->f())}, {"sheaf", spec}, {"form", form}})));
        }
        t.add(product_catalog().size() >= 20, "fewer than 20 sheaves");
        t.add(nonrational >= 3, "fewer than 3 sheaves with non-rational bad points");
        return t;
    });
    line("6t", "point counting through n = 8 over F_13 under one minute", [] {
        Tally t;
        auto F = Fq::make(13, 1);
        SheafExpr S = parse_sheaf_spec(F, "kummer(chi[1], x*(x-1)*(x-2)*(x-3)*(x-4)*(x-5)*(x-6)*(x-7))");
        const auto t0 = std::chrono::steady_clock::now();
        LPolynomial L = l_polynomial(S);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        t.add(L.S.size() == 8, "expected traces S_1..S_8");
        t.add(s < 60.0, "took " + std::to_string(s) + "s");
        return t;
    });

    auto jacobi_cross = [](bool conjugate) {
        Tally t;
        for (uint32_t p : {5u, 7u}) {
            auto F = Fq::make(p, 1);
            AddChar psi = AddChar::canonical(F);
            for (int64_t a = 1; a + 1 < p; ++a)
                for (int64_t b = 1; b + 1 < p; ++b) {
                    MultChar chi(F, a), rho(F, b);
                    if ((chi * rho).is_trivial()) continue;
                    SheafExpr S = parse_sheaf_spec(F, "kummer(chi[" + std::to_string(a) + "], x) * kummer(chi[" + std::to_string(b) + "], 1-x)");
                    if (conjugate) {
                        chi = chi.inverse();
                        rho = rho.inverse();
                    }
                    ThetaClass want = ThetaClass::of(gauss_sum(chi, psi) * gauss_sum(rho, psi) / gauss_sum(chi * rho, psi));
                    const ThetaClass got = global_epsilon(S).cls;
                    t.add(theta_eq(got, want), "q=" + std::to_string(p) + " " + S.text() + ": " + got.str() + " vs " + want.str());
                }
        }
        return t;
    };
    line("7", "global epsilon of Kummer(chi,x) Kummer(rho,1-x) = cls(tau(chi)tau(rho)/tau(chi rho))", [&] { return jacobi_cross(false); });
    line("7c", "same with conjugate characters: cls(tau(chi-bar)tau(rho-bar)/tau(chi-bar rho-bar)) = cls(J(chi,rho))", [&] { return jacobi_cross(true); });

    line("8", "Milnor formula for x^n, n = 2..8, q in {5,7,11,13}", [] {
        Tally t;
        for (uint32_t p : {5u, 7u, 11u, 13u})
            for (uint32_t n = 2; n <= 8; ++n) {
                if (n % p == 0) continue;
                absorb(t, run_check("milnor", params({{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"sheaf", "const"}})));
            }
        return t;
    });

    line("9", "convolution identity and tame SNC versus external products", [] {
        Tally t;
        for (uint32_t p : {5u, 7u})
            for (uint32_t n1 : {2u, 3u, 4u})
                for (uint32_t n2 : {2u, 3u, 4u}) {
                    if ((n1 * n2) % p == 0) continue;
                    absorb(t, run_check("convolution", params({{"p", std::to_string(p)}, {"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}})));
                }
        int pairs = 0;
        for (uint32_t p : {5u, 7u})
            for (int64_t a = 1; a + 1 < p; a += (p == 7 ? 2 : 1))
                for (int64_t b = 1; b + 1 < p; b += 2) {
                    absorb(t, run_check("snc", params({{"p", std::to_string(p)}, {"chars", std::to_string(a) + "," + std::to_string(b)}})));
                    ++pairs;
                }
        t.add(pairs >= 10, "fewer than 10 character pairs");
        return t;
    });

    line("10", "theta group laws, 1000 cases, seed 20240611", [] {
        Tally t;
        absorb(t, run_check("theta-laws", params({{"cases", "1000"}, {"seed", "20240611"}})));
        return t;
    });

    line("11", "independence of the local parameter, 3 parameters per point", [] {
        Tally t;
        for (auto &[F, spec] : product_catalog()) {
            SheafExpr S = parse_sheaf_spec(F, spec);
            std::vector<ClosedPoint> pts;
            for (auto &b : S.bad_points()) pts.push_back(b.x);
            pts.push_back(ClosedPoint::rational(F, F->from_int(F->p() - 1)));
            for (auto &x : pts) {
                auto forms = parameter_forms(F, x);
                const ThetaClass first = local_epsilon_class(S, x, forms[0]);
                for (auto &w : forms) {
                    const bool uniformizer = w.ord(x) == 0;
                    t.add(uniformizer && theta_eq(local_epsilon_class(S, x, w), first), spec + " at " + x.str());
                }
            }
        }
        return t;
    });

    std::printf("%s\n", failures == 0 ? "all acceptance criteria pass" : (std::to_string(failures) + " criteria failed").c_str());
    return failures == 0 ? 0 : 1;
}
