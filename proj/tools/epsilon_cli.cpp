#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epsilon/charsums.hpp"
#include "epsilon/checks.hpp"
#include "epsilon/cycles.hpp"
#include "epsilon/error.hpp"
#include "epsilon/harness.hpp"
#include "epsilon/lfunction.hpp"
#include "epsilon/local_epsilon.hpp"
#include "epsilon/padic.hpp"

using namespace eps;
using json = nlohmann::ordered_json;

namespace {

// Options shared by every subcommand that takes field/sheaf/check parameters.
struct Opts {
    std::map<std::string, std::string> named;
    std::vector<std::string> sets;

    void add(CLI::App *app, const std::vector<std::string> &keys) {
        for (auto &k : keys) app->add_option("--" + k, named[k], "parameter " + k);
        app->add_option("--set", sets, "extra check parameter key=value (repeatable)");
    }
    CheckParams params() const {
        CheckParams P;
        for (auto &[k, v] : named)
            if (!v.empty()) P.values[k] = v;
        for (auto &s : sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0) fail("bad-argument", "--set expects key=value, got '" + s + "'");
            P.values[s.substr(0, eq)] = s.substr(eq + 1);
        }
        return P;
    }
};

const std::vector<std::string> kFieldKeys{"p", "f", "q"};
const std::vector<std::string> kCheckKeys{"p", "f", "q", "sheaf", "form", "n", "n1", "n2", "alpha", "chars", "seed", "cases"};

void print(const json &j) { std::cout << j.dump() << "\n"; }

std::vector<int64_t> parse_list(const std::string &s) {
    std::vector<int64_t> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (cur.empty()) fail("bad-argument", "empty entry in list '" + s + "'");
            try {
                out.push_back(std::stoll(cur));
            } catch (const std::logic_error &) {
                fail("bad-argument", "'" + cur + "' is not an integer");
            }
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    return out;
}

int emit_reports(const std::vector<CheckReport> &reps) {
    int code = 0;
    for (auto &r : reps) {
        std::cout << report_json(r) << "\n";
        if (!r.skipped && !r.verdict) code = 1;
    }
    return code;
}

json cycle_json(const EpsilonCycle &E) {
    json comps = json::array();
    for (auto &[c, m] : E.cc.mult) {
        json e;
        e["component"] = component_str(c);
        e["multiplicity"] = m;
        e["coefficient"] = E.at(c).str();
        if (E.derived.count(c)) e["derived"] = true;
        comps.push_back(e);
    }
    return comps;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact epsilon factors and epsilon cycles of rank-one sheaves on P^1 over finite fields"};
    app.require_subcommand(1);

    Opts o_gauss, o_jac, o_stick, o_lf, o_ge, o_le, o_ec, o_cc, o_mil, o_pf, o_ep, o_snc, o_exp;
    int64_t k = 1, shift = 1;
    std::string chars, degrees, point, check_name, catalog;
    bool wild_div = false, timing = false;
    unsigned jobs = 1;

    auto *gs = app.add_subcommand("gauss-sum", "tau(chi^k, psi_c) over F_q");
    o_gauss.add(gs, kFieldKeys);
    gs->add_option("--k", k, "exponent of chi");
    gs->add_option("--psi", shift, "additive character shift c");

    auto *js = app.add_subcommand("jacobi-sum", "Gauss-sum product of a Jacobi datum");
    o_jac.add(js, kFieldKeys);
    js->add_option("--chars", chars, "character exponents k_i")->required();
    js->add_option("--degrees", degrees, "extension degrees [k_i : F_q] (default all 1)");
    js->add_option("--psi", shift, "shift of psi_0");

    auto *st = app.add_subcommand("stickelberger", "valuation of tau(chi^k) by digit sums and p-adically");
    o_stick.add(st, kFieldKeys);
    st->add_option("--k", k, "exponent of chi");

    auto *lf = app.add_subcommand("l-function", "L-polynomial of a sheaf by point counting");
    o_lf.add(lf, {"p", "f", "q", "sheaf"});
    auto *ge = app.add_subcommand("global-epsilon", "global epsilon factor and det R Gamma");
    o_ge.add(ge, {"p", "f", "q", "sheaf"});
    auto *le = app.add_subcommand("local-epsilon", "local epsilon factor at a closed point");
    o_le.add(le, {"p", "f", "q", "sheaf", "form"});
    le->add_option("--point", point, "inf, a field element, or a monic irreducible polynomial")->required();
    auto *ec = app.add_subcommand("epsilon-cycle", "epsilon cycle of a sheaf on P^1");
    o_ec.add(ec, {"p", "f", "q", "sheaf"});
    ec->add_flag("--wild-by-division", wild_div, "fill the wild fiber from the global class");
    auto *cc = app.add_subcommand("char-cycle", "characteristic cycle of a sheaf on P^1");
    o_cc.add(cc, {"p", "f", "q", "sheaf"});

    auto *mc = app.add_subcommand("milnor-check", "epsilon and CC intersected with df for f = x^n");
    o_mil.add(mc, kCheckKeys);
    auto *pc = app.add_subcommand("product-formula-check", "global class against local classes and the cycle");
    o_pf.add(pc, kCheckKeys);
    auto *xc = app.add_subcommand("external-product-check", "external products, pullback and twist");
    o_ep.add(xc, kCheckKeys);
    auto *sc = app.add_subcommand("snc-check", "tame SNC cycle against external products");
    o_snc.add(sc, kCheckKeys);

    auto *rc = app.add_subcommand("run-catalog", "run a TOML catalog, JSON lines on stdout");
    rc->add_option("catalog", catalog, "catalog path or built-in name (tame-p5)")->required();
    rc->add_option("--jobs", jobs, "parallel entries (EPSILON_JOBS overrides)");
    rc->add_flag("--timing", timing, "add wall-clock seconds to each line");

    auto *ex = app.add_subcommand("explain", "print the derivation behind a check");
    ex->add_option("check", check_name, "check name")->required();
    o_exp.add(ex, kCheckKeys);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc_ = app.exit(e);
        return rc_ == 0 ? 0 : 2;
    }

    try {
        if (*gs) {
            FqPtr F = o_gauss.params().field();
            MultChar chi(F, k);
            AddChar psi(F, F->from_int(shift));
            json j;
            j["q"] = F->q();
            j["chi"] = chi.str();
            j["psi"] = shift;
            j["tau"] = gauss_sum(chi, psi).str();
            print(j);
        } else if (*js) {
            FqPtr F = o_jac.params().field();
            auto ks = parse_list(chars);
            std::vector<int64_t> ds(ks.size(), 1);
            if (!degrees.empty()) ds = parse_list(degrees);
            if (ds.size() != ks.size()) fail("bad-argument", "--degrees must match --chars in length");
            JacobiDatum D{F, {}};
            for (size_t i = 0; i < ks.size(); ++i) {
                if (ds[i] < 1 || ds[i] > 32) fail("bad-argument", "degrees must be in 1..32");
                D.chars.emplace_back(Fq::make(F->p(), F->f() * static_cast<uint32_t>(ds[i])), ks[i]);
            }
            json j;
            j["q"] = F->q();
            j["valid"] = D.is_valid();
            j["jacobi_sum"] = jacobi_sum(D, AddChar(F, F->from_int(shift))).str();
            print(j);
        } else if (*st) {
            FqPtr F = o_stick.params().field();
            MultChar chi(F, k);
            json j;
            j["q"] = F->q();
            j["chi"] = chi.str();
            j["stickelberger"] = stickelberger_valuation(chi).get_str();
            j["padic"] = gauss_sum_valuation(chi, AddChar::canonical(F)).get_str();
            print(j);
        } else if (*lf) {
            CheckParams P = o_lf.params();
            FqPtr F = P.field();
            SheafExpr S = parse_sheaf_spec(F, P.get("sheaf"));
            LPolynomial L = l_polynomial(S);
            json j;
            j["sheaf"] = S.text();
            j["degree"] = L.degree();
            j["euler_char"] = euler_char(S);
            j["coefficients"] = json::array();
            for (auto &c : L.coeffs) j["coefficients"].push_back(c.str());
            j["traces"] = json::array();
            for (auto &s : L.S) j["traces"].push_back(s.str());
            print(j);
        } else if (*ge) {
            CheckParams P = o_ge.params();
            FqPtr F = P.field();
            GlobalEpsilon G = global_epsilon(parse_sheaf_spec(F, P.get("sheaf")));
            json j;
            j["exact"] = G.exact.str();
            j["class"] = G.cls.str();
            j["det_rgamma"] = G.det_rgamma.str();
            print(j);
        } else if (*le) {
            CheckParams P = o_le.params();
            FqPtr F = P.field();
            SheafExpr S = parse_sheaf_spec(F, P.get("sheaf"));
            LocalEpsilon L = local_epsilon(S, parse_point(F, point), LocalForm::parse(F, P.get("form", "1")));
            json j;
            j["point"] = L.x.str();
            j["m"] = L.m;
            j["q_x"] = L.qx;
            j["ramified"] = L.ramified;
            if (L.theta) j["theta"] = L.theta->str();
            j["exact0"] = L.exact0.str();
            j["eps0"] = L.eps0.str();
            j["eps"] = L.eps.str();
            print(j);
        } else if (*ec) {
            CheckParams P = o_ec.params();
            FqPtr F = P.field();
            EpsilonCycle E = epsilon_cycle_curve(parse_sheaf_spec(F, P.get("sheaf")), wild_div);
            json j;
            j["q"] = E.q;
            j["components"] = cycle_json(E);
            print(j);
        } else if (*cc) {
            CheckParams P = o_cc.params();
            FqPtr F = P.field();
            CharCycle C = char_cycle_curve(parse_sheaf_spec(F, P.get("sheaf")));
            json j;
            j["components"] = json::array();
            for (auto &[c, m] : C.mult) j["components"].push_back({{"component", component_str(c)}, {"multiplicity", m}});
            print(j);
        } else if (*mc) {
            return emit_reports(run_check("milnor", o_mil.params()));
        } else if (*pc) {
            return emit_reports(run_check("product-formula", o_pf.params()));
        } else if (*xc) {
            return emit_reports(run_check("external-product", o_ep.params()));
        } else if (*sc) {
            return emit_reports(run_check("snc", o_snc.params()));
        } else if (*rc) {
            std::vector<CatalogEntry> entries;
            std::ifstream probe(catalog);
            if (!probe && is_builtin_catalog(catalog)) entries = parse_catalog(builtin_catalog_text(catalog), catalog);
            else entries = load_catalog(catalog);
            RunOptions opt;
            opt.jobs = resolve_jobs(jobs);
            opt.timing = timing;
            auto results = run_catalog(entries, opt);
            for (auto &r : results)
                for (auto &rep : r.reports) std::cout << report_json(rep, timing ? &r.seconds : nullptr) << "\n";
            return exit_code(results);
        } else if (*ex) {
            for (auto &line : explain(check_name, o_exp.params())) std::cout << line << "\n";
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_config_error(e.code()) ? 2 : 1;
    }
    return 0;
}
