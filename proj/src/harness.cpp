#include "epsilon/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>
#include <toml.hpp>

#include "epsilon/error.hpp"

namespace eps {

namespace {

std::string toml_scalar(const toml::node &n, const std::string &key) {
    if (auto v = n.as_string()) return v->get();
    if (auto v = n.as_integer()) return std::to_string(v->get());
    if (auto v = n.as_boolean()) return v->get() ? "true" : "false";
    if (auto a = n.as_array()) {
        std::string s;
        for (auto &e : *a) s += (s.empty() ? "" : ",") + toml_scalar(e, key);
        return s;
    }
    fail("bad-parameter", "value of '" + key + "' must be a string, integer, boolean or array of those");
}

void copy_key(const toml::table &t, const char *from, const char *to, CheckParams &P) {
    if (auto n = t.get(from)) P.values[to] = toml_scalar(*n, from);
}

const std::map<std::string, std::string> &builtins() {
    static const std::map<std::string, std::string> b{
        {"tame-p5", R"cat([field]
p = 5
f = 1

[sheaf]
expr = "kummer(chi[1], x*(x-1))"

[form]
g = "1"

[[check]]
name = "gauss-norm"

[[check]]
name = "hasse-davenport"
n = 2

[[check]]
name = "hasse-davenport"
n = 3

[[check]]
name = "stickelberger"

[[check]]
name = "jacobi-independence"

[[check]]
name = "gos"

[[check]]
name = "gos"
sheaf = "kummer(chi[2], x*(x^2+2))"

[[check]]
name = "gos"
sheaf = "as(1, x^2 + x)"

[[check]]
name = "milnor"
n = 2
sheaf = "const"

[[check]]
name = "milnor"
n = 3
sheaf = "const"

[[check]]
name = "milnor"
n = 4
sheaf = "kummer(chi[1], x)"

[[check]]
name = "convolution"
n1 = 2
n2 = 3

[[check]]
name = "convolution"
n1 = 4
n2 = 4

[[check]]
name = "external-product"
sheaf = "kummer(chi[2], x*(x-1))"

[[check]]
name = "snc"
chars = "1,2,3"

[[check]]
name = "product-formula"

[[check]]
name = "product-formula"
form = "x^2/(x-1)"

[[check]]
name = "product-formula"
sheaf = "kummer(chi[1], x^2+2) * twist([4] 1+z)"
form = "x+3"

[[check]]
name = "product-formula"
sheaf = "kummer(chi[3], x*(x^3+x+1))"

[[check]]
name = "theta-laws"
cases = 200
)cat"}};
    return b;
}

} // namespace

std::vector<CatalogEntry> parse_catalog(const std::string &text, const std::string &source) {
    toml::table root;
    try {
        root = toml::parse(text, source);
    } catch (const toml::parse_error &e) {
        std::ostringstream os;
        os << source << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
        fail("syntax-error", os.str());
    }
    CheckParams base;
    if (auto f = root["field"].as_table()) {
        copy_key(*f, "p", "p", base);
        copy_key(*f, "f", "f", base);
        copy_key(*f, "q", "q", base);
    }
    if (auto s = root["sheaf"].as_table()) copy_key(*s, "expr", "sheaf", base);
    if (auto g = root["form"].as_table()) copy_key(*g, "g", "form", base);

    std::vector<const toml::table *> blocks;
    if (auto n = root.get("check")) {
        if (auto t = n->as_table()) blocks.push_back(t);
        else if (auto a = n->as_array()) {
            for (auto &e : *a) {
                if (!e.as_table()) fail("syntax-error", source + ": every [[check]] entry must be a table");
                blocks.push_back(e.as_table());
            }
        } else {
            fail("syntax-error", source + ": 'check' must be a table or an array of tables");
        }
    }
    std::vector<CatalogEntry> out;
    for (auto *t : blocks) {
        CatalogEntry e;
        e.params = base;
        auto name = (*t)["name"].value<std::string>();
        if (!name) fail("missing-parameter", source + ": a [[check]] entry has no name");
        if (!is_check_name(*name)) fail("unknown-check", "no check named '" + *name + "'");
        e.check = *name;
        for (auto &[k, v] : *t) {
            const std::string key(k.str());
            if (key == "name") continue;
            e.params.values[key] = toml_scalar(v, key);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail("bad-argument", "cannot read catalog '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str(), path);
}

bool is_builtin_catalog(const std::string &name) { return builtins().count(name) != 0; }

const std::string &builtin_catalog_text(const std::string &name) {
    auto it = builtins().find(name);
    if (it == builtins().end()) fail("bad-argument", "no built-in catalog '" + name + "'");
    return it->second;
}

bool is_config_error(const std::string &code) {
    static const std::set<std::string> codes{"syntax-error", "missing-parameter", "bad-parameter", "unknown-check",
                                             "not-prime",    "bad-point",         "zero-function", "bad-argument",
                                             "bad-degree",   "bad-element"};
    return codes.count(code) != 0;
}

unsigned resolve_jobs(unsigned requested) {
    if (const char *env = std::getenv("EPSILON_JOBS"); env && *env) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 1024) fail("bad-parameter", std::string("EPSILON_JOBS must be in 1..1024, got '") + env + "'");
        return static_cast<unsigned>(v);
    }
    return requested == 0 ? 1 : requested;
}

std::vector<EntryResult> run_catalog(const std::vector<CatalogEntry> &entries, const RunOptions &opt) {
    std::vector<EntryResult> results(entries.size());
    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < entries.size();) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                results[i].reports = run_check(entries[i].check, entries[i].params);
            } catch (const Error &e) {
                if (is_config_error(e.code())) {
                    errors[i] = std::current_exception();
                } else {
                    CheckReport r;
                    r.check = entries[i].check;
                    r.input = entries[i].params.echo();
                    r.reason = e.what();
                    results[i].reports = {r};
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
            results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(entries.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::string report_json(const CheckReport &r, const double *seconds) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["check"] = r.check;
    j["input"] = r.input;
    j["left"] = r.left;
    j["right"] = r.right;
    j["verdict"] = r.verdict;
    j["status"] = r.skipped ? "skipped" : (r.verdict ? "pass" : "fail");
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (seconds) j["seconds"] = *seconds;
    return j.dump();
}

int exit_code(const std::vector<EntryResult> &results) {
    for (auto &e : results)
        for (auto &r : e.reports)
            if (!r.skipped && !r.verdict) return 1;
    return 0;
}

std::vector<std::string> explain(const std::string &check, const CheckParams &params) {
    if (!is_check_name(check)) fail("unknown-check", "no check named '" + check + "'");
    std::vector<std::string> out;
    for (auto &r : run_check(check, params)) {
        out.push_back(r.check + " [" + r.input + "]");
        for (auto &t : r.trace) out.push_back("  " + t);
        if (r.skipped) {
            out.push_back("  skipped: " + r.reason);
            continue;
        }
        out.push_back("  left  = " + r.left);
        out.push_back("  right = " + r.right);
        out.push_back(std::string("  verdict: ") + (r.verdict ? "pass" : "fail"));
    }
    return out;
}

} // namespace eps
