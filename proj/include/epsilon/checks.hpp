#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "epsilon/field.hpp"

namespace eps {

// String-valued parameters of one check entry (p, f, sheaf, form, n, ...).
struct CheckParams {
    std::map<std::string, std::string> values;

    bool has(const std::string &key) const { return values.count(key) != 0; }
    std::string get(const std::string &key) const;   // throws missing-parameter
    std::string get(const std::string &key, const std::string &dflt) const;
    int64_t get_int(const std::string &key) const;
    int64_t get_int(const std::string &key, int64_t dflt) const;
    FqPtr field() const;   // from p and f (default 1), or q
    std::string echo() const;
};

struct CheckReport {
    std::string check;
    std::string input;
    std::string left, right;
    bool verdict = false;
    bool skipped = false;
    std::string reason;
    std::vector<std::string> trace;
};

const std::vector<std::string> &check_names();
bool is_check_name(const std::string &name);

// Runs one family.  Configuration problems throw; unsupported inputs come back
// as skipped reports.
std::vector<CheckReport> run_check(const std::string &name, const CheckParams &params);

// Individual families.
std::vector<CheckReport> check_gauss_norm(const CheckParams &P);
std::vector<CheckReport> check_hasse_davenport(const CheckParams &P);
std::vector<CheckReport> check_stickelberger(const CheckParams &P);
std::vector<CheckReport> check_jacobi_independence(const CheckParams &P);
std::vector<CheckReport> check_gos(const CheckParams &P);
std::vector<CheckReport> check_milnor(const CheckParams &P);
std::vector<CheckReport> check_convolution(const CheckParams &P);
std::vector<CheckReport> check_external_product(const CheckParams &P);
std::vector<CheckReport> check_snc(const CheckParams &P);
std::vector<CheckReport> check_product_formula(const CheckParams &P);
std::vector<CheckReport> check_theta_laws(const CheckParams &P);

} // namespace eps
