#pragma once

#include <string>
#include <vector>

#include "epsilon/checks.hpp"

namespace eps {

struct CatalogEntry {
    std::string check;
    CheckParams params;
};

// TOML with optional [field] {p, f}, [sheaf] {expr}, [form] {g} defaults and
// [[check]] tables carrying name = "..." plus per-entry overrides.
// Parse failures throw syntax-error with line and column.
std::vector<CatalogEntry> parse_catalog(const std::string &text, const std::string &source = "<catalog>");
std::vector<CatalogEntry> load_catalog(const std::string &path);

// Built-in catalogs by name ("tame-p5").
bool is_builtin_catalog(const std::string &name);
const std::string &builtin_catalog_text(const std::string &name);

struct RunOptions {
    unsigned jobs = 1;
    bool timing = false;   // adds wall-clock seconds, which makes output nondeterministic
};

struct EntryResult {
    std::vector<CheckReport> reports;
    double seconds = 0;
};

// Entries run in parallel; results come back in catalog order.  Configuration
// errors inside an entry are rethrown after all workers finish.
std::vector<EntryResult> run_catalog(const std::vector<CatalogEntry> &entries, const RunOptions &opt);

// --jobs value, overridden by EPSILON_JOBS when set.
unsigned resolve_jobs(unsigned requested);

constexpr int kReportSchemaVersion = 1;
std::string report_json(const CheckReport &r, const double *seconds = nullptr);

// 0 when nothing failed (skips count as passing), 1 otherwise.
int exit_code(const std::vector<EntryResult> &results);

// Codes treated as configuration errors (exit status 2).
bool is_config_error(const std::string &code);

// Human-readable derivation for one check.
std::vector<std::string> explain(const std::string &check, const CheckParams &params);

} // namespace eps
