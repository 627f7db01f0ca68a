#pragma once

#include <optional>
#include <string>
#include <vector>

#include "identities/identities.hpp"
#include "pdecheck/residual.hpp"
#include "report/report.hpp"

namespace iterlab {

// Verdict codes shared with the C API and CLI exit logic.
enum class Verdict { Pass = 0, Fail = 1, Inconclusive = 2 };

struct SuiteEntry {
    std::string tag;
    Verdict verdict = Verdict::Fail;
    Json line;  // one JSON-report object
    std::vector<std::vector<std::string>> csv_rows;  // per-point residuals (PDE suite)
};

struct PdeSuiteOptions {
    std::string tags = "all";  // comma list of a..o or "all"
    std::optional<double> tolerance;
    std::size_t grid_points = 0;  // 0 = registry default grid
};

struct IdentitySuiteOptions {
    std::string tags = "all";
    std::size_t n_samples = 100000;
    std::uint64_t seed = 42;
    bool negative_controls = false;
};

std::vector<SuiteEntry> run_pde_suite(const PdeSuiteOptions& opt);
std::vector<SuiteEntry> run_identity_suite(const IdentitySuiteOptions& opt);

// Exit-code contract: 0 all pass, 2 any inconclusive, 1 any fail.
int suite_exit_code(const std::vector<SuiteEntry>& entries);

std::vector<char> parse_pde_tags(const std::string& tags);

}  // namespace iterlab
