#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "schwarz/harness.hpp"

namespace schwarz {

struct SuiteCase {
    std::string sweep;  ///< row label, e.g. "3x3 delta=h" or "0.4999"
    RunConfig cfg;
};

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteCase> cases;
    std::vector<SolveReport> reports;
    std::vector<std::string> errors;  ///< per case, empty when the run succeeded
    std::vector<SuiteCheck> checks;
    std::vector<std::pair<std::string, double>> summaries;  ///< e.g. fitted slopes

    bool all_pass() const;
    const SolveReport* find(const std::string& sweep) const;
};

/// A named sweep reproducing one experiment table, with the acceptance
/// annotations evaluated after the runs.
struct TableSuite {
    std::string name;
    std::string sweep_name;
    std::vector<SuiteCase> cases;
    std::function<std::vector<SuiteCheck>(const SuiteResult&)> annotations;
    std::function<std::vector<std::pair<std::string, double>>(const SuiteResult&)> summaries;
};

std::vector<std::string> built_in_suite_names();
TableSuite built_in_suite(const std::string& name);

/// Runs every case (continuing past failures), reusing assembled systems
/// between cases that share them, then evaluates the annotations.
SuiteResult run_suite(const TableSuite& suite, int threads = 1, std::ostream* progress = nullptr);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace schwarz
