#pragma once

#include <iosfwd>
#include <string>

#include "schwarz/suites.hpp"

namespace schwarz {

struct ArtifactOptions {
    bool include_timing = true;   ///< false zeroes wall_ms for byte-reproducible output
    bool dump_matrices = false;   ///< Matrix Market dumps of the assembled operators
};

/// `sweep,iters,err,cond,lambda_max,lambda_min,cond_source,wall_ms`, one
/// row per case, summary values appended as extra rows.
void write_csv(const SuiteResult& result, std::ostream& os, const ArtifactOptions& options = {});

/// Two columns: iteration index and residual norm (iterations + 1 rows).
void write_residual_history(const SolveReport& report, std::ostream& os);

/// Writes <dir>/<name>.csv plus per-case residual histories.
void emit_suite_artifacts(const SuiteResult& result, const std::string& dir,
                          const ArtifactOptions& options = {});

/// Single-run artifacts: run.csv, residual.txt and (optionally) the
/// assembled operators in Matrix Market form.
void emit_case_artifacts(const std::string& label, const SolveReport& report,
                         const CaseSystem& system, const std::string& dir,
                         const ArtifactOptions& options = {});

} // namespace schwarz
