#pragma once

#include <string>
#include <vector>

#include "uneq/config.hpp"
#include "uneq/report.hpp"

namespace uneq::cli {

struct RunResult {
    int exit_code = 0;           // 0 ok, 2 non-convergence, 3 verification failure
    std::string report;
    std::vector<ResultRow> rows; // empty for report-only analyses
};

// Runs the configured analysis in memory. Throws ConfigError for bad input.
RunResult run_analysis(const RunConfig& cfg);

// Writes report and CSV (when rows exist) under out_dir; returns the exit
// code, folding in I/O failures.
int write_artifacts(const RunResult& result, const RunConfig& cfg,
                    const std::string& out_dir);

}  // namespace uneq::cli
