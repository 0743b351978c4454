#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "portcanyon/config.hpp"
#include "portcanyon/errors.hpp"
#include "portcanyon/pathloss.hpp"
#include "portcanyon/scan.hpp"

namespace portcanyon::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_data = 3,    // parse, grid, shape, lookup, pairing, insufficient data, degenerate fit
    exit_domain = 4,  // domain error or no solution
    exit_config = 5,
    exit_io = 6,
};

int exit_code_for(ErrorCategory category) noexcept;

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct LabeledSamples {
    std::string label;
    std::vector<pathloss::GainSample> samples;
};

/// Angle-averaged gain against 3-D TX-RX distance for every vehicle-free
/// scan, split by stacking, plus an aggregated group when both are present.
std::vector<LabeledSamples> distance_samples(std::span<const AngularScan> scans, double rx_height);

/// One row per fit: "configuration,n,n_ci,r0_db,r0_ci,rmse_db,samples".
std::string fit_table_csv(const std::vector<std::pair<std::string, pathloss::LogLinFit>>& rows);

/// Aligned text table in the same column order, "n +- ci".
std::string fit_table_text(const std::vector<std::pair<std::string, pathloss::LogLinFit>>& rows);

/// Plain-text coverage report: noise floor, EIRP, MAPL, range and throughput.
std::string coverage_report(const config::ToolConfig& cfg);

}  // namespace portcanyon::cli
