#pragma once

#include <filesystem>
#include <string_view>

#include "portcanyon/linkbudget.hpp"
#include "portcanyon/pathloss.hpp"
#include "portcanyon/spatial.hpp"
#include "portcanyon/synth.hpp"

namespace portcanyon::config {

/// Every tunable default of the toolkit. See README for the JSON keys.
struct ToolConfig {
    synth::SynthConfig synth;
    double angular_bin_width_db = 1.0;
    double vehicle_bin_width_db = 1.0;
    double spatial_x_min = spatial::dense_window_start;
    double spatial_x_max = spatial::dense_window_end;
    double fixed_slope = -4.0;
    double frequency_hz = 28e9;
    linkbudget::LinkBudgetConfig link;
    pathloss::LogLinFit coverage_fit{-4.09, -23.4, 0.0, 0.0, 0.0, 0};
};

/// Parses JSON text over the defaults. Unknown keys and wrongly typed values
/// raise ConfigError.
ToolConfig parse_config(std::string_view json_text);
ToolConfig load_config(const std::filesystem::path& path);

/// The effective configuration as JSON (used by `portcanyon config`).
std::string dump_config(const ToolConfig& cfg);

}  // namespace portcanyon::config
