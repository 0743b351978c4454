#pragma once

#include "portcanyon/pathloss.hpp"

namespace portcanyon::linkbudget {

inline constexpr double boltzmann = 1.380649e-23;  // J/K

/// Downlink budget inputs. Defaults describe a 28 GHz base station with a
/// 51 dBm EIRP serving an omnidirectional UE over 400 MHz.
struct LinkBudgetConfig {
    double tx_power_dbm_per_pol = 28.0;
    double tx_antenna_gain_dbi = 23.0;
    double shadow_margin_db = 10.0;
    double bandwidth_hz = 400e6;
    double temperature_k = 300.0;
    double noise_figure_db = 10.0;
    double required_snr_db = 8.0;
    // Informational only; not part of the allowable-loss arithmetic.
    double spectral_efficiency_bps_hz = 2.0;
    int polarizations = 2;
};

void validate(const LinkBudgetConfig& cfg);

double eirp_dbm(const LinkBudgetConfig& cfg);

/// 10 log10(k T B / 1 mW) + NF.
double noise_floor_dbm(const LinkBudgetConfig& cfg);

/// EIRP - noise floor - required SNR - shadow margin.
double max_allowable_pathloss_db(const LinkBudgetConfig& cfg);

/// Peak throughput: spectral efficiency x polarizations x bandwidth (bit/s).
double throughput_bps(const LinkBudgetConfig& cfg);

/// Distance at which the fitted gain equals -mapl. NoSolutionError if the
/// fitted gain does not decrease with distance.
double coverage_range_m(const pathloss::LogLinFit& fit, double mapl_db);

}  // namespace portcanyon::linkbudget
