#include "portcanyon/linkbudget.hpp"

#include <cmath>

#include "portcanyon/errors.hpp"

namespace portcanyon::linkbudget {

void validate(const LinkBudgetConfig& cfg) {
    if (!(cfg.bandwidth_hz > 0.0)) throw ConfigError("bandwidth must be positive");
    if (!(cfg.temperature_k > 0.0)) throw ConfigError("temperature must be positive");
    if (cfg.polarizations < 1) throw ConfigError("at least one polarization is required");
}

double eirp_dbm(const LinkBudgetConfig& cfg) {
    return cfg.tx_power_dbm_per_pol + cfg.tx_antenna_gain_dbi;
}

double noise_floor_dbm(const LinkBudgetConfig& cfg) {
    validate(cfg);
    const double noise_w = boltzmann * cfg.temperature_k * cfg.bandwidth_hz;
    return 10.0 * std::log10(noise_w / 1e-3) + cfg.noise_figure_db;
}

double max_allowable_pathloss_db(const LinkBudgetConfig& cfg) {
    return eirp_dbm(cfg) - noise_floor_dbm(cfg) - cfg.required_snr_db - cfg.shadow_margin_db;
}

double throughput_bps(const LinkBudgetConfig& cfg) {
    validate(cfg);
    return cfg.spectral_efficiency_bps_hz * cfg.polarizations * cfg.bandwidth_hz;
}

double coverage_range_m(const pathloss::LogLinFit& fit, double mapl_db) {
    if (!(fit.n < 0.0)) {
        throw NoSolutionError("coverage range needs a gain that decreases with distance (n < 0)");
    }
    // Channel gain is the negated path loss.
    const double target_gain_db = -mapl_db;
    return std::pow(10.0, (target_gain_db - fit.r0) / (10.0 * fit.n));
}

}  // namespace portcanyon::linkbudget
