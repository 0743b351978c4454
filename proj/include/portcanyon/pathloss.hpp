#pragma once

#include <cstddef>
#include <span>

// Distance-dependent gain models. Sign convention: channel gain in dB is
// negative for physical links and equals minus the path loss. The fitted
// exponent n is stored signed, so a gain falling with distance gives n < 0.

namespace portcanyon::pathloss {

inline constexpr double speed_of_light = 299792458.0;  // m/s
inline constexpr double min_sample_distance = 1.0;     // m
inline constexpr double confidence_level = 0.95;

struct GainSample {
    double distance = 0.0;  // 3-D TX-RX distance (m)
    double gain_db = 0.0;
};

/// Fit of gain_db = 10 n log10(distance) + r0.
struct LogLinFit {
    double n = 0.0;
    double r0 = 0.0;     // dB at 1 m
    double ci_n = 0.0;   // 95% half-width
    double ci_r0 = 0.0;  // 95% half-width
    double rmse = 0.0;   // root mean square residual, 1/N
    std::size_t sample_count = 0;
};

/// Friis free-space path loss 20 log10(4 pi D f / c), dB.
double fspl_db(double distance_m, double frequency_hz);

/// Ordinary least squares on (10 log10 D, gain) with two-sided Student-t
/// intervals on N - 2 degrees of freedom. Needs >= 3 samples and >= 2
/// distinct distances (DegenerateFitError otherwise).
LogLinFit fit_loglinear(std::span<const GainSample> samples);

/// Least-squares intercept with the exponent pinned to `n_fixed`;
/// intervals use N - 1 degrees of freedom and ci_n = 0.
LogLinFit fit_fixed_slope(std::span<const GainSample> samples, double n_fixed);

/// 10 n log10(D) + r0.
double predict(const LogLinFit& fit, double distance_m);

/// Two-sided Student-t critical value for the given confidence and degrees of freedom.
double t_critical(double dof, double confidence = confidence_level);

}  // namespace portcanyon::pathloss
