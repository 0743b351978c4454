#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "portcanyon/scan.hpp"
#include "portcanyon/stats.hpp"

namespace portcanyon::angular {

inline constexpr double default_bin_width_db = 1.0;

/// 10 log10(gain); DomainError for gain <= 0.
double to_db(double linear_gain);

/// Angle-averaged gain in dB: 10 log10 of the mean linear gain over the grid.
double circular_mean_gain(const AngularScan& scan);

/// Per-angle gain relative to the circular mean, in dB.
std::vector<double> normalized_spectrum(const AngularScan& scan);

/// Azimuth directional gain: max of the normalized spectrum (dB, >= 0).
double azimuth_gain(const AngularScan& scan);

/// Direction of the transmitter seen from the receiver,
/// atan2(y_rx - y_tx, x_tx - x_rx) wrapped to [0, 2pi).
double tx_bearing(Position tx, Position rx);

struct AngularSpectrumStats {
    std::vector<double> angles;
    std::vector<double> mean_db;              // linear-domain mean per angle, in dB
    stats::Histogram bins;                    // shared bin layout (edges in dB)
    std::vector<std::vector<std::size_t>> counts;  // [angle][bin]
    std::size_t scan_count = 0;
};

/// Per-angle ensemble mean and histogram of per-scan dB gains.
/// All scans must share one angle grid (ShapeError otherwise).
AngularSpectrumStats ensemble_stats(std::span<const AngularScan> scans,
                                    double bin_width_db = default_bin_width_db);

struct GainCdfs {
    stats::EmpiricalCdf all_directions;  // normalized gain pooled over every angle and scan
    stats::EmpiricalCdf tx_direction;    // normalized gain at the grid angle nearest the TX bearing
};

using TxPositions = std::map<std::string, Position>;

/// LookupError if a scan's transmitter has no entry in `tx_positions`.
GainCdfs gain_cdfs(std::span<const AngularScan> scans, const TxPositions& tx_positions);

}  // namespace portcanyon::angular
