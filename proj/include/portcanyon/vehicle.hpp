#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "portcanyon/scan.hpp"
#include "portcanyon/stats.hpp"

namespace portcanyon::vehicle {

struct GaussianFitResult {
    double mu = 0.0;     // dB
    double sigma = 0.0;  // dB, population (1/N) estimate
    std::size_t sample_count = 0;
};

/// Per-angle gain difference base - with_vehicle in dB.
///
/// The scans must share tx, RX position, stacking and grid; `base` must be
/// vehicle-free and `with_vehicle` must have a vehicle. Otherwise PairingError.
std::vector<double> vehicle_delta(const AngularScan& base, const AngularScan& with_vehicle);

/// Maximum-likelihood Gaussian fit. InsufficientDataError below two samples.
GaussianFitResult fit_gaussian(std::span<const double> samples);

struct DeltaCdfReport {
    GaussianFitResult fit;
    std::vector<double> grid;       // shared value grid (dB)
    std::vector<double> empirical;  // empirical CDF on the grid
    std::vector<double> fitted;     // fitted Gaussian CDF on the grid
    double max_gap = 0.0;           // sup |F_emp - F_fit| over the real line
};

/// Empirical vs fitted-Gaussian CDF of pooled deltas. The gap is the exact
/// Kolmogorov distance; the curves are tabulated on `grid_points` values.
DeltaCdfReport delta_cdf_report(std::span<const double> deltas, std::size_t grid_points = 256);

/// Base/vehicle scan pairs matched on the exact (tx, x, y, stacking) key.
/// Vehicle scans without a matching base scan raise PairingError.
std::vector<std::pair<const AngularScan*, const AngularScan*>> pair_scans(
    std::span<const AngularScan> scans, VehicleState state);

struct DeltaAngleStats {
    std::vector<double> angles;
    std::vector<double> mean_db;  // arithmetic mean of delta per angle
    stats::Histogram bins;
    std::vector<std::vector<std::size_t>> counts;  // [angle][bin]
};

/// Per-angle mean and histogram of deltas. Each row of `deltas` is one
/// scan pair on the common grid `angles`.
DeltaAngleStats delta_angle_stats(const std::vector<double>& angles,
                                  std::span<const std::vector<double>> deltas,
                                  double bin_width_db = 1.0);

}  // namespace portcanyon::vehicle
