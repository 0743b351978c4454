#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "portcanyon/scan.hpp"

namespace portcanyon::spatial {

/// Scans along one X line (fixed TX and Y) at uniformly spaced positions,
/// stored as a dB matrix [position][angle].
class DenseLine {
public:
    /// Scans must share tx, y and angle grid; they are sorted by X and the
    /// spacing must be uniform (GridError) with at least two positions.
    explicit DenseLine(std::span<const AngularScan> scans);

    std::size_t size() const noexcept { return positions_.size(); }
    const std::vector<double>& positions() const noexcept { return positions_; }
    const std::vector<double>& angles() const noexcept { return angles_; }
    double spacing() const noexcept { return spacing_; }
    double y() const noexcept { return y_; }

    /// dB gains of every position at grid angle index `k`.
    std::vector<double> column(std::size_t k) const;

    /// Grid index of `phi`; LookupError if it is not on the grid.
    std::size_t angle_index(double phi) const;

private:
    std::vector<double> positions_;
    std::vector<double> angles_;
    std::vector<std::vector<double>> gains_db_;
    double spacing_ = 0.0;
    double y_ = 0.0;
};

/// Mean dB gain over the line at grid angle `phi`.
double line_mean(const DenseLine& line, double phi);

/// Per-position dB gain minus line_mean.
std::vector<double> zero_mean(const DenseLine& line, double phi);

struct Autocorrelation {
    std::vector<double> r;    // r[k] for lag k = 0 .. size-1, r[0] = 1
    bool degenerate = false;  // zero-variance input; r = {1, 0, 0, ...}
};

/// Lagged autocovariance of a sequence after removing its mean,
/// r_k = sum_j v_j v_{j+k}, normalized by r_0.
Autocorrelation autocorrelation(std::span<const double> sequence);

Autocorrelation autocorrelation(const DenseLine& line, double phi);

struct CorrelationCurve {
    std::vector<double> lag_m;
    std::vector<double> r;
    std::size_t line_count = 0;
    std::size_t degenerate_count = 0;  // (line, angle) pairs with zero variance
};

/// Mean normalized autocorrelation over every grid angle of every line.
/// Lines must share the number of positions, the spacing and the angle grid.
CorrelationCurve averaged_correlation(std::span<const DenseLine> lines);

inline constexpr double dense_window_start = 13.5;  // m
inline constexpr double dense_window_end = 14.9;    // m

/// Splits scans with x inside [x_min, x_max] into DenseLines keyed by
/// (tx, stacking, vehicle state, y). Groups with fewer than two scans are dropped.
std::vector<DenseLine> group_lines(std::span<const AngularScan> scans,
                                   double x_min = dense_window_start,
                                   double x_max = dense_window_end);

}  // namespace portcanyon::spatial
