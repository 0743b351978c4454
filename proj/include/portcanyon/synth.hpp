#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "portcanyon/angular.hpp"
#include "portcanyon/geometry.hpp"
#include "portcanyon/scan.hpp"
#include "portcanyon/stats.hpp"

namespace portcanyon::synth {

inline constexpr std::size_t sections_per_row = 6;
inline constexpr double section_length = 6.0;  // m

struct Transmitter {
    std::string id;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;  // height above ground (m)
};

/// Container canyon test site and its measurement plan.
///
/// The yard frame has its origin at an outer corner of the canyon: X runs
/// along the canyon, Y across it. Row 0 of `section_heights` is the wall at
/// small Y (0 <= y < wall_thickness), row 1 the wall beyond the interior.
struct CampaignLayout {
    Stacking stacking = Stacking::uniform;
    double length = 36.0;
    double width = 8.0;            // interior width
    double wall_thickness = 2.5;   // one container row
    std::array<std::array<double, sections_per_row>, 2> section_heights{};
    std::vector<Transmitter> transmitters;
    std::vector<Position> coarse_points;
    std::vector<Position> dense_points;       // 0.2 m grid, measured with and without vehicle
    std::vector<Position> dense_fine_points;  // extra 0.1 m points, vehicle absent only
    std::string dense_tx;

    double interior_y_min() const noexcept { return wall_thickness; }
    double interior_y_max() const noexcept { return wall_thickness + width; }
};

/// TX1 at every crane stop and TX2.
std::vector<Transmitter> standard_transmitters();
angular::TxPositions tx_positions(std::span<const Transmitter> transmitters);
const Transmitter& find_transmitter(std::span<const Transmitter> transmitters, const std::string& id);

CampaignLayout build_layout(Stacking kind);
void validate(const CampaignLayout& layout);

/// Wall height at the section containing `x` for the given wall row.
double wall_height(const CampaignLayout& layout, int row, double x);

/// Gaussian horn main lobe exp(-4 ln2 (phi / HPBW)^2); no sidelobes.
class HornPattern {
public:
    explicit HornPattern(double hpbw_deg = 10.0);

    double hpbw_rad() const noexcept { return hpbw_rad_; }

    /// Normalized power pattern at `offset` rad from boresight (wrapped to [-pi, pi)).
    double gain(double offset) const noexcept;

    /// Circular smoothing kernel on `bins` uniform azimuth bins, normalized to unit sum.
    std::vector<double> kernel(std::size_t bins) const;

private:
    double hpbw_rad_;
};

/// Circular convolution of `power` with `kernel` (same length; kernel[k] is
/// the weight at offset +k bins). Total power is conserved when the kernel sums to one.
std::vector<double> circular_smooth(std::span<const double> power, std::span<const double> kernel);

struct VehicleEffect {
    double mu = 0.0;     // dB, mean of base - with_vehicle
    double sigma = 0.0;  // dB
};

struct SynthConfig {
    std::uint64_t seed = 1;
    std::size_t grid_size = 360;       // output azimuth samples per scan
    std::size_t fading_subbins = 360;  // independent Rayleigh bins per turn
    bool fading = true;
    std::size_t realizations = 10000;  // scans for full-spread statistics
    double hpbw_deg = 10.0;
    double acceptance_angle = geometry::default_acceptance_angle;
    double rx_height = 1.5;            // m
    double calibration_db = -36.0;     // absolute offset of the proportional model
    VehicleEffect position1{1.13, 6.91};
    VehicleEffect position2{1.37, 6.77};
    unsigned threads = 1;
};

void validate(const SynthConfig& cfg);

using Rng = std::mt19937_64;

/// Independent generator for sub-stream `stream` of `seed`.
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

/// Canyon geometry seen by `rx` from `tx`: the horizontal TX-RX ray enters
/// over the near wall; D runs to that wall's inner edge, h and h' are taken
/// relative to the wall height at the crossing.
geometry::CanyonGeometry canyon_geometry_at(const CampaignLayout& layout, const Transmitter& tx,
                                            Position rx, const SynthConfig& cfg);

/// Mean channel gain (dB) from the far-transmitter canyon model plus the calibration offset.
double mean_gain_at(const CampaignLayout& layout, const Transmitter& tx, Position rx,
                    const SynthConfig& cfg);

/// 3-D TX-RX distance with the receiver at cfg.rx_height.
double euclidean_distance(const Transmitter& tx, Position rx, double rx_height);

/// Fully spread spectrum with the given mean: iid exponential power per
/// fading sub-bin, smoothed by the horn, sampled on the output grid.
std::vector<double> synthesize_spectrum_db(double mean_gain_db, const SynthConfig& cfg,
                                           std::span<const double> kernel, Rng& rng);

/// One scan at `rx`, drawn from sub-stream `stream` of cfg.seed.
AngularScan generate_scan(const CampaignLayout& layout, const Transmitter& tx, Position rx,
                          const SynthConfig& cfg, std::uint64_t stream = 0);

/// Empirical CDF of azimuth gain over cfg.realizations fully spread scans.
stats::EmpiricalCdf fullspread_gain_distribution(const SynthConfig& cfg);

enum class VehicleMode { off, on };

/// Every coarse point for every transmitter, plus the dense grid for the
/// layout's dense transmitter. With the vehicle on, each 0.2 m dense point
/// also gets position1/position2 scans: the base scan minus an iid Gaussian
/// dB offset per angle. Output is identical for any thread count.
Dataset generate_campaign(const CampaignLayout& layout, const SynthConfig& cfg, VehicleMode mode);

}  // namespace portcanyon::synth
