#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace portcanyon {

enum class VehicleState { absent, position1, position2 };
enum class Stacking { uniform, nonuniform };

std::string_view to_token(VehicleState state) noexcept;
std::string_view to_token(Stacking stacking) noexcept;
std::optional<VehicleState> parse_vehicle_state(std::string_view token) noexcept;
std::optional<Stacking> parse_stacking(std::string_view token) noexcept;

/// Horizontal position in the yard frame: X along the canyon, Y across it (m).
struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

inline constexpr std::size_t min_scan_samples = 8;
inline constexpr double grid_tolerance_rad = 1e-9;

/// One full azimuth rotation of the receive horn at one RX point.
///
/// Gains are channel (coupling) gains in dB, antenna gains included.
/// Keeping the dB values as the stored representation makes CSV exchange
/// lossless; use linear_gain() where the linear domain is needed.
struct AngularScan {
    std::string tx;
    Position rx;
    std::vector<double> angles;    // rad, uniform, strictly increasing, one full turn
    std::vector<double> gains_db;  // one per angle
    VehicleState vehicle_state = VehicleState::absent;
    Stacking stacking = Stacking::uniform;

    std::size_t size() const noexcept { return angles.size(); }
    double linear_gain(std::size_t i) const;

    friend bool operator==(const AngularScan&, const AngularScan&) = default;
};

/// Throws ShapeError/GridError/DomainError when the scan violates its invariants.
void validate(const AngularScan& scan);

/// Canonical uniform grid first + i * 2pi / n.
std::vector<double> uniform_grid(std::size_t n, double first = 0.0);

/// True when both grids have the same size and agree sample-wise within grid_tolerance_rad.
bool same_grid(const std::vector<double>& a, const std::vector<double>& b) noexcept;

/// Index of the grid angle closest to `angle` on the circle.
std::size_t nearest_grid_index(const std::vector<double>& grid, double angle);

/// Wrap to [0, 2pi).
double wrap_two_pi(double angle) noexcept;

/// Human-readable scan key used in error messages.
std::string describe_key(const AngularScan& scan);

using Dataset = std::vector<AngularScan>;

}  // namespace portcanyon
