#include "portcanyon/scan.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "portcanyon/errors.hpp"

namespace portcanyon {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

std::string_view to_token(VehicleState state) noexcept {
    switch (state) {
        case VehicleState::absent: return "absent";
        case VehicleState::position1: return "position1";
        case VehicleState::position2: return "position2";
    }
    return "absent";
}

std::string_view to_token(Stacking stacking) noexcept {
    return stacking == Stacking::uniform ? "uniform" : "nonuniform";
}

std::optional<VehicleState> parse_vehicle_state(std::string_view token) noexcept {
    if (token == "absent") return VehicleState::absent;
    if (token == "position1") return VehicleState::position1;
    if (token == "position2") return VehicleState::position2;
    return std::nullopt;
}

std::optional<Stacking> parse_stacking(std::string_view token) noexcept {
    if (token == "uniform") return Stacking::uniform;
    if (token == "nonuniform") return Stacking::nonuniform;
    return std::nullopt;
}

double AngularScan::linear_gain(std::size_t i) const {
    return std::pow(10.0, gains_db.at(i) / 10.0);
}

double wrap_two_pi(double angle) noexcept {
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
}

std::vector<double> uniform_grid(std::size_t n, double first) {
    if (n == 0) throw DomainError("angle grid must have at least one sample");
    std::vector<double> grid(n);
    const double step = two_pi / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = first + static_cast<double>(i) * step;
    return grid;
}

bool same_grid(const std::vector<double>& a, const std::vector<double>& b) noexcept {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > grid_tolerance_rad) return false;
    }
    return true;
}

std::size_t nearest_grid_index(const std::vector<double>& grid, double angle) {
    if (grid.empty()) throw LookupError("empty angle grid");
    std::size_t best = 0;
    double best_dist = INFINITY;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double diff = wrap_two_pi(angle - grid[i]);
        diff = std::min(diff, two_pi - diff);
        if (diff < best_dist) {
            best_dist = diff;
            best = i;
        }
    }
    return best;
}

std::string describe_key(const AngularScan& scan) {
    std::ostringstream os;
    os << "(tx=" << scan.tx << ", x=" << scan.rx.x << ", y=" << scan.rx.y
       << ", vehicle=" << to_token(scan.vehicle_state) << ", stacking=" << to_token(scan.stacking)
       << ")";
    return os.str();
}

void validate(const AngularScan& scan) {
    if (scan.angles.size() != scan.gains_db.size()) {
        throw ShapeError("scan " + describe_key(scan) + ": angles and gains differ in length");
    }
    if (scan.angles.size() < min_scan_samples) {
        throw ShapeError("scan " + describe_key(scan) + ": fewer than 8 samples");
    }
    const double step = two_pi / static_cast<double>(scan.angles.size());
    for (std::size_t i = 1; i < scan.angles.size(); ++i) {
        if (std::abs(scan.angles[i] - scan.angles[i - 1] - step) > grid_tolerance_rad) {
            throw GridError("scan " + describe_key(scan) + ": angle grid is not uniform over a full turn");
        }
    }
    for (double g : scan.gains_db) {
        if (!std::isfinite(g)) throw DomainError("scan " + describe_key(scan) + ": non-finite gain");
    }
}

}  // namespace portcanyon
