#include "portcanyon/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "portcanyon/errors.hpp"

namespace portcanyon::geometry {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid canyon geometry: ") + what);
}

}  // namespace

void validate(const CanyonGeometry& g) {
    require(std::isfinite(g.tx_height) && g.tx_height > 0.0, "h must be > 0");
    require(std::isfinite(g.width) && g.width >= 0.0, "d must be >= 0");
    require(std::isfinite(g.distance) && g.distance > 0.0, "D must be > 0");
    require(std::isfinite(g.rx_depth) && g.rx_depth > 0.0, "h' must be > 0");
    require(g.acceptance_angle > 0.0 && g.acceptance_angle <= std::numbers::pi / 2,
            "psi must be in (0, pi/2]");
}

ElevationAngles elevation_angles(const CanyonGeometry& g) {
    validate(g);
    const double phi1 = std::atan(g.tx_height / g.distance);
    const double phi2 = std::atan(g.tx_height / (g.distance + g.width));
    return {phi1, phi2, phi1 - phi2};
}

double poynting_fspl(const CanyonGeometry& g) {
    validate(g);
    return 1.0 / (g.tx_height * g.tx_height + g.distance * g.distance);
}

double projected_aperture_exact(const CanyonGeometry& g) {
    const auto angles = elevation_angles(g);
    return std::hypot(g.tx_height, g.distance) * std::sin(angles.theta);
}

double acceptance_length(const CanyonGeometry& g) {
    validate(g);
    return g.distance * std::sin(g.acceptance_angle);
}

double vertical_fraction(const CanyonGeometry& g) {
    validate(g);
    const double r = g.tx_height / (g.rx_depth * g.distance);
    return r * r;
}

double received_power_exact(const CanyonGeometry& g) {
    return vertical_fraction(g) * acceptance_length(g) * projected_aperture_exact(g) *
           poynting_fspl(g);
}

double received_power_approx(const CanyonGeometry& g) {
    validate(g);
    const double d2 = g.distance * g.distance;
    return g.acceptance_angle * g.tx_height * g.width / (d2 * d2);
}

double exact_to_approx_limit(const CanyonGeometry& g) {
    validate(g);
    const double r = g.tx_height / g.rx_depth;
    return r * r * std::sin(g.acceptance_angle) / g.acceptance_angle;
}

}  // namespace portcanyon::geometry
