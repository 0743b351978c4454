#pragma once

// Canyon propagation model: power reaching a receiver inside a container
// canyon lit from above by a distant transmitter. Every power quantity here
// is proportional; constants are absorbed by the regression intercept.

namespace portcanyon::geometry {

inline constexpr double default_acceptance_angle = 0.1;  // rad

/// Side-view geometry of a transmitter illuminating a canyon.
///
/// Distances are horizontal to the near (TX-side) canyon edge. A zero
/// `width` is accepted and models a closed canyon with zero aperture.
struct CanyonGeometry {
    double tx_height = 0.0;         // h: TX height above the canyon top (m)
    double width = 0.0;             // d: canyon internal width (m)
    double distance = 0.0;          // D: TX to near canyon edge, horizontal (m)
    double acceptance_angle = default_acceptance_angle;  // psi: max azimuth accepted (rad)
    double rx_depth = 0.0;          // h': receiver depth below the canyon top (m)
};

/// Throws DomainError unless h, D, h' > 0, d >= 0 and 0 < psi <= pi/2.
void validate(const CanyonGeometry& geom);

struct ElevationAngles {
    double phi1;   // elevation of the near edge seen from the TX (rad)
    double phi2;   // elevation of the far edge (rad)
    double theta;  // angular width of the opening, phi1 - phi2 (rad)
};

ElevationAngles elevation_angles(const CanyonGeometry& geom);

/// Incident flux density at the canyon top, (h^2 + D^2)^-1.
double poynting_fspl(const CanyonGeometry& geom);

/// Canyon opening projected orthogonally to the incoming wave: l * sin(theta).
double projected_aperture_exact(const CanyonGeometry& geom);

/// Length of canyon accepting energy, D * sin(psi).
double acceptance_length(const CanyonGeometry& geom);

/// Fraction of entering energy reaching the receiver, (h / (h' D))^2.
double vertical_fraction(const CanyonGeometry& geom);

/// nu * L * A * |S| with no small-angle approximation.
double received_power_exact(const CanyonGeometry& geom);

/// Far-transmitter limit psi * h * d / D^4.
double received_power_approx(const CanyonGeometry& geom);

/// Limit of received_power_exact / received_power_approx as D grows:
/// h^2 sin(psi) / (psi h'^2).
double exact_to_approx_limit(const CanyonGeometry& geom);

}  // namespace portcanyon::geometry
