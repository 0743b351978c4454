#include "portcanyon/pathloss.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "portcanyon/errors.hpp"
#include "portcanyon/stats.hpp"

namespace portcanyon::pathloss {

namespace {

double regressor(double distance) {
    if (!(distance > 0.0) || !std::isfinite(distance)) {
        throw DomainError("gain sample distance must be positive");
    }
    return 10.0 * std::log10(distance);
}

}  // namespace

double fspl_db(double distance_m, double frequency_hz) {
    if (!(distance_m > 0.0)) throw DomainError("FSPL distance must be positive");
    if (!(frequency_hz > 0.0)) throw DomainError("FSPL frequency must be positive");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / speed_of_light);
}

double t_critical(double dof, double confidence) {
    if (!(dof > 0.0)) throw DomainError("t quantile needs positive degrees of freedom");
    boost::math::students_t dist(dof);
    return boost::math::quantile(dist, 0.5 + confidence / 2.0);
}

LogLinFit fit_loglinear(std::span<const GainSample> samples) {
    const std::size_t n = samples.size();
    if (n < 3) throw DegenerateFitError("log-linear fit needs at least three samples");

    std::vector<double> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    for (const auto& s : samples) {
        xs.push_back(regressor(s.distance));
        ys.push_back(s.gain_db);
    }
    const double x_mean = stats::mean(xs);
    const double y_mean = stats::mean(ys);

    stats::CompensatedSum sxx, sxy;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        sxx.add(dx * dx);
        sxy.add(dx * (ys[i] - y_mean));
    }
    // Relative rank test: distances that agree to ~1e-12 in log are one point.
    if (!(sxx.value() > 1e-24 * std::max(1.0, x_mean * x_mean) * static_cast<double>(n))) {
        throw DegenerateFitError("log-linear fit needs at least two distinct distances");
    }

    LogLinFit fit;
    fit.sample_count = n;
    fit.n = sxy.value() / sxx.value();
    fit.r0 = y_mean - fit.n * x_mean;

    stats::CompensatedSum sse;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.n * xs[i] + fit.r0);
        sse.add(r * r);
    }
    const double dof = static_cast<double>(n - 2);
    const double s2 = sse.value() / dof;
    const double t = t_critical(dof);
    fit.ci_n = t * std::sqrt(s2 / sxx.value());
    fit.ci_r0 = t * std::sqrt(s2 * (1.0 / static_cast<double>(n) + x_mean * x_mean / sxx.value()));
    fit.rmse = std::sqrt(sse.value() / static_cast<double>(n));
    return fit;
}

LogLinFit fit_fixed_slope(std::span<const GainSample> samples, double n_fixed) {
    const std::size_t n = samples.size();
    if (n < 2) throw InsufficientDataError("fixed-slope fit needs at least two samples");

    std::vector<double> offsets;
    offsets.reserve(n);
    for (const auto& s : samples) offsets.push_back(s.gain_db - n_fixed * regressor(s.distance));

    LogLinFit fit;
    fit.sample_count = n;
    fit.n = n_fixed;
    fit.r0 = stats::mean(offsets);

    stats::CompensatedSum sse;
    for (double o : offsets) sse.add((o - fit.r0) * (o - fit.r0));
    const double dof = static_cast<double>(n - 1);
    fit.ci_n = 0.0;
    fit.ci_r0 = t_critical(dof) * std::sqrt(sse.value() / dof / static_cast<double>(n));
    fit.rmse = std::sqrt(sse.value() / static_cast<double>(n));
    return fit;
}

double predict(const LogLinFit& fit, double distance_m) {
    if (!(distance_m > 0.0)) throw DomainError("prediction distance must be positive");
    return 10.0 * fit.n * std::log10(distance_m) + fit.r0;
}

}  // namespace portcanyon::pathloss
