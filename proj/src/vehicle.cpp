#include "portcanyon/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "portcanyon/errors.hpp"

namespace portcanyon::vehicle {

std::vector<double> vehicle_delta(const AngularScan& base, const AngularScan& with_vehicle) {
    validate(base);
    validate(with_vehicle);
    if (base.vehicle_state != VehicleState::absent) {
        throw PairingError("base scan " + describe_key(base) + " has a vehicle present");
    }
    if (with_vehicle.vehicle_state == VehicleState::absent) {
        throw PairingError("scan " + describe_key(with_vehicle) + " has no vehicle");
    }
    if (base.tx != with_vehicle.tx || base.rx != with_vehicle.rx ||
        base.stacking != with_vehicle.stacking || !same_grid(base.angles, with_vehicle.angles)) {
        throw PairingError("scans " + describe_key(base) + " and " + describe_key(with_vehicle) +
                           " do not form a pair");
    }
    std::vector<double> delta(base.size());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        delta[i] = base.gains_db[i] - with_vehicle.gains_db[i];
    }
    return delta;
}

GaussianFitResult fit_gaussian(std::span<const double> samples) {
    if (samples.size() < 2) throw InsufficientDataError("Gaussian fit needs at least two samples");
    const double mu = stats::mean(samples);
    stats::CompensatedSum ss;
    for (double v : samples) ss.add((v - mu) * (v - mu));
    const double var = ss.value() / static_cast<double>(samples.size());
    return {mu, std::sqrt(std::max(var, 0.0)), samples.size()};
}

DeltaCdfReport delta_cdf_report(std::span<const double> deltas, std::size_t grid_points) {
    DeltaCdfReport report;
    report.fit = fit_gaussian(deltas);
    const stats::EmpiricalCdf ecdf(std::vector<double>(deltas.begin(), deltas.end()));
    const auto sorted = ecdf.values();
    const double n = static_cast<double>(sorted.size());

    // Kolmogorov distance: the empirical CDF jumps only at samples, so the
    // supremum is attained just before or at one of them.
    double gap = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double f = stats::normal_cdf(sorted[i], report.fit.mu, report.fit.sigma);
        const double before = static_cast<double>(i) / n;
        const double after = static_cast<double>(j) / n;
        if (report.fit.sigma > 0.0) {
            gap = std::max({gap, std::abs(f - before), std::abs(after - f)});
        } else {
            // Degenerate fit: the Gaussian is a step at mu, which has the same
            // left limit as the empirical CDF below the point.
            const double f_left = sorted[i] > report.fit.mu ? 1.0 : 0.0;
            gap = std::max({gap, std::abs(f_left - before), std::abs(after - f)});
        }
        i = j;
    }
    report.max_gap = gap;

    grid_points = std::max<std::size_t>(grid_points, 2);
    const double lo = sorted.front();
    const double hi = sorted.back();
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid_points - 1);
        report.grid.push_back(x);
        report.empirical.push_back(ecdf.evaluate(x));
        report.fitted.push_back(stats::normal_cdf(x, report.fit.mu, report.fit.sigma));
    }
    return report;
}

std::vector<std::pair<const AngularScan*, const AngularScan*>> pair_scans(
    std::span<const AngularScan> scans, VehicleState state) {
    using Key = std::tuple<std::string, double, double, int>;
    std::map<Key, const AngularScan*> bases;
    for (const auto& s : scans) {
        if (s.vehicle_state == VehicleState::absent) {
            bases[{s.tx, s.rx.x, s.rx.y, static_cast<int>(s.stacking)}] = &s;
        }
    }
    std::vector<std::pair<const AngularScan*, const AngularScan*>> pairs;
    for (const auto& s : scans) {
        if (s.vehicle_state != state || state == VehicleState::absent) continue;
        const auto it = bases.find({s.tx, s.rx.x, s.rx.y, static_cast<int>(s.stacking)});
        if (it == bases.end()) {
            throw PairingError("no vehicle-free scan matches " + describe_key(s));
        }
        pairs.emplace_back(it->second, &s);
    }
    return pairs;
}

DeltaAngleStats delta_angle_stats(const std::vector<double>& angles,
                                  std::span<const std::vector<double>> deltas, double bin_width_db) {
    if (deltas.empty()) throw InsufficientDataError("no deltas to summarize");
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& row : deltas) {
        if (row.size() != angles.size()) throw ShapeError("delta row does not match the angle grid");
        const auto [mn, mx] = std::minmax_element(row.begin(), row.end());
        lo = std::min(lo, *mn);
        hi = std::max(hi, *mx);
    }
    DeltaAngleStats out;
    out.angles = angles;
    out.bins = stats::make_histogram(lo, hi, bin_width_db);
    for (std::size_t a = 0; a < angles.size(); ++a) {
        stats::CompensatedSum acc;
        stats::Histogram h = out.bins;
        for (const auto& row : deltas) {
            acc.add(row[a]);
            stats::accumulate(h, row[a]);
        }
        out.mean_db.push_back(acc.value() / static_cast<double>(deltas.size()));
        out.counts.push_back(std::move(h.counts));
    }
    return out;
}

}  // namespace portcanyon::vehicle
