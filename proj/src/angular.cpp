#include "portcanyon/angular.hpp"

#include <algorithm>
#include <cmath>

#include "portcanyon/errors.hpp"

namespace portcanyon::angular {

double to_db(double linear_gain) {
    if (!(linear_gain > 0.0)) throw DomainError("dB conversion of a non-positive gain");
    return 10.0 * std::log10(linear_gain);
}

double circular_mean_gain(const AngularScan& scan) {
    validate(scan);
    // Rectangle rule on a periodic uniform grid: the plain sample mean.
    stats::CompensatedSum acc;
    for (std::size_t i = 0; i < scan.size(); ++i) acc.add(scan.linear_gain(i));
    return to_db(acc.value() / static_cast<double>(scan.size()));
}

std::vector<double> normalized_spectrum(const AngularScan& scan) {
    const double ref = circular_mean_gain(scan);
    std::vector<double> out(scan.gains_db.size());
    std::transform(scan.gains_db.begin(), scan.gains_db.end(), out.begin(),
                   [ref](double g) { return g - ref; });
    return out;
}

double azimuth_gain(const AngularScan& scan) {
    const auto spectrum = normalized_spectrum(scan);
    return *std::max_element(spectrum.begin(), spectrum.end());
}

double tx_bearing(Position tx, Position rx) {
    if (tx == rx) throw DomainError("TX bearing undefined for coincident positions");
    return wrap_two_pi(std::atan2(rx.y - tx.y, tx.x - rx.x));
}

AngularSpectrumStats ensemble_stats(std::span<const AngularScan> scans, double bin_width_db) {
    if (scans.empty()) throw InsufficientDataError("ensemble statistics need at least one scan");
    for (const auto& s : scans) {
        validate(s);
        if (!same_grid(s.angles, scans.front().angles)) {
            throw ShapeError("scan " + describe_key(s) + " does not share the ensemble angle grid");
        }
    }

    const std::size_t n_angles = scans.front().size();
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : scans) {
        const auto [mn, mx] = std::minmax_element(s.gains_db.begin(), s.gains_db.end());
        lo = std::min(lo, *mn);
        hi = std::max(hi, *mx);
    }

    AngularSpectrumStats out;
    out.angles = scans.front().angles;
    out.scan_count = scans.size();
    out.bins = stats::make_histogram(lo, hi, bin_width_db);
    out.mean_db.resize(n_angles);
    out.counts.assign(n_angles, std::vector<std::size_t>(out.bins.counts.size(), 0));

    for (std::size_t a = 0; a < n_angles; ++a) {
        stats::CompensatedSum acc;
        stats::Histogram h = out.bins;
        for (const auto& s : scans) {
            acc.add(s.linear_gain(a));
            stats::accumulate(h, s.gains_db[a]);
        }
        out.mean_db[a] = to_db(acc.value() / static_cast<double>(scans.size()));
        out.counts[a] = std::move(h.counts);
    }
    return out;
}

GainCdfs gain_cdfs(std::span<const AngularScan> scans, const TxPositions& tx_positions) {
    if (scans.empty()) throw InsufficientDataError("gain CDFs need at least one scan");
    std::vector<double> pooled;
    std::vector<double> toward_tx;
    pooled.reserve(scans.size() * scans.front().size());
    toward_tx.reserve(scans.size());

    for (const auto& s : scans) {
        const auto it = tx_positions.find(s.tx);
        if (it == tx_positions.end()) throw LookupError("no position known for transmitter " + s.tx);
        const auto spectrum = normalized_spectrum(s);
        pooled.insert(pooled.end(), spectrum.begin(), spectrum.end());
        const auto k = nearest_grid_index(s.angles, tx_bearing(it->second, s.rx));
        toward_tx.push_back(spectrum[k]);
    }
    return {stats::EmpiricalCdf(std::move(pooled)), stats::EmpiricalCdf(std::move(toward_tx))};
}

}  // namespace portcanyon::angular
