#include "portcanyon/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "portcanyon/errors.hpp"
#include "portcanyon/stats.hpp"

namespace portcanyon::spatial {

namespace {
constexpr double position_tolerance = 1e-6;  // m
}

DenseLine::DenseLine(std::span<const AngularScan> scans) {
    if (scans.size() < 2) throw InsufficientDataError("a dense line needs at least two positions");
    std::vector<const AngularScan*> sorted;
    sorted.reserve(scans.size());
    for (const auto& s : scans) {
        validate(s);
        const auto& first = scans.front();
        if (s.tx != first.tx || s.rx.y != first.rx.y || !same_grid(s.angles, first.angles)) {
            throw ShapeError("scan " + describe_key(s) + " does not belong to the dense line of " +
                             describe_key(first));
        }
        sorted.push_back(&s);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const AngularScan* a, const AngularScan* b) { return a->rx.x < b->rx.x; });

    spacing_ = sorted[1]->rx.x - sorted[0]->rx.x;
    if (!(spacing_ > position_tolerance)) throw GridError("dense line has repeated X positions");
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double step = sorted[i]->rx.x - sorted[i - 1]->rx.x;
        if (std::abs(step - spacing_) > position_tolerance) {
            throw GridError("dense line at y=" + std::to_string(sorted[0]->rx.y) +
                            " has non-uniform X spacing");
        }
    }

    y_ = sorted[0]->rx.y;
    angles_ = sorted[0]->angles;
    for (const auto* s : sorted) {
        positions_.push_back(s->rx.x);
        gains_db_.push_back(s->gains_db);
    }
}

std::vector<double> DenseLine::column(std::size_t k) const {
    std::vector<double> out;
    out.reserve(gains_db_.size());
    for (const auto& row : gains_db_) out.push_back(row.at(k));
    return out;
}

std::size_t DenseLine::angle_index(double phi) const {
    const auto k = nearest_grid_index(angles_, phi);
    double diff = std::abs(wrap_two_pi(phi) - wrap_two_pi(angles_[k]));
    diff = std::min(diff, 2.0 * std::numbers::pi - diff);
    if (diff > grid_tolerance_rad) throw LookupError("angle is not on the dense line's grid");
    return k;
}

double line_mean(const DenseLine& line, double phi) {
    const auto col = line.column(line.angle_index(phi));
    return stats::mean(col);
}

std::vector<double> zero_mean(const DenseLine& line, double phi) {
    auto col = line.column(line.angle_index(phi));
    const double m = stats::mean(col);
    for (double& v : col) v -= m;
    return col;
}

Autocorrelation autocorrelation(std::span<const double> sequence) {
    const std::size_t n = sequence.size();
    if (n == 0) throw InsufficientDataError("autocorrelation of an empty sequence");
    const double m = stats::mean(sequence);
    std::vector<double> v(sequence.begin(), sequence.end());
    for (double& x : v) x -= m;

    Autocorrelation out;
    out.r.assign(n, 0.0);
    std::vector<double> raw(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        stats::CompensatedSum acc;
        for (std::size_t j = 0; j + k < n; ++j) acc.add(v[j] * v[j + k]);
        raw[k] = acc.value();
    }
    // Relative zero-variance test: the residual after mean removal is pure rounding noise.
    double scale = 0.0;
    for (double x : sequence) scale = std::max(scale, std::abs(x));
    const double noise = 1e-12 * std::max(scale, 1.0);
    if (raw[0] <= static_cast<double>(n) * noise * noise) {
        out.r[0] = 1.0;
        out.degenerate = true;
        return out;
    }
    for (std::size_t k = 0; k < n; ++k) out.r[k] = raw[k] / raw[0];
    out.r[0] = 1.0;
    return out;
}

Autocorrelation autocorrelation(const DenseLine& line, double phi) {
    const auto col = line.column(line.angle_index(phi));
    return autocorrelation(col);
}

CorrelationCurve averaged_correlation(std::span<const DenseLine> lines) {
    if (lines.empty()) throw InsufficientDataError("no dense lines to average");
    const auto& first = lines.front();
    for (const auto& l : lines) {
        if (l.size() != first.size() || std::abs(l.spacing() - first.spacing()) > position_tolerance ||
            !same_grid(l.angles(), first.angles())) {
            throw ShapeError("dense lines differ in length, spacing or angle grid");
        }
    }

    const std::size_t lags = first.size();
    std::vector<stats::CompensatedSum> acc(lags);
    CorrelationCurve out;
    out.line_count = lines.size();
    for (const auto& l : lines) {
        for (std::size_t k = 0; k < l.angles().size(); ++k) {
            const auto col = l.column(k);
            const auto ac = autocorrelation(col);
            if (ac.degenerate) ++out.degenerate_count;
            for (std::size_t lag = 0; lag < lags; ++lag) acc[lag].add(ac.r[lag]);
        }
    }
    const double terms = static_cast<double>(lines.size() * first.angles().size());
    for (std::size_t lag = 0; lag < lags; ++lag) {
        out.lag_m.push_back(static_cast<double>(lag) * first.spacing());
        out.r.push_back(acc[lag].value() / terms);
    }
    return out;
}

std::vector<DenseLine> group_lines(std::span<const AngularScan> scans, double x_min, double x_max) {
    using Key = std::tuple<std::string, int, int, double>;
    std::map<Key, std::vector<AngularScan>> groups;
    for (const auto& s : scans) {
        if (s.rx.x < x_min - position_tolerance || s.rx.x > x_max + position_tolerance) continue;
        groups[{s.tx, static_cast<int>(s.stacking), static_cast<int>(s.vehicle_state), s.rx.y}]
            .push_back(s);
    }
    std::vector<DenseLine> lines;
    for (const auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        lines.emplace_back(members);
    }
    return lines;
}

}  // namespace portcanyon::spatial
