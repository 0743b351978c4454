#include "portcanyon/stats.hpp"

#include <algorithm>
#include <cmath>

#include "portcanyon/errors.hpp"

namespace portcanyon::stats {

void CompensatedSum::add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
        compensation_ += (sum_ - t) + value;
    } else {
        compensation_ += (value - t) + sum_;
    }
    sum_ = t;
}

double sum(std::span<const double> values) noexcept {
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

double mean(std::span<const double> values) {
    if (values.empty()) throw InsufficientDataError("mean of an empty sample");
    return sum(values) / static_cast<double>(values.size());
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_cdf(double x, double mu, double sigma) noexcept {
    if (sigma <= 0.0) return x >= mu ? 1.0 : 0.0;
    return normal_cdf((x - mu) / sigma);
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::evaluate(double x) const noexcept {
    if (sorted_.empty()) return 0.0;
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
    if (sorted_.empty()) throw InsufficientDataError("quantile of an empty CDF");
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("quantile level must be in (0, 1]");
    const double n = static_cast<double>(sorted_.size());
    auto k = static_cast<std::size_t>(std::ceil(p * n - 1e-12));
    k = std::clamp<std::size_t>(k, 1, sorted_.size());
    return sorted_[k - 1];
}

std::vector<EmpiricalCdf::Point> EmpiricalCdf::points() const {
    std::vector<Point> out;
    out.reserve(sorted_.size());
    const double n = static_cast<double>(sorted_.size());
    for (std::size_t i = 0; i < sorted_.size(); ++i) {
        out.push_back({sorted_[i], static_cast<double>(i + 1) / n});
    }
    return out;
}

double max_horizontal_gap(const EmpiricalCdf& a, const EmpiricalCdf& b, double p_low,
                          double p_high, std::size_t steps) {
    if (!(p_low > 0.0 && p_low <= p_high && p_high <= 1.0) || steps == 0) {
        throw DomainError("invalid probability band for CDF gap");
    }
    double gap = 0.0;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double p = p_low + (p_high - p_low) * static_cast<double>(i) / static_cast<double>(steps);
        gap = std::max(gap, std::abs(a.quantile(p) - b.quantile(p)));
    }
    return gap;
}

std::size_t Histogram::total() const noexcept {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

Histogram make_histogram(double min_value, double max_value, double width) {
    if (!(width > 0.0) || !std::isfinite(width)) throw DomainError("histogram bin width must be positive");
    if (!(min_value <= max_value)) throw DomainError("histogram range is empty");
    Histogram h;
    h.width = width;
    h.lower = std::floor(min_value / width) * width;
    const auto bins = static_cast<std::size_t>(std::floor((max_value - h.lower) / width)) + 1;
    h.counts.assign(bins, 0);
    return h;
}

void accumulate(Histogram& hist, double value) noexcept {
    if (hist.counts.empty()) return;
    const double pos = std::floor((value - hist.lower) / hist.width);
    std::size_t k = 0;
    if (pos > 0.0) k = std::min(static_cast<std::size_t>(pos), hist.counts.size() - 1);
    ++hist.counts[k];
}

}  // namespace portcanyon::stats
