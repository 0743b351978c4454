#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace portcanyon::stats {

/// Neumaier-compensated accumulator. Results agree to ~1e-15 relative
/// regardless of summation order, which keeps pooled reductions stable
/// when inputs are partitioned differently.
class CompensatedSum {
public:
    void add(double value) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

double sum(std::span<const double> values) noexcept;

/// Arithmetic mean; throws InsufficientDataError on empty input.
double mean(std::span<const double> values);

/// Standard normal CDF.
double normal_cdf(double x) noexcept;

/// Gaussian CDF with the given location and scale. A zero scale yields a step at `mu`.
double normal_cdf(double x, double mu, double sigma) noexcept;

/// Empirical CDF: sorted samples with P(X <= value_i) = (i + 1) / N.
class EmpiricalCdf {
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    std::size_t size() const noexcept { return sorted_.size(); }
    bool empty() const noexcept { return sorted_.empty(); }
    std::span<const double> values() const noexcept { return sorted_; }

    /// P(X <= x).
    double evaluate(double x) const noexcept;

    /// Left-continuous inverse: smallest sample v with F(v) >= p, p in (0, 1].
    double quantile(double p) const;

    double median() const { return quantile(0.5); }

    /// (value, probability) pairs, one per sample.
    struct Point {
        double value;
        double probability;
    };
    std::vector<Point> points() const;

private:
    std::vector<double> sorted_;
};

/// Largest quantile difference |Qa(p) - Qb(p)| over p in [p_low, p_high],
/// evaluated on a uniform probability grid of `steps` + 1 levels. This is the
/// horizontal distance between two CDF curves drawn on a common plot.
double max_horizontal_gap(const EmpiricalCdf& a, const EmpiricalCdf& b,
                          double p_low = 0.01, double p_high = 0.99, std::size_t steps = 980);

/// Fixed-width histogram. Bin k covers [lower + k*width, lower + (k+1)*width).
struct Histogram {
    double lower = 0.0;
    double width = 1.0;
    std::vector<std::size_t> counts;

    std::size_t total() const noexcept;
    double edge(std::size_t k) const noexcept { return lower + static_cast<double>(k) * width; }
};

/// Bin layout aligned to integer multiples of `width` and wide enough for
/// every value in [min_value, max_value].
Histogram make_histogram(double min_value, double max_value, double width);

/// Add `value` to the bin containing it; values outside the layout clamp to the end bins.
void accumulate(Histogram& hist, double value) noexcept;

}  // namespace portcanyon::stats
