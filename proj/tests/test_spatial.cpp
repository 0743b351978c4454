#include <doctest.h>

#include <cmath>
#include <random>

#include "portcanyon/errors.hpp"
#include "portcanyon/spatial.hpp"

using namespace portcanyon;
using namespace portcanyon::spatial;

namespace {

AngularScan point(double x, std::vector<double> gains, double y = 4.5, std::string tx = "TX2") {
    AngularScan s;
    s.tx = std::move(tx);
    s.rx = {x, y};
    s.angles = uniform_grid(gains.size());
    s.gains_db = std::move(gains);
    return s;
}

std::vector<AngularScan> line_of(const std::vector<std::vector<double>>& rows, double x0 = 13.6,
                                 double dx = 0.2, double y = 4.5) {
    std::vector<AngularScan> out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back(point(x0 + dx * static_cast<double>(i), rows[i], y));
    return out;
}

// Brute-force reference: explicit double loop over pairs.
std::vector<double> reference_r(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m += x;
    m /= static_cast<double>(v.size());
    std::vector<double> r(v.size(), 0.0);
    for (std::size_t k = 0; k < v.size(); ++k)
        for (std::size_t j = 0; j + k < v.size(); ++j) r[k] += (v[j] - m) * (v[j + k] - m);
    const double r0 = r[0];
    for (double& x : r) x /= r0;
    return r;
}

}  // namespace

TEST_CASE("autocorrelation of an alternating sequence") {
    const std::size_t n = 10;
    std::vector<double> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(i % 2 == 0 ? 1.0 : -1.0);
    const auto ac = autocorrelation(v);
    REQUIRE(ac.r.size() == n);
    CHECK_FALSE(ac.degenerate);
    for (std::size_t k = 0; k < n; ++k) {
        const double expected = (k % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(n - k) / static_cast<double>(n);
        CHECK(ac.r[k] == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("autocorrelation matches a brute-force reference") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> noise(-80.0, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> v(3 + trial % 20);
        for (double& x : v) x = noise(rng);
        const auto ac = autocorrelation(v);
        const auto ref = reference_r(v);
        CHECK(ac.r[0] == 1.0);
        for (std::size_t k = 0; k < v.size(); ++k) {
            CHECK(ac.r[k] == doctest::Approx(ref[k]).epsilon(1e-10));
            CHECK(std::abs(ac.r[k]) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("autocorrelation ignores a constant offset") {
    const std::vector<double> a{-70.1, -72.4, -69.0, -75.3, -71.2};
    std::vector<double> b = a;
    for (double& x : b) x += 40.0;
    const auto ra = autocorrelation(a).r;
    const auto rb = autocorrelation(b).r;
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(rb[k] == doctest::Approx(ra[k]).epsilon(1e-12));
}

TEST_CASE("zero-variance sequence is flagged") {
    const std::vector<double> flat(6, -80.0);
    const auto ac = autocorrelation(flat);
    CHECK(ac.degenerate);
    CHECK(ac.r[0] == 1.0);
    for (std::size_t k = 1; k < flat.size(); ++k) CHECK(ac.r[k] == 0.0);
    CHECK_THROWS_AS(autocorrelation(std::vector<double>{}), InsufficientDataError);
}

TEST_CASE("dense line construction") {
    const std::vector<double> g(8, -80.0);
    SUBCASE("sorted by x") {
        auto scans = line_of({g, g, g, g});
        std::swap(scans[0], scans[3]);
        const DenseLine line(scans);
        CHECK(line.size() == 4);
        CHECK(line.positions().front() == doctest::Approx(13.6));
        CHECK(line.spacing() == doctest::Approx(0.2));
        CHECK(line.y() == 4.5);
    }
    SUBCASE("non-uniform spacing") {
        auto scans = line_of({g, g, g});
        scans[2].rx.x += 0.1;
        CHECK_THROWS_AS(DenseLine{scans}, GridError);
    }
    SUBCASE("mixed transmitter") {
        auto scans = line_of({g, g, g});
        scans[1].tx = "TX1_63";
        CHECK_THROWS_AS(DenseLine{scans}, ShapeError);
    }
    SUBCASE("mixed grid") {
        auto scans = line_of({g, g});
        scans[1] = point(scans[1].rx.x, std::vector<double>(16, -80.0));
        CHECK_THROWS_AS(DenseLine{scans}, ShapeError);
    }
    SUBCASE("single position") {
        const auto scans = line_of({g});
        CHECK_THROWS_AS(DenseLine{scans}, InsufficientDataError);
    }
}

TEST_CASE("line mean, zero-mean sequence and angle lookup") {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 5; ++i) {
        std::vector<double> g(8, -90.0);
        g[2] = -60.0 - i;
        rows.push_back(g);
    }
    const auto scans = line_of(rows);
    const DenseLine line(scans);
    const double phi = line.angles()[2];
    CHECK(line.angle_index(phi) == 2);
    CHECK(line_mean(line, phi) == doctest::Approx(-62.0));
    const auto z = zero_mean(line, phi);
    CHECK(z.front() == doctest::Approx(2.0));
    CHECK(z.back() == doctest::Approx(-2.0));
    CHECK_THROWS_AS(line.angle_index(phi + 0.1), LookupError);
}

TEST_CASE("averaged correlation and grouping") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> noise(-80.0, 5.0);
    std::vector<AngularScan> scans;
    for (double y : {3.5, 5.5}) {
        for (int i = 0; i < 15; ++i) {
            std::vector<double> g(12);
            for (double& x : g) x = noise(rng);
            scans.push_back(point(12.5 + 0.2 * i, g, y));
        }
    }
    const auto lines = group_lines(scans);
    REQUIRE(lines.size() == 2);
    for (const auto& l : lines) {
        CHECK(l.size() == 8);  // 13.5 .. 14.9
        CHECK(l.positions().front() == doctest::Approx(13.5));
    }
    const auto curve = averaged_correlation(lines);
    CHECK(curve.line_count == 2);
    CHECK(curve.r[0] == doctest::Approx(1.0));
    CHECK(curve.lag_m[3] == doctest::Approx(0.6));

    // Mean of the per-(line, angle) curves.
    double expected = 0.0;
    for (const auto& l : lines)
        for (double phi : l.angles()) expected += autocorrelation(l, phi).r[1];
    expected /= 24.0;
    CHECK(curve.r[1] == doctest::Approx(expected).epsilon(1e-12));
}
