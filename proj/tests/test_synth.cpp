#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "portcanyon/errors.hpp"
#include "portcanyon/synth.hpp"

using namespace portcanyon;
using namespace portcanyon::synth;

namespace {

SynthConfig small_config() {
    SynthConfig c;
    c.grid_size = 36;
    c.fading_subbins = 360;
    c.realizations = 400;
    return c;
}

std::size_t count_state(const Dataset& d, VehicleState s) {
    return static_cast<std::size_t>(
        std::count_if(d.begin(), d.end(), [&](const AngularScan& a) { return a.vehicle_state == s; }));
}

}  // namespace

TEST_CASE("transmitters and layouts") {
    const auto tx = standard_transmitters();
    REQUIRE(tx.size() == 7);
    CHECK(tx.front().id == "TX1_63");
    CHECK(tx[5].id == "TX1_113");
    CHECK(tx.back().id == "TX2");
    CHECK_THROWS_AS(find_transmitter(tx, "TX3"), LookupError);
    CHECK(tx_positions(tx).at("TX2").x == 18.85);

    const auto u = build_layout(Stacking::uniform);
    CHECK(u.transmitters.size() == 7);
    CHECK(u.coarse_points.size() == 36);
    CHECK(u.dense_points.size() == 60);
    CHECK(u.dense_fine_points.size() == 28);
    CHECK(u.dense_tx == "TX1_63");
    CHECK(wall_height(u, 0, 3.0) == 7.5);
    CHECK(wall_height(u, 1, 35.9) == 5.0);

    const auto nu = build_layout(Stacking::nonuniform);
    CHECK(nu.transmitters.size() == 4);
    CHECK(nu.coarse_points.size() == 72);
    CHECK(nu.dense_tx == "TX2");
    CHECK(wall_height(nu, 0, 0.0) == 10.0);
    CHECK(wall_height(nu, 1, 20.0) == 7.5);
    CHECK(wall_height(nu, 0, 36.0) == 5.0);

    // Dense and fine grids interleave at 0.1 m without overlap.
    for (const auto& p : u.dense_fine_points) {
        CHECK(std::find(u.dense_points.begin(), u.dense_points.end(), p) == u.dense_points.end());
    }

    auto broken = u;
    broken.coarse_points.push_back({5.0, 1.0});
    CHECK_THROWS_AS(validate(broken), ConfigError);
    broken = u;
    broken.transmitters[0].z = 6.0;
    CHECK_THROWS_AS(validate(broken), ConfigError);
}

TEST_CASE("horn pattern") {
    const HornPattern horn(10.0);
    const double half = 5.0 * std::numbers::pi / 180.0;
    CHECK(horn.gain(0.0) == 1.0);
    CHECK(horn.gain(half) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(horn.gain(-half) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(horn.gain(2.0 * std::numbers::pi - half) == doctest::Approx(0.5).epsilon(1e-12));

    const auto k = horn.kernel(360);
    double total = 0.0;
    for (double v : k) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 1; i < 180; ++i) CHECK(k[i] == doctest::Approx(k[360 - i]).epsilon(1e-12));
    CHECK_THROWS_AS(HornPattern(0.0), ConfigError);
}

TEST_CASE("circular smoothing matches direct convolution") {
    const std::size_t n = 24;
    std::vector<double> power(n), kernel(n);
    for (std::size_t i = 0; i < n; ++i) {
        power[i] = 1.0 + static_cast<double>((i * 7) % 5);
        kernel[i] = (i < 3 || i > n - 3) ? 1.0 / 5.0 : 0.0;
    }
    const auto out = circular_smooth(power, kernel);
    double in_sum = 0.0, out_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ref = 0.0;
        for (std::size_t j = 0; j < n; ++j) ref += kernel[j] * power[(i + n - j) % n];
        CHECK(out[i] == doctest::Approx(ref).epsilon(1e-14));
        in_sum += power[i];
        out_sum += out[i];
    }
    CHECK(out_sum == doctest::Approx(in_sum).epsilon(1e-14));

    std::vector<double> impulse(n, 0.0);
    impulse[3] = 1.0;
    const auto shifted = circular_smooth(impulse, kernel);
    for (std::size_t i = 0; i < n; ++i) CHECK(shifted[i] == doctest::Approx(kernel[(i + n - 3) % n]));
    CHECK_THROWS_AS(circular_smooth(impulse, std::vector<double>(5, 0.2)), ShapeError);
}

TEST_CASE("child streams are reproducible and distinct") {
    auto a = make_stream(7, 3), b = make_stream(7, 3), c = make_stream(7, 4), d = make_stream(8, 3);
    const auto va = a();
    CHECK(va == b());
    CHECK(va != c());
    CHECK(va != d());
}

TEST_CASE("canyon geometry at a receiver") {
    const auto layout = build_layout(Stacking::uniform);
    const auto cfg = small_config();
    const auto& tx = find_transmitter(layout.transmitters, "TX1_63");
    const auto g = canyon_geometry_at(layout, tx, {18.8, 3.5}, cfg);
    // Straight ray across the far wall (y = 10.5) in section 4 (7.5 m).
    CHECK(g.distance == doctest::Approx(52.5));
    CHECK(g.tx_height == doctest::Approx(15.5));
    CHECK(g.rx_depth == doctest::Approx(6.0));
    CHECK(g.width == 8.0);

    // Oblique ray: distance along the ray to the near edge.
    const auto o = canyon_geometry_at(layout, tx, {2.8, 3.5}, cfg);
    const double t = (10.5 - 63.0) / (3.5 - 63.0);
    CHECK(o.distance == doctest::Approx(t * std::hypot(16.0, 59.5)).epsilon(1e-13));

    const double expected = 10.0 * std::log10(0.1 * 15.5 * 8.0 / std::pow(52.5, 4)) - 36.0;
    CHECK(mean_gain_at(layout, tx, {18.8, 3.5}, cfg) == doctest::Approx(expected).epsilon(1e-13));

    const Transmitter overhead{"X", 18.0, 6.0, 30.0};
    CHECK_THROWS_AS(canyon_geometry_at(layout, overhead, {18.8, 3.5}, cfg), DomainError);
}

TEST_CASE("mean gain falls with distance") {
    const auto layout = build_layout(Stacking::uniform);
    const auto cfg = small_config();
    double previous = INFINITY;
    for (const auto& t : layout.transmitters) {
        if (t.id == "TX2") continue;
        const double g = mean_gain_at(layout, t, {18.8, 5.5}, cfg);
        CHECK(g < previous);
        previous = g;
    }
}

TEST_CASE("scan generation") {
    const auto layout = build_layout(Stacking::nonuniform);
    auto cfg = small_config();
    const auto& tx = find_transmitter(layout.transmitters, "TX2");
    const Position rx{14.0, 5.5};

    SUBCASE("without fading the spectrum is flat at the mean") {
        cfg.fading = false;
        const auto s = generate_scan(layout, tx, rx, cfg);
        CHECK(s.size() == 36);
        for (double g : s.gains_db) CHECK(g == mean_gain_at(layout, tx, rx, cfg));
    }
    SUBCASE("fading preserves the linear mean") {
        const double target = std::pow(10.0, mean_gain_at(layout, tx, rx, cfg) / 10.0);
        double acc = 0.0;
        const int count = 2000;
        for (int i = 0; i < count; ++i) {
            const auto s = generate_scan(layout, tx, rx, cfg, static_cast<std::uint64_t>(i));
            for (std::size_t a = 0; a < s.size(); ++a) acc += s.linear_gain(a);
        }
        acc /= count * 36.0;
        CHECK(std::abs(acc / target - 1.0) < 0.02);
    }
    SUBCASE("same stream, same scan") {
        CHECK(generate_scan(layout, tx, rx, cfg, 9) == generate_scan(layout, tx, rx, cfg, 9));
        CHECK_FALSE(generate_scan(layout, tx, rx, cfg, 9) == generate_scan(layout, tx, rx, cfg, 10));
    }
}

TEST_CASE("invalid synthesis settings") {
    auto cfg = small_config();
    cfg.grid_size = 4;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = small_config();
    cfg.fading_subbins = 100;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = small_config();
    cfg.position2.sigma = -1.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = small_config();
    cfg.acceptance_angle = 2.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("campaign generation") {
    const auto layout = build_layout(Stacking::uniform);
    auto cfg = small_config();
    const auto off = generate_campaign(layout, cfg, VehicleMode::off);
    CHECK(off.size() == 7 * 36 + 60 + 28);
    CHECK(count_state(off, VehicleState::absent) == off.size());

    const auto on = generate_campaign(layout, cfg, VehicleMode::on);
    CHECK(on.size() == off.size() + 120);
    CHECK(count_state(on, VehicleState::position1) == 60);
    CHECK(count_state(on, VehicleState::position2) == 60);

    // Vehicle-free scans do not depend on whether vehicle scans are drawn.
    Dataset on_base;
    for (const auto& s : on)
        if (s.vehicle_state == VehicleState::absent) on_base.push_back(s);
    CHECK(on_base == off);

    cfg.threads = 4;
    CHECK(generate_campaign(layout, cfg, VehicleMode::on) == on);
    cfg.seed = 2;
    CHECK_FALSE(generate_campaign(layout, cfg, VehicleMode::on) == on);
}

TEST_CASE("full-spread gain distribution") {
    auto cfg = small_config();
    const auto a = fullspread_gain_distribution(cfg);
    CHECK(a.size() == cfg.realizations);
    CHECK(a.values().front() > 0.0);
    cfg.threads = 3;
    const auto b = fullspread_gain_distribution(cfg);
    CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin(), b.values().end()));
    cfg.realizations = 0;
    CHECK_THROWS_AS(fullspread_gain_distribution(cfg), ConfigError);
}
