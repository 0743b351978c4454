#include "portcanyon/synth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "portcanyon/errors.hpp"

namespace portcanyon::synth {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr std::array<double, 4> line_y = {3.5, 5.5, 7.5, 9.5};

// Grid positions are enumerated in integer decimetres so that points shared
// by two grids compare equal bit for bit.
Position at_dm(int x_dm, double y) { return {static_cast<double>(x_dm) / 10.0, y}; }

template <typename Job>
void run_parallel(std::size_t count, unsigned threads, Job&& job) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
    }
}

}  // namespace

std::vector<Transmitter> standard_transmitters() {
    std::vector<Transmitter> out;
    for (int d = 63; d <= 113; d += 10) {
        out.push_back({"TX1_" + std::to_string(d), 18.8, static_cast<double>(d), 23.0});
    }
    out.push_back({"TX2", 18.85, 60.5, 22.0});
    return out;
}

angular::TxPositions tx_positions(std::span<const Transmitter> transmitters) {
    angular::TxPositions out;
    for (const auto& t : transmitters) out[t.id] = {t.x, t.y};
    return out;
}

const Transmitter& find_transmitter(std::span<const Transmitter> transmitters, const std::string& id) {
    const auto it = std::find_if(transmitters.begin(), transmitters.end(),
                                 [&](const Transmitter& t) { return t.id == id; });
    if (it == transmitters.end()) throw LookupError("unknown transmitter " + id);
    return *it;
}

CampaignLayout build_layout(Stacking kind) {
    CampaignLayout layout;
    layout.stacking = kind;
    const auto all_tx = standard_transmitters();
    int coarse_step_dm = 0;
    if (kind == Stacking::uniform) {
        layout.section_heights = {{{7.5, 7.5, 7.5, 7.5, 7.5, 5.0}, {7.5, 7.5, 7.5, 7.5, 7.5, 5.0}}};
        for (const auto& t : all_tx) layout.transmitters.push_back(t);
        layout.dense_tx = "TX1_63";
        coarse_step_dm = 40;
    } else {
        layout.section_heights = {{{10.0, 7.5, 5.0, 5.0, 7.5, 5.0}, {5.0, 5.0, 5.0, 7.5, 7.5, 7.5}}};
        for (const char* id : {"TX1_63", "TX1_83", "TX1_103", "TX2"}) {
            layout.transmitters.push_back(find_transmitter(all_tx, id));
        }
        layout.dense_tx = "TX2";
        coarse_step_dm = 20;
    }

    const int length_dm = static_cast<int>(std::lround(layout.length * 10.0));
    for (double y : line_y) {
        for (int x = 10; x <= length_dm; x += coarse_step_dm) layout.coarse_points.push_back(at_dm(x, y));
    }
    for (double y : line_y) {
        for (int x = 125; x <= 153; x += 2) layout.dense_points.push_back(at_dm(x, y));
    }
    for (double y : line_y) {
        for (int x = 135; x <= 149; ++x) {
            if ((x - 125) % 2 != 0) layout.dense_fine_points.push_back(at_dm(x, y));
        }
    }
    validate(layout);
    return layout;
}

void validate(const CampaignLayout& layout) {
    if (!(layout.length > 0.0 && layout.width > 0.0 && layout.wall_thickness > 0.0)) {
        throw ConfigError("canyon dimensions must be positive");
    }
    if (std::abs(layout.length - section_length * sections_per_row) > 1e-9) {
        throw ConfigError("canyon length must cover exactly six sections");
    }
    for (const auto& row : layout.section_heights) {
        for (double h : row) {
            if (!(h > 0.0)) throw ConfigError("section heights must be positive");
        }
    }
    auto inside = [&](const Position& p) {
        return p.x >= 0.0 && p.x <= layout.length && p.y > layout.interior_y_min() &&
               p.y < layout.interior_y_max();
    };
    for (const auto* grid : {&layout.coarse_points, &layout.dense_points, &layout.dense_fine_points}) {
        for (const auto& p : *grid) {
            if (!inside(p)) throw ConfigError("RX point outside the canyon interior");
        }
    }
    double tallest = 0.0;
    for (const auto& row : layout.section_heights) tallest = std::max(tallest, *std::max_element(row.begin(), row.end()));
    for (const auto& t : layout.transmitters) {
        const bool beside = t.y < 0.0 || t.y > layout.interior_y_max() + layout.wall_thickness;
        if (!beside || !(t.z > tallest)) throw ConfigError("transmitter " + t.id + " is not outside and above the canyon");
    }
    find_transmitter(layout.transmitters, layout.dense_tx);
}

double wall_height(const CampaignLayout& layout, int row, double x) {
    const auto section = static_cast<std::size_t>(
        std::clamp(std::floor(x / section_length), 0.0, static_cast<double>(sections_per_row - 1)));
    return layout.section_heights.at(static_cast<std::size_t>(row))[section];
}

HornPattern::HornPattern(double hpbw_deg) : hpbw_rad_(hpbw_deg * std::numbers::pi / 180.0) {
    if (!(hpbw_deg > 0.0 && hpbw_deg < 360.0)) throw ConfigError("HPBW must be in (0, 360) degrees");
}

double HornPattern::gain(double offset) const noexcept {
    double a = wrap_two_pi(offset + std::numbers::pi) - std::numbers::pi;
    const double u = a / hpbw_rad_;
    return std::exp(-4.0 * std::numbers::ln2 * u * u);
}

std::vector<double> HornPattern::kernel(std::size_t bins) const {
    if (bins == 0) throw DomainError("kernel needs at least one bin");
    std::vector<double> k(bins);
    const double step = two_pi / static_cast<double>(bins);
    stats::CompensatedSum total;
    for (std::size_t i = 0; i < bins; ++i) {
        k[i] = gain(static_cast<double>(i) * step);
        total.add(k[i]);
    }
    for (double& v : k) v /= total.value();
    return k;
}

std::vector<double> circular_smooth(std::span<const double> power, std::span<const double> kernel) {
    const std::size_t n = power.size();
    if (kernel.size() != n) throw ShapeError("smoothing kernel length differs from the spectrum");
    // Taps below this relative weight do not change a double result.
    const double peak = *std::max_element(kernel.begin(), kernel.end());
    std::vector<std::pair<std::size_t, double>> taps;
    for (std::size_t k = 0; k < n; ++k) {
        if (kernel[k] > peak * 1e-18) taps.emplace_back(k, kernel[k]);
    }
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (const auto& [k, w] : taps) acc += w * power[(i + n - k) % n];
        out[i] = acc;
    }
    return out;
}

void validate(const SynthConfig& cfg) {
    if (cfg.grid_size < min_scan_samples) throw ConfigError("angle grid needs at least 8 samples");
    if (cfg.fading_subbins == 0 || cfg.fading_subbins % cfg.grid_size != 0) {
        throw ConfigError("fading sub-bins must be a multiple of the angle grid size");
    }
    if (!(cfg.rx_height > 0.0)) throw ConfigError("RX height must be positive");
    if (!(cfg.acceptance_angle > 0.0 && cfg.acceptance_angle <= std::numbers::pi / 2)) {
        throw ConfigError("acceptance angle must be in (0, pi/2]");
    }
    if (!(cfg.position1.sigma >= 0.0 && cfg.position2.sigma >= 0.0)) {
        throw ConfigError("vehicle sigma must be non-negative");
    }
    HornPattern{cfg.hpbw_deg};
}

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

geometry::CanyonGeometry canyon_geometry_at(const CampaignLayout& layout, const Transmitter& tx,
                                            Position rx, const SynthConfig& cfg) {
    int row = 0;
    double edge_y = 0.0;
    if (tx.y > layout.interior_y_max()) {
        row = 1;
        edge_y = layout.interior_y_max();
    } else if (tx.y < layout.interior_y_min()) {
        row = 0;
        edge_y = layout.interior_y_min();
    } else {
        throw DomainError("transmitter " + tx.id + " is above the canyon opening (D -> 0)");
    }
    const double dy = rx.y - tx.y;
    const double t = (edge_y - tx.y) / dy;  // fraction of the TX-RX ray before the near edge
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("receiver is not inside the canyon seen from " + tx.id);
    const double ray = std::hypot(rx.x - tx.x, dy);
    const double x_cross = tx.x + t * (rx.x - tx.x);
    const double wall = wall_height(layout, row, x_cross);

    geometry::CanyonGeometry g;
    g.tx_height = tx.z - wall;
    g.width = layout.width;
    g.distance = t * ray;
    g.acceptance_angle = cfg.acceptance_angle;
    g.rx_depth = wall - cfg.rx_height;
    geometry::validate(g);
    return g;
}

double mean_gain_at(const CampaignLayout& layout, const Transmitter& tx, Position rx,
                    const SynthConfig& cfg) {
    const auto g = canyon_geometry_at(layout, tx, rx, cfg);
    return angular::to_db(geometry::received_power_approx(g)) + cfg.calibration_db;
}

double euclidean_distance(const Transmitter& tx, Position rx, double rx_height) {
    const double dx = tx.x - rx.x, dy = tx.y - rx.y, dz = tx.z - rx_height;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::vector<double> synthesize_spectrum_db(double mean_gain_db, const SynthConfig& cfg,
                                           std::span<const double> kernel, Rng& rng) {
    std::vector<double> out(cfg.grid_size, mean_gain_db);
    if (!cfg.fading) return out;

    const double mean_linear = std::pow(10.0, mean_gain_db / 10.0);
    std::exponential_distribution<double> power(1.0);
    std::vector<double> bins(cfg.fading_subbins);
    for (double& b : bins) b = power(rng) * mean_linear;
    const auto smooth = circular_smooth(bins, kernel);
    const std::size_t stride = cfg.fading_subbins / cfg.grid_size;
    for (std::size_t i = 0; i < cfg.grid_size; ++i) out[i] = 10.0 * std::log10(smooth[i * stride]);
    return out;
}

AngularScan generate_scan(const CampaignLayout& layout, const Transmitter& tx, Position rx,
                          const SynthConfig& cfg, std::uint64_t stream) {
    validate(cfg);
    const auto kernel = HornPattern(cfg.hpbw_deg).kernel(cfg.fading_subbins);
    auto rng = make_stream(cfg.seed, stream);
    AngularScan scan;
    scan.tx = tx.id;
    scan.rx = rx;
    scan.stacking = layout.stacking;
    scan.angles = uniform_grid(cfg.grid_size);
    scan.gains_db = synthesize_spectrum_db(mean_gain_at(layout, tx, rx, cfg), cfg, kernel, rng);
    return scan;
}

stats::EmpiricalCdf fullspread_gain_distribution(const SynthConfig& cfg) {
    validate(cfg);
    if (cfg.realizations == 0) throw ConfigError("full-spread distribution needs realizations");
    const auto kernel = HornPattern(cfg.hpbw_deg).kernel(cfg.fading_subbins);
    AngularScan scan;
    scan.tx = "fullspread";
    scan.angles = uniform_grid(cfg.grid_size);

    std::vector<double> gains(cfg.realizations);
    run_parallel(cfg.realizations, cfg.threads, [&](std::size_t i) {
        auto rng = make_stream(cfg.seed, i);
        AngularScan s = scan;
        s.gains_db = synthesize_spectrum_db(0.0, cfg, kernel, rng);
        gains[i] = angular::azimuth_gain(s);
    });
    return stats::EmpiricalCdf(std::move(gains));
}

Dataset generate_campaign(const CampaignLayout& layout, const SynthConfig& cfg, VehicleMode mode) {
    validate(layout);
    validate(cfg);
    const auto kernel = HornPattern(cfg.hpbw_deg).kernel(cfg.fading_subbins);
    const auto grid = uniform_grid(cfg.grid_size);

    struct Job {
        const Transmitter* tx;
        Position rx;
        bool with_vehicle;
    };
    std::vector<Job> jobs;
    for (const auto& t : layout.transmitters) {
        for (const auto& p : layout.coarse_points) jobs.push_back({&t, p, false});
    }
    const auto& dense_tx = find_transmitter(layout.transmitters, layout.dense_tx);
    std::vector<Position> dense_all = layout.dense_points;
    dense_all.insert(dense_all.end(), layout.dense_fine_points.begin(), layout.dense_fine_points.end());
    std::stable_sort(dense_all.begin(), dense_all.end(), [](const Position& a, const Position& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    for (const auto& p : dense_all) {
        const bool on_vehicle_grid =
            std::find(layout.dense_points.begin(), layout.dense_points.end(), p) != layout.dense_points.end();
        jobs.push_back({&dense_tx, p, mode == VehicleMode::on && on_vehicle_grid});
    }

    std::vector<std::vector<AngularScan>> results(jobs.size());
    run_parallel(jobs.size(), cfg.threads, [&](std::size_t i) {
        const auto& job = jobs[i];
        auto rng = make_stream(cfg.seed, i);
        AngularScan base;
        base.tx = job.tx->id;
        base.rx = job.rx;
        base.stacking = layout.stacking;
        base.angles = grid;
        base.gains_db = synthesize_spectrum_db(mean_gain_at(layout, *job.tx, job.rx, cfg), cfg, kernel, rng);
        results[i].push_back(base);
        if (!job.with_vehicle) return;
        for (const auto& [state, effect] : {std::pair{VehicleState::position1, cfg.position1},
                                            std::pair{VehicleState::position2, cfg.position2}}) {
            std::normal_distribution<double> offset(0.0, 1.0);
            AngularScan v = base;
            v.vehicle_state = state;
            for (double& g : v.gains_db) g -= effect.mu + effect.sigma * offset(rng);
            results[i].push_back(std::move(v));
        }
    });

    Dataset out;
    for (auto& r : results) {
        for (auto& s : r) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace portcanyon::synth
