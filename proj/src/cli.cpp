#include "portcanyon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "portcanyon/angular.hpp"
#include "portcanyon/errors.hpp"
#include "portcanyon/geometry.hpp"
#include "portcanyon/io.hpp"
#include "portcanyon/linkbudget.hpp"
#include "portcanyon/spatial.hpp"
#include "portcanyon/synth.hpp"
#include "portcanyon/vehicle.hpp"

namespace portcanyon::cli {

namespace fs = std::filesystem;
using io::format_number;

namespace {

constexpr double rad_to_deg = 180.0 / std::numbers::pi;

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

struct Context {
    config::ToolConfig cfg;
    fs::path out_dir = ".";
    std::string input_hash = "-";
    std::ostream* out = nullptr;

    std::string provenance() const { return io::provenance_line(cfg.synth.seed, input_hash) + "\n"; }
    std::string header(std::string_view columns) const { return provenance() + std::string(columns) + "\n"; }

    void emit(const std::string& name, const std::string& body) const {
        fs::create_directories(out_dir);
        io::write_file_atomic(out_dir / name, body);
        *out << "wrote " << (out_dir / name).string() << "\n";
    }
};

Dataset load_dataset(Context& ctx, const std::string& path) {
    const std::string text = io::read_file(path);
    ctx.input_hash = io::content_hash(text);
    std::istringstream in(text);
    return io::parse_measurements(in);
}

std::vector<AngularScan> vehicle_free(const Dataset& data) {
    std::vector<AngularScan> out;
    for (const auto& s : data) {
        if (s.vehicle_state == VehicleState::absent) out.push_back(s);
    }
    return out;
}

using GroupKey = std::pair<std::string, Stacking>;

std::map<GroupKey, std::vector<AngularScan>> by_tx(std::span<const AngularScan> scans) {
    std::map<GroupKey, std::vector<AngularScan>> groups;
    for (const auto& s : scans) groups[{s.tx, s.stacking}].push_back(s);
    return groups;
}

std::string group_prefix(const GroupKey& key) {
    return key.first + "," + std::string(to_token(key.second)) + ",";
}

// ---- angular -------------------------------------------------------------

void run_angular(Context& ctx, const std::string& input) {
    const auto scans = vehicle_free(load_dataset(ctx, input));
    if (scans.empty()) throw InsufficientDataError("no vehicle-free scans in " + input);

    std::string mean_csv = ctx.header("tx,stacking,angle_deg,mean_db");
    std::string hist_csv = ctx.header("tx,stacking,angle_deg,bin_lower_db,bin_upper_db,count");
    for (const auto& [key, group] : by_tx(scans)) {
        const auto st = angular::ensemble_stats(group, ctx.cfg.angular_bin_width_db);
        const auto prefix = group_prefix(key);
        for (std::size_t a = 0; a < st.angles.size(); ++a) {
            const auto angle = format_number(st.angles[a] * rad_to_deg);
            mean_csv += prefix + angle + "," + format_number(st.mean_db[a]) + "\n";
            for (std::size_t b = 0; b < st.counts[a].size(); ++b) {
                hist_csv += prefix + angle + "," + format_number(st.bins.edge(b)) + "," +
                            format_number(st.bins.edge(b + 1)) + "," + std::to_string(st.counts[a][b]) + "\n";
            }
        }
    }

    const auto known = synth::standard_transmitters();
    const auto cdfs = angular::gain_cdfs(scans, synth::tx_positions(known));
    std::string cdf_csv = ctx.header("curve,value_db,probability");
    for (const auto& [name, cdf] : {std::pair{"all_directions", &cdfs.all_directions},
                                    std::pair{"tx_direction", &cdfs.tx_direction}}) {
        for (const auto& p : cdf->points()) {
            cdf_csv += std::string(name) + "," + format_number(p.value) + "," + format_number(p.probability) + "\n";
        }
    }

    std::string az_csv = ctx.header("tx,stacking,x_m,y_m,azimuth_gain_db,mean_gain_db");
    std::vector<double> az;
    for (const auto& s : scans) {
        az.push_back(angular::azimuth_gain(s));
        az_csv += group_prefix({s.tx, s.stacking}) + format_number(s.rx.x) + "," + format_number(s.rx.y) +
                  "," + format_number(az.back()) + "," + format_number(angular::circular_mean_gain(s)) + "\n";
    }
    const stats::EmpiricalCdf measured(az);
    const auto fullspread = synth::fullspread_gain_distribution(ctx.cfg.synth);
    std::string az_cdf_csv = ctx.header("curve,azimuth_gain_db,probability");
    for (const auto& [name, cdf] : {std::pair{"measured", &measured}, std::pair{"fullspread", &fullspread}}) {
        for (const auto& p : cdf->points()) {
            az_cdf_csv += std::string(name) + "," + format_number(p.value) + "," + format_number(p.probability) + "\n";
        }
    }

    ctx.emit("angular_mean.csv", mean_csv);
    ctx.emit("angular_hist.csv", hist_csv);
    ctx.emit("gain_cdfs.csv", cdf_csv);
    ctx.emit("azimuth_gain.csv", az_csv);
    ctx.emit("azimuth_gain_cdf.csv", az_cdf_csv);

    auto& o = *ctx.out;
    o << "scans: " << scans.size() << "\n";
    o << "max horizontal gap, all-directions vs TX-direction CDF (dB): "
      << fixed(stats::max_horizontal_gap(cdfs.all_directions, cdfs.tx_direction), 3) << "\n";
    o << "median azimuth gain (dB): measured " << fixed(measured.median(), 3) << ", fully spread "
      << fixed(fullspread.median(), 3) << "\n";
}

// ---- spatial -------------------------------------------------------------

void run_spatial(Context& ctx, const std::string& input) {
    const auto scans = vehicle_free(load_dataset(ctx, input));
    std::map<GroupKey, std::vector<spatial::DenseLine>> groups;
    for (const auto& [key, members] : by_tx(scans)) {
        auto lines = spatial::group_lines(members, ctx.cfg.spatial_x_min, ctx.cfg.spatial_x_max);
        if (!lines.empty()) groups[key] = std::move(lines);
    }
    if (groups.empty()) throw InsufficientDataError("no dense lines inside the spatial window");

    std::string csv = ctx.header("tx,stacking,lag_m,correlation");
    auto& o = *ctx.out;
    for (const auto& [key, group] : groups) {
        const auto curve = spatial::averaged_correlation(group);
        for (std::size_t k = 0; k < curve.r.size(); ++k) {
            csv += group_prefix(key) + format_number(curve.lag_m[k]) + "," + format_number(curve.r[k]) + "\n";
        }
        o << key.first << " (" << to_token(key.second) << "): " << curve.line_count << " lines, r("
          << fixed(curve.lag_m.at(1), 2) << " m) = " << fixed(curve.r.at(1), 4);
        if (curve.degenerate_count > 0) o << ", " << curve.degenerate_count << " zero-variance columns";
        o << "\n";
    }
    ctx.emit("spatial_correlation.csv", csv);
}

// ---- vehicle -------------------------------------------------------------

void run_vehicle(Context& ctx, const std::string& input) {
    const auto data = load_dataset(ctx, input);
    std::string params = ctx.header("tx,stacking,vehicle_position,mu_db,sigma_db,samples,cdf_max_gap");
    std::string angle_csv = ctx.header("tx,stacking,vehicle_position,angle_deg,mean_db");
    std::string hist_csv = ctx.header("tx,stacking,vehicle_position,angle_deg,bin_lower_db,bin_upper_db,count");
    std::string cdf_csv = ctx.header("tx,stacking,vehicle_position,value_db,empirical,fitted");
    auto& o = *ctx.out;
    std::size_t reported = 0;

    for (const auto state : {VehicleState::position1, VehicleState::position2}) {
        std::map<GroupKey, std::vector<std::vector<double>>> deltas;
        std::map<GroupKey, std::vector<double>> grids;
        for (const auto& [base, with] : vehicle::pair_scans(data, state)) {
            const GroupKey key{base->tx, base->stacking};
            deltas[key].push_back(vehicle::vehicle_delta(*base, *with));
            grids.try_emplace(key, base->angles);
        }
        for (const auto& [key, rows] : deltas) {
            const auto prefix = group_prefix(key) + std::string(to_token(state)) + ",";
            std::vector<double> pooled;
            for (const auto& r : rows) pooled.insert(pooled.end(), r.begin(), r.end());
            const auto report = vehicle::delta_cdf_report(pooled);
            params += prefix + format_number(report.fit.mu) + "," + format_number(report.fit.sigma) + "," +
                      std::to_string(report.fit.sample_count) + "," + format_number(report.max_gap) + "\n";
            for (std::size_t k = 0; k < report.grid.size(); ++k) {
                cdf_csv += prefix + format_number(report.grid[k]) + "," + format_number(report.empirical[k]) +
                           "," + format_number(report.fitted[k]) + "\n";
            }
            const auto st = vehicle::delta_angle_stats(grids.at(key), rows, ctx.cfg.vehicle_bin_width_db);
            for (std::size_t a = 0; a < st.angles.size(); ++a) {
                const auto angle = format_number(st.angles[a] * rad_to_deg);
                angle_csv += prefix + angle + "," + format_number(st.mean_db[a]) + "\n";
                for (std::size_t b = 0; b < st.counts[a].size(); ++b) {
                    hist_csv += prefix + angle + "," + format_number(st.bins.edge(b)) + "," +
                                format_number(st.bins.edge(b + 1)) + "," + std::to_string(st.counts[a][b]) + "\n";
                }
            }
            o << key.first << " (" << to_token(key.second) << ") " << to_token(state) << ": mu = "
              << fixed(report.fit.mu, 2) << " dB, sigma = " << fixed(report.fit.sigma, 2)
              << " dB, CDF gap = " << fixed(report.max_gap, 4) << " (" << report.fit.sample_count
              << " samples)\n";
            ++reported;
        }
    }
    if (reported == 0) throw InsufficientDataError("no vehicle scans in " + input);
    ctx.emit("vehicle_params.csv", params);
    ctx.emit("vehicle_angle_mean.csv", angle_csv);
    ctx.emit("vehicle_angle_hist.csv", hist_csv);
    ctx.emit("vehicle_cdf.csv", cdf_csv);
}

// ---- fit -----------------------------------------------------------------

void run_fit(Context& ctx, const std::string& input, const std::string& samples_path) {
    std::vector<LabeledSamples> groups;
    if (!samples_path.empty()) {
        const auto text = io::read_file(samples_path);
        ctx.input_hash = io::content_hash(text);
        std::istringstream in(text);
        groups.push_back({"Samples", io::parse_gain_samples(in)});
    } else {
        const auto data = load_dataset(ctx, input);
        groups = distance_samples(vehicle_free(data), ctx.cfg.synth.rx_height);
    }

    std::vector<std::pair<std::string, pathloss::LogLinFit>> rows;
    std::string samples_csv = ctx.header("configuration,distance_m,gain_db,fspl_gain_db");
    for (const auto& g : groups) {
        rows.emplace_back(g.label + ",free", pathloss::fit_loglinear(g.samples));
        rows.emplace_back(g.label + ",fixed", pathloss::fit_fixed_slope(g.samples, ctx.cfg.fixed_slope));
        for (const auto& s : g.samples) {
            samples_csv += g.label + "," + format_number(s.distance) + "," + format_number(s.gain_db) + "," +
                           format_number(-pathloss::fspl_db(s.distance, ctx.cfg.frequency_hz)) + "\n";
        }
    }
    ctx.emit("fit_table.csv", ctx.provenance() + fit_table_csv(rows));
    ctx.emit("fit_samples.csv", samples_csv);
    *ctx.out << fit_table_text(rows);
}

// ---- geometry ------------------------------------------------------------

void run_geometry(Context& ctx, const geometry::CanyonGeometry& g) {
    const auto angles = geometry::elevation_angles(g);
    const double exact = geometry::received_power_exact(g);
    const double approx = geometry::received_power_approx(g);
    const std::vector<std::pair<std::string, double>> rows = {
        {"phi1_deg", angles.phi1 * rad_to_deg},
        {"phi2_deg", angles.phi2 * rad_to_deg},
        {"theta_deg", angles.theta * rad_to_deg},
        {"poynting_fspl", geometry::poynting_fspl(g)},
        {"projected_aperture_m", geometry::projected_aperture_exact(g)},
        {"acceptance_length_m", geometry::acceptance_length(g)},
        {"vertical_fraction", geometry::vertical_fraction(g)},
        {"received_power_exact", exact},
        {"received_power_approx", approx},
        {"received_power_exact_db", 10.0 * std::log10(exact)},
        {"received_power_approx_db", 10.0 * std::log10(approx)},
        {"exact_to_approx_ratio", exact / approx},
        {"exact_to_approx_limit", geometry::exact_to_approx_limit(g)},
    };
    std::string csv = ctx.header("quantity,value");
    auto& o = *ctx.out;
    for (const auto& [name, value] : rows) {
        csv += name + "," + format_number(value) + "\n";
        o << std::left << std::setw(26) << name << std::setprecision(6) << value << "\n";
    }
    ctx.emit("geometry.csv", csv);
}

// ---- synth ---------------------------------------------------------------

void run_synth(Context& ctx, const std::string& layout_kind, bool with_vehicle, const std::string& out_file) {
    const auto mode = with_vehicle ? synth::VehicleMode::on : synth::VehicleMode::off;
    Dataset data;
    auto append = [&](Stacking kind, std::uint64_t seed) {
        auto cfg = ctx.cfg.synth;
        cfg.seed = seed;
        auto part = synth::generate_campaign(synth::build_layout(kind), cfg, mode);
        data.insert(data.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    const auto seed = ctx.cfg.synth.seed;
    if (layout_kind == "uniform" || layout_kind == "both") append(Stacking::uniform, seed);
    if (layout_kind == "nonuniform" || layout_kind == "both") append(Stacking::nonuniform, seed + 1);

    std::ostringstream os;
    os << io::provenance_line(seed, "-") << "\n";
    io::write_measurements(os, data);
    const fs::path target = fs::path(out_file).is_absolute() ? fs::path(out_file) : ctx.out_dir / out_file;
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    io::write_file_atomic(target, os.str());
    *ctx.out << "wrote " << target.string() << " (" << data.size() << " scans)\n";
}

}  // namespace

int exit_code_for(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::domain:
        case ErrorCategory::no_solution: return exit_domain;
        case ErrorCategory::config: return exit_config;
        case ErrorCategory::io: return exit_io;
        default: return exit_data;
    }
}

std::vector<LabeledSamples> distance_samples(std::span<const AngularScan> scans, double rx_height) {
    const auto known = synth::standard_transmitters();
    LabeledSamples uniform{"Uniform", {}}, nonuniform{"Non uniform", {}}, all{"Aggregated", {}};
    for (const auto& s : scans) {
        if (s.vehicle_state != VehicleState::absent) continue;
        const auto& tx = synth::find_transmitter(known, s.tx);
        const pathloss::GainSample sample{synth::euclidean_distance(tx, s.rx, rx_height),
                                          angular::circular_mean_gain(s)};
        if (sample.distance < pathloss::min_sample_distance) {
            throw DomainError("sample closer than 1 m to its transmitter: " + describe_key(s));
        }
        (s.stacking == Stacking::uniform ? uniform : nonuniform).samples.push_back(sample);
        all.samples.push_back(sample);
    }
    std::vector<LabeledSamples> out;
    if (!uniform.samples.empty()) out.push_back(std::move(uniform));
    if (!nonuniform.samples.empty()) out.push_back(std::move(nonuniform));
    if (out.size() > 1) out.push_back(std::move(all));
    if (out.empty()) throw InsufficientDataError("no vehicle-free scans to fit");
    return out;
}

std::string fit_table_csv(const std::vector<std::pair<std::string, pathloss::LogLinFit>>& rows) {
    std::string csv = "configuration,model,n,n_ci,r0_db,r0_ci,rmse_db,samples\n";
    for (const auto& [label, f] : rows) {
        csv += label + "," + format_number(f.n) + "," + format_number(f.ci_n) + "," + format_number(f.r0) + "," +
               format_number(f.ci_r0) + "," + format_number(f.rmse) + "," + std::to_string(f.sample_count) + "\n";
    }
    return csv;
}

std::string fit_table_text(const std::vector<std::pair<std::string, pathloss::LogLinFit>>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "Configuration" << std::setw(18) << "n" << std::setw(20) << "R0 [dB]"
       << "RMSE [dB]\n";
    for (const auto& [label, f] : rows) {
        std::string name = label;
        std::replace(name.begin(), name.end(), ',', ' ');
        os << std::left << std::setw(22) << name << std::setw(18) << (fixed(f.n, 3) + " +- " + fixed(f.ci_n, 2))
           << std::setw(20) << (fixed(f.r0, 2) + " +- " + fixed(f.ci_r0, 2)) << fixed(f.rmse, 2) << "\n";
    }
    return os.str();
}

std::string coverage_report(const config::ToolConfig& cfg) {
    const auto& link = cfg.link;
    const double floor = linkbudget::noise_floor_dbm(link);
    const double mapl = linkbudget::max_allowable_pathloss_db(link);
    const double range = linkbudget::coverage_range_m(cfg.coverage_fit, mapl);
    std::ostringstream os;
    os << "Coverage estimate\n";
    os << "  EIRP                       " << fixed(linkbudget::eirp_dbm(link), 1) << " dBm\n";
    os << "  Noise floor                " << fixed(floor, 1) << " dBm (T = " << link.temperature_k
       << " K, B = " << link.bandwidth_hz / 1e6 << " MHz, NF = " << link.noise_figure_db << " dB)\n";
    os << "  Required SNR               " << fixed(link.required_snr_db, 1) << " dB\n";
    os << "  Shadow-fading margin       " << fixed(link.shadow_margin_db, 1) << " dB\n";
    os << "  Max allowable path loss    " << fixed(mapl, 1) << " dB\n";
    os << "  Gain model                 n = " << cfg.coverage_fit.n << ", R0 = " << cfg.coverage_fit.r0 << " dB\n";
    os << "  Coverage range             " << fixed(range, 1) << " m (channel gain " << fixed(-mapl, 1)
       << " dB)\n";
    os << "  Throughput (informational) " << fixed(linkbudget::throughput_bps(link) / 1e9, 2) << " Gbit/s ("
       << link.spectral_efficiency_bps_hz << " bit/s/Hz x " << link.polarizations << " polarizations)\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Container-canyon mmWave propagation toolkit", "portcanyon"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--out-dir", out_dir, "directory for output tables");
    app.add_option("--seed", seed, "random seed (overrides the configuration)");
    app.add_option("--threads", threads, "worker threads for generation");

    std::string input;
    std::string layout_kind = "uniform";
    bool with_vehicle = false;
    bool no_fading = false;
    std::string synth_out = "campaign.csv";
    std::optional<double> hpbw, psi_cfg, rx_height;
    std::optional<std::size_t> grid_size;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic measurement campaign");
    synth_cmd->add_option("--layout", layout_kind, "uniform | nonuniform | both")
        ->check(CLI::IsMember({"uniform", "nonuniform", "both"}));
    synth_cmd->add_flag("--vehicle", with_vehicle, "add vehicle position 1/2 scans on the dense grid");
    synth_cmd->add_flag("--no-fading", no_fading, "constant spectra at the mean gain");
    synth_cmd->add_option("--out", synth_out, "output CSV (relative to --out-dir)");
    synth_cmd->add_option("--grid-size", grid_size, "azimuth samples per scan");
    synth_cmd->add_option("--hpbw-deg", hpbw, "horn half-power beamwidth");
    synth_cmd->add_option("--psi-rad", psi_cfg, "azimuthal acceptance angle of the canyon model");
    synth_cmd->add_option("--rx-height", rx_height, "receiver antenna height (m)");

    std::optional<double> bin_width;
    auto* angular_cmd = app.add_subcommand("angular", "angular spectrum statistics");
    angular_cmd->add_option("--in", input, "measurement CSV")->required();
    angular_cmd->add_option("--bin-width", bin_width, "histogram bin width (dB)");

    auto* spatial_cmd = app.add_subcommand("spatial", "spatial autocorrelation along dense lines");
    spatial_cmd->add_option("--in", input, "measurement CSV")->required();

    auto* vehicle_cmd = app.add_subcommand("vehicle", "vehicle impact statistics");
    vehicle_cmd->add_option("--in", input, "measurement CSV")->required();

    std::string samples_path;
    std::optional<double> fixed_slope;
    auto* fit_cmd = app.add_subcommand("fit", "log-distance gain fits (free and fixed slope)");
    auto* fit_in = fit_cmd->add_option("--in", input, "measurement CSV");
    auto* fit_samples = fit_cmd->add_option("--samples", samples_path, "distance_m,gain_db CSV");
    fit_in->excludes(fit_samples);
    fit_cmd->add_option("--fixed-slope", fixed_slope, "pinned exponent n (signed, default -4)");

    std::optional<double> cov_n, cov_r0;
    auto* coverage_cmd = app.add_subcommand("coverage", "link budget and coverage range");
    coverage_cmd->add_option("--n", cov_n, "gain model exponent (signed)");
    coverage_cmd->add_option("--r0", cov_r0, "gain model intercept (dB)");

    geometry::CanyonGeometry geom;
    double psi_deg = geometry::default_acceptance_angle * rad_to_deg;
    auto* geometry_cmd = app.add_subcommand("geometry", "evaluate the canyon model for one geometry");
    geometry_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    geometry_cmd->add_option("--h", geom.tx_height, "TX height above the canyon top (m)")->required();
    geometry_cmd->add_option("--d", geom.width, "canyon width (m)")->required();
    geometry_cmd->add_option("--D", geom.distance, "TX to near canyon edge (m)")->required();
    geometry_cmd->add_option("--h-prime", geom.rx_depth, "RX depth below the canyon top (m)")->required();
    geometry_cmd->add_option("--psi-deg", psi_deg, "azimuthal acceptance angle (deg)");

    auto* config_cmd = app.add_subcommand("config", "print the effective configuration as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "error [usage]: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        Context ctx;
        ctx.out = &out;
        ctx.out_dir = out_dir;
        if (!config_path.empty()) ctx.cfg = config::load_config(config_path);
        auto& cfg = ctx.cfg;
        if (seed) cfg.synth.seed = *seed;
        if (threads) cfg.synth.threads = *threads;
        if (no_fading) cfg.synth.fading = false;
        if (grid_size) {
            cfg.synth.grid_size = *grid_size;
            if (cfg.synth.fading_subbins % *grid_size != 0) cfg.synth.fading_subbins = *grid_size;
        }
        if (hpbw) cfg.synth.hpbw_deg = *hpbw;
        if (psi_cfg) cfg.synth.acceptance_angle = *psi_cfg;
        if (rx_height) cfg.synth.rx_height = *rx_height;
        if (bin_width) cfg.angular_bin_width_db = *bin_width;
        if (fixed_slope) cfg.fixed_slope = *fixed_slope;
        if (cov_n) cfg.coverage_fit.n = *cov_n;
        if (cov_r0) cfg.coverage_fit.r0 = *cov_r0;
        synth::validate(cfg.synth);

        if (synth_cmd->parsed()) {
            run_synth(ctx, layout_kind, with_vehicle, synth_out);
        } else if (angular_cmd->parsed()) {
            run_angular(ctx, input);
        } else if (spatial_cmd->parsed()) {
            run_spatial(ctx, input);
        } else if (vehicle_cmd->parsed()) {
            run_vehicle(ctx, input);
        } else if (fit_cmd->parsed()) {
            if (input.empty() && samples_path.empty()) {
                err << "error [usage]: fit needs --in or --samples\n";
                return exit_usage;
            }
            run_fit(ctx, input, samples_path);
        } else if (coverage_cmd->parsed()) {
            const auto report = coverage_report(cfg);
            out << report;
            ctx.emit("coverage.txt", io::provenance_line(cfg.synth.seed, "-") + "\n" + report);
        } else if (geometry_cmd->parsed()) {
            geom.acceptance_angle = psi_deg / rad_to_deg;
            run_geometry(ctx, geom);
        } else if (config_cmd->parsed()) {
            out << config::dump_config(cfg);
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error [" << to_string(e.category()) << "]: " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const fs::filesystem_error& e) {
        err << "error [io]: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        err << "error [internal]: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace portcanyon::cli
