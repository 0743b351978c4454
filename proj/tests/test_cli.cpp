#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "portcanyon/cli.hpp"
#include "portcanyon/config.hpp"
#include "portcanyon/errors.hpp"
#include "portcanyon/io.hpp"

using namespace portcanyon;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("portcanyon_cli_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

// Small, fast settings shared by the end-to-end cases.
std::string write_config(const TempDir& dir) {
    const auto file = dir / "cfg.json";
    io::write_file_atomic(file, R"({"seed": 3, "synth": {"grid_size": 36, "realizations": 300}})");
    return file;
}

}  // namespace

TEST_CASE("exit codes by category") {
    CHECK(cli::exit_code_for(ErrorCategory::parse) == cli::exit_data);
    CHECK(cli::exit_code_for(ErrorCategory::grid) == cli::exit_data);
    CHECK(cli::exit_code_for(ErrorCategory::pairing) == cli::exit_data);
    CHECK(cli::exit_code_for(ErrorCategory::domain) == cli::exit_domain);
    CHECK(cli::exit_code_for(ErrorCategory::no_solution) == cli::exit_domain);
    CHECK(cli::exit_code_for(ErrorCategory::config) == cli::exit_config);
    CHECK(cli::exit_code_for(ErrorCategory::io) == cli::exit_io);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({"geometry", "--h", "17.4"}).code == cli::exit_usage);
    CHECK(run({"fit"}).code == cli::exit_usage);
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("configuration") {
    const auto cfg = config::parse_config(R"({"synth": {"hpbw_deg": 12.5}, "coverage": {"n": -3.5}})");
    CHECK(cfg.synth.hpbw_deg == 12.5);
    CHECK(cfg.coverage_fit.n == -3.5);
    CHECK(cfg.coverage_fit.r0 == -23.4);
    CHECK(cfg.link.bandwidth_hz == 400e6);

    CHECK_THROWS_AS(config::parse_config(R"({"synth": {"hpbw": 12}})"), ConfigError);
    CHECK_THROWS_AS(config::parse_config(R"({"seed": -1})"), ConfigError);
    CHECK_THROWS_AS(config::parse_config(R"({"synth": {"fading": 1}})"), ConfigError);
    CHECK_THROWS_AS(config::parse_config(R"({"link_budget": {"bandwidth_hz": 0}})"), ConfigError);
    CHECK_THROWS_AS(config::parse_config("{"), ConfigError);

    const auto dumped = config::dump_config(cfg);
    const auto again = config::parse_config(dumped);
    CHECK(config::dump_config(again) == dumped);

    const auto r = run({"config"});
    CHECK(r.code == 0);
    CHECK(r.out == config::dump_config(config::ToolConfig{}));
}

TEST_CASE("coverage command") {
    TempDir dir;
    const auto r = run({"--out-dir", dir.path.string(), "coverage"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-77.8 dBm") != std::string::npos);
    CHECK(r.out.find("110.8 dB") != std::string::npos);
    CHECK(r.out.find("137.1 m") != std::string::npos);
    CHECK(fs::exists(dir.path / "coverage.txt"));
    CHECK(run({"--out-dir", dir.path.string(), "coverage", "--n", "1"}).code == cli::exit_domain);
}

TEST_CASE("geometry command") {
    TempDir dir;
    const auto r = run({"--out-dir", dir.path.string(), "geometry", "--h", "17.4", "--d", "8", "--D", "63",
                        "--h-prime", "5"});
    CHECK(r.code == 0);
    const auto csv = io::read_file(dir.path / "geometry.csv");
    CHECK(csv.rfind("# portcanyon", 0) == 0);
    CHECK(csv.find("phi1_deg,15.43964553531") != std::string::npos);
    CHECK(run({"geometry", "--h", "-1", "--d", "8", "--D", "63", "--h-prime", "5"}).code == cli::exit_domain);
}

TEST_CASE("end to end") {
    TempDir dir;
    const auto cfg = write_config(dir);
    const std::vector<std::string> base{"--config", cfg, "--out-dir", dir.path.string()};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return run(a);
    };

    REQUIRE(with({"synth", "--layout", "both", "--vehicle"}).code == 0);
    const auto campaign = dir / "campaign.csv";
    const auto first = io::read_file(campaign);
    CHECK(first.rfind("# portcanyon 0.1.0 seed=3 input=-", 0) == 0);
    REQUIRE(with({"synth", "--layout", "both", "--vehicle", "--out", "again.csv"}).code == 0);
    CHECK(io::read_file(dir / "again.csv") == first);

    const auto a = with({"angular", "--in", campaign});
    CHECK(a.code == 0);
    CHECK(a.out.find("median azimuth gain") != std::string::npos);
    for (const char* f : {"angular_mean.csv", "angular_hist.csv", "gain_cdfs.csv", "azimuth_gain.csv",
                          "azimuth_gain_cdf.csv"}) {
        CHECK(fs::exists(dir.path / f));
    }

    CHECK(with({"spatial", "--in", campaign}).code == 0);
    const auto sp = io::read_file(dir / "spatial_correlation.csv");
    CHECK(sp.find("TX1_63,uniform,0,1") != std::string::npos);
    CHECK(sp.find("TX2,nonuniform,0,1") != std::string::npos);

    const auto v = with({"vehicle", "--in", campaign});
    CHECK(v.code == 0);
    CHECK(io::read_file(dir / "vehicle_params.csv").find("TX2,nonuniform,position2,") != std::string::npos);

    const auto f = with({"fit", "--in", campaign});
    CHECK(f.code == 0);
    CHECK(f.out.find("Aggregated") != std::string::npos);
    const auto table = io::read_file(dir / "fit_table.csv");
    CHECK(table.find("Uniform,free,") != std::string::npos);
    CHECK(table.find("Non uniform,fixed,-4,0,") != std::string::npos);

    // Same input and seed give identical reports.
    const auto fit_once = io::read_file(dir / "fit_table.csv");
    REQUIRE(with({"fit", "--in", campaign}).code == 0);
    CHECK(io::read_file(dir / "fit_table.csv") == fit_once);

    // Vehicle analysis on a vehicle-free campaign has nothing to report.
    REQUIRE(with({"synth", "--out", "plain.csv"}).code == 0);
    CHECK(with({"vehicle", "--in", dir / "plain.csv"}).code == cli::exit_data);
}

TEST_CASE("data errors map to exit codes") {
    TempDir dir;
    io::write_file_atomic(dir.path / "bad.csv", std::string(io::measurement_header) + "\nTX2,1,4.5,0,x,absent,uniform\n");
    const auto r = run({"angular", "--in", dir / "bad.csv"});
    CHECK(r.code == cli::exit_data);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(run({"angular", "--in", dir / "none.csv"}).code == cli::exit_io);

    io::write_file_atomic(dir.path / "s.csv", "distance_m,gain_db\n10,-60\n20,-66\n40,-72.5\n");
    const auto f = run({"--out-dir", dir.path.string(), "fit", "--samples", dir / "s.csv"});
    CHECK(f.code == 0);
    CHECK(f.out.find("Samples free") != std::string::npos);
}
