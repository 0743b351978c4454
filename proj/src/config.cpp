#include "portcanyon/config.hpp"

#include <json.hpp>

#include "portcanyon/errors.hpp"
#include "portcanyon/io.hpp"

namespace portcanyon::config {

using nlohmann::json;

namespace {

json to_json(const ToolConfig& c) {
    const auto& s = c.synth;
    const auto& l = c.link;
    return json{
        {"seed", s.seed},
        {"synth",
         {{"grid_size", s.grid_size},
          {"fading_subbins", s.fading_subbins},
          {"fading", s.fading},
          {"realizations", s.realizations},
          {"hpbw_deg", s.hpbw_deg},
          {"psi_rad", s.acceptance_angle},
          {"rx_height_m", s.rx_height},
          {"calibration_db", s.calibration_db},
          {"vehicle1", {{"mu_db", s.position1.mu}, {"sigma_db", s.position1.sigma}}},
          {"vehicle2", {{"mu_db", s.position2.mu}, {"sigma_db", s.position2.sigma}}},
          {"threads", s.threads}}},
        {"angular", {{"bin_width_db", c.angular_bin_width_db}}},
        {"vehicle", {{"bin_width_db", c.vehicle_bin_width_db}}},
        {"spatial", {{"x_min_m", c.spatial_x_min}, {"x_max_m", c.spatial_x_max}}},
        {"fit", {{"fixed_slope", c.fixed_slope}, {"frequency_hz", c.frequency_hz}}},
        {"link_budget",
         {{"tx_power_dbm_per_pol", l.tx_power_dbm_per_pol},
          {"tx_antenna_gain_dbi", l.tx_antenna_gain_dbi},
          {"shadow_margin_db", l.shadow_margin_db},
          {"bandwidth_hz", l.bandwidth_hz},
          {"temperature_k", l.temperature_k},
          {"noise_figure_db", l.noise_figure_db},
          {"required_snr_db", l.required_snr_db},
          {"spectral_efficiency_bps_hz", l.spectral_efficiency_bps_hz},
          {"polarizations", l.polarizations}}},
        {"coverage", {{"n", c.coverage_fit.n}, {"r0_db", c.coverage_fit.r0}}},
    };
}

ToolConfig from_json(const json& j) {
    ToolConfig c;
    auto& s = c.synth;
    auto& l = c.link;
    const auto& js = j.at("synth");
    s.seed = j.at("seed").get<std::uint64_t>();
    s.grid_size = js.at("grid_size").get<std::size_t>();
    s.fading_subbins = js.at("fading_subbins").get<std::size_t>();
    s.fading = js.at("fading").get<bool>();
    s.realizations = js.at("realizations").get<std::size_t>();
    s.hpbw_deg = js.at("hpbw_deg").get<double>();
    s.acceptance_angle = js.at("psi_rad").get<double>();
    s.rx_height = js.at("rx_height_m").get<double>();
    s.calibration_db = js.at("calibration_db").get<double>();
    s.position1 = {js.at("vehicle1").at("mu_db").get<double>(), js.at("vehicle1").at("sigma_db").get<double>()};
    s.position2 = {js.at("vehicle2").at("mu_db").get<double>(), js.at("vehicle2").at("sigma_db").get<double>()};
    s.threads = js.at("threads").get<unsigned>();
    c.angular_bin_width_db = j.at("angular").at("bin_width_db").get<double>();
    c.vehicle_bin_width_db = j.at("vehicle").at("bin_width_db").get<double>();
    c.spatial_x_min = j.at("spatial").at("x_min_m").get<double>();
    c.spatial_x_max = j.at("spatial").at("x_max_m").get<double>();
    c.fixed_slope = j.at("fit").at("fixed_slope").get<double>();
    c.frequency_hz = j.at("fit").at("frequency_hz").get<double>();
    const auto& jl = j.at("link_budget");
    l.tx_power_dbm_per_pol = jl.at("tx_power_dbm_per_pol").get<double>();
    l.tx_antenna_gain_dbi = jl.at("tx_antenna_gain_dbi").get<double>();
    l.shadow_margin_db = jl.at("shadow_margin_db").get<double>();
    l.bandwidth_hz = jl.at("bandwidth_hz").get<double>();
    l.temperature_k = jl.at("temperature_k").get<double>();
    l.noise_figure_db = jl.at("noise_figure_db").get<double>();
    l.required_snr_db = jl.at("required_snr_db").get<double>();
    l.spectral_efficiency_bps_hz = jl.at("spectral_efficiency_bps_hz").get<double>();
    l.polarizations = jl.at("polarizations").get<int>();
    c.coverage_fit.n = j.at("coverage").at("n").get<double>();
    c.coverage_fit.r0 = j.at("coverage").at("r0_db").get<double>();
    return c;
}

// Every key in `user` must exist in `defaults` with a compatible type.
void check_schema(const json& user, const json& defaults, const std::string& path) {
    if (!user.is_object()) throw ConfigError("'" + path + "' must be an object");
    for (const auto& [key, value] : user.items()) {
        const std::string here = path.empty() ? key : path + "." + key;
        if (!defaults.contains(key)) throw ConfigError("unknown configuration key '" + here + "'");
        const auto& ref = defaults.at(key);
        if (ref.is_object()) {
            check_schema(value, ref, here);
        } else if (ref.is_boolean() != value.is_boolean() || ref.is_number() != value.is_number()) {
            throw ConfigError("configuration key '" + here + "' has the wrong type");
        } else if (ref.is_number_unsigned() && !(value.is_number_unsigned())) {
            throw ConfigError("configuration key '" + here + "' must be a non-negative integer");
        } else if (ref.is_number_integer() && !value.is_number_integer()) {
            throw ConfigError("configuration key '" + here + "' must be an integer");
        }
    }
}

}  // namespace

ToolConfig parse_config(std::string_view json_text) {
    json user;
    try {
        user = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }
    auto merged = to_json(ToolConfig{});
    check_schema(user, merged, "");
    merged.merge_patch(user);
    ToolConfig cfg = from_json(merged);
    synth::validate(cfg.synth);
    linkbudget::validate(cfg.link);
    if (!(cfg.angular_bin_width_db > 0.0 && cfg.vehicle_bin_width_db > 0.0)) {
        throw ConfigError("histogram bin widths must be positive");
    }
    if (!(cfg.frequency_hz > 0.0)) throw ConfigError("frequency must be positive");
    return cfg;
}

ToolConfig load_config(const std::filesystem::path& path) { return parse_config(io::read_file(path)); }

std::string dump_config(const ToolConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

}  // namespace portcanyon::config
