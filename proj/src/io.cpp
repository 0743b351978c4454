#include "portcanyon/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "portcanyon/errors.hpp"

namespace portcanyon::io {

namespace {

constexpr double deg_to_rad = std::numbers::pi / 180.0;

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view field, std::size_t line, std::string_view column) {
    double value = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ParseError(line, "invalid number '" + std::string(field) + "' in column " + std::string(column));
    }
    return value;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Reads up to and including the header, skipping leading comment lines.
std::size_t expect_header(std::istream& in, std::string_view header) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        strip_cr(line);
        if (!line.empty() && line.front() == '#') continue;
        if (line != header) {
            throw ParseError(number, "expected header '" + std::string(header) + "'");
        }
        return number;
    }
    throw ParseError(number + 1, "missing header '" + std::string(header) + "'");
}

struct PendingScan {
    AngularScan scan;
    std::vector<std::pair<double, double>> samples;  // (phi_deg, gain_db)
    std::set<double> seen;
};

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw IoError("number formatting failed");
    return std::string(buf, ptr);
}

Dataset parse_measurements(std::istream& in) {
    std::size_t line_no = expect_header(in, measurement_header);

    using Key = std::tuple<std::string, double, double, int, int>;
    std::map<Key, std::size_t> index;
    std::vector<PendingScan> pending;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 7) {
            throw ParseError(line_no, "expected 7 fields, found " + std::to_string(f.size()));
        }
        if (f[0].empty()) throw ParseError(line_no, "empty tx_id");
        const double x = parse_number(f[1], line_no, "x_m");
        const double y = parse_number(f[2], line_no, "y_m");
        const double phi = parse_number(f[3], line_no, "phi_deg");
        const double gain = parse_number(f[4], line_no, "gain_db");
        const auto state = parse_vehicle_state(f[5]);
        if (!state) throw ParseError(line_no, "unknown vehicle_state '" + std::string(f[5]) + "'");
        const auto stacking = parse_stacking(f[6]);
        if (!stacking) throw ParseError(line_no, "unknown stacking '" + std::string(f[6]) + "'");
        if (phi < 0.0 || phi >= 360.0) throw ParseError(line_no, "phi_deg outside [0, 360)");

        const Key key{std::string(f[0]), x, y, static_cast<int>(*state), static_cast<int>(*stacking)};
        auto [it, inserted] = index.try_emplace(key, pending.size());
        if (inserted) {
            PendingScan p;
            p.scan.tx = std::string(f[0]);
            p.scan.rx = {x, y};
            p.scan.vehicle_state = *state;
            p.scan.stacking = *stacking;
            pending.push_back(std::move(p));
        }
        auto& p = pending[it->second];
        if (!p.seen.insert(phi).second) {
            throw ParseError(line_no, "duplicate angle " + std::string(f[3]) + " for scan " + describe_key(p.scan));
        }
        p.samples.emplace_back(phi, gain);
    }

    Dataset out;
    out.reserve(pending.size());
    for (auto& p : pending) {
        std::sort(p.samples.begin(), p.samples.end());
        const std::size_t n = p.samples.size();
        if (n < min_scan_samples) {
            throw GridError("scan " + describe_key(p.scan) + " has fewer than 8 angles");
        }
        const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
        for (std::size_t i = 1; i < n; ++i) {
            const double d = (p.samples[i].first - p.samples[i - 1].first) * deg_to_rad;
            if (std::abs(d - step) > grid_tolerance_rad) {
                throw GridError("scan " + describe_key(p.scan) + " has a non-uniform angle grid");
            }
        }
        p.scan.angles = uniform_grid(n, p.samples.front().first * deg_to_rad);
        p.scan.gains_db.reserve(n);
        for (const auto& s : p.samples) p.scan.gains_db.push_back(s.second);
        out.push_back(std::move(p.scan));
    }
    return out;
}

Dataset ingest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_measurements(in);
}

void write_measurements(std::ostream& out, const Dataset& data) {
    out << measurement_header << '\n';
    std::string row;
    for (const auto& s : data) {
        const std::string prefix = s.tx + ',' + format_number(s.rx.x) + ',' + format_number(s.rx.y) + ',';
        const std::string suffix =
            ',' + std::string(to_token(s.vehicle_state)) + ',' + std::string(to_token(s.stacking)) + '\n';
        for (std::size_t i = 0; i < s.size(); ++i) {
            row = prefix;
            row += format_number(s.angles[i] / deg_to_rad);
            row += ',';
            row += format_number(s.gains_db[i]);
            row += suffix;
            out << row;
        }
    }
}

std::vector<pathloss::GainSample> parse_gain_samples(std::istream& in) {
    std::size_t line_no = expect_header(in, gain_sample_header);
    std::vector<pathloss::GainSample> out;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 2) throw ParseError(line_no, "expected 2 fields, found " + std::to_string(f.size()));
        const double d = parse_number(f[0], line_no, "distance_m");
        const double g = parse_number(f[1], line_no, "gain_db");
        if (d < pathloss::min_sample_distance) throw ParseError(line_no, "distance below 1 m");
        out.push_back({d, g});
    }
    return out;
}

std::vector<pathloss::GainSample> read_gain_samples(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_gain_samples(in);
}

std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string provenance_line(std::uint64_t seed, std::string_view input_hash) {
    return "# portcanyon " + std::string(tool_version) + " seed=" + std::to_string(seed) +
           " input=" + std::string(input_hash);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace portcanyon::io
