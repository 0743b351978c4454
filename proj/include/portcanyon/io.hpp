#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "portcanyon/pathloss.hpp"
#include "portcanyon/scan.hpp"

namespace portcanyon::io {

inline constexpr std::string_view tool_version = "0.1.0";
inline constexpr std::string_view measurement_header =
    "tx_id,x_m,y_m,phi_deg,gain_db,vehicle_state,stacking";
inline constexpr std::string_view gain_sample_header = "distance_m,gain_db";

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Parses measurement CSV text. Lines starting with '#' before the header are
/// skipped. Rows are grouped into scans by (tx, x, y, vehicle state, stacking)
/// in order of first appearance; each scan's grid is rebuilt as
/// first + i * 2pi / n after checking it is uniform over a full turn.
///
/// Errors: ParseError (with line) for malformed or duplicate rows,
/// GridError naming the scan key for non-uniform grids.
Dataset parse_measurements(std::istream& in);
Dataset ingest(const std::filesystem::path& path);

/// Writes the canonical CSV (header, then one row per scan sample).
void write_measurements(std::ostream& out, const Dataset& data);

/// Reads "distance_m,gain_db" rows; distances below 1 m are rejected.
std::vector<pathloss::GainSample> parse_gain_samples(std::istream& in);
std::vector<pathloss::GainSample> read_gain_samples(const std::filesystem::path& path);

/// 64-bit FNV-1a digest, hex encoded.
std::string content_hash(std::string_view bytes);

/// "# portcanyon <version> seed=<seed> input=<hash>"
std::string provenance_line(std::uint64_t seed, std::string_view input_hash);

std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace portcanyon::io
