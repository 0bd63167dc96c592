#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rfp/scenario.hpp"

namespace rfp {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReportFormat { Json, Csv };
ReportFormat format_from_string(const std::string& s);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// Reads a deployment-pair description. Keys mirror the deployment fields
/// with unit suffixes (d_min_m, d_max_m, gamma, f_ghz, eta, c_db, zeta,
/// n_i, pe_override_w and a tagged `policy` object); observation
/// distances default to one meter outside each exclusion radius.
ComparisonSpec load_comparison_spec(const std::string& path);
ComparisonSpec parse_comparison_spec(const std::string& json_text);

/// Optional override file for preset-based commands. Recognized keys:
/// policy, neighbors, method, pixel_size_m, epsilon_m, d_min2_m,
/// p_f_dbm, b1_mhz, b2_mhz. Command-line flags take precedence over the
/// file, the file over preset defaults.
struct PresetOverrides {
    std::optional<std::string> policy;
    std::optional<int> neighbors;
    std::optional<std::string> method;
    std::optional<double> pixel_size_m;
    std::optional<double> epsilon_m;
    std::optional<double> d_min2_m;
    std::optional<double> sps_power_per_block_dbm;
    std::optional<double> sps_bandwidth1_mhz;
    std::optional<double> sps_bandwidth2_mhz;
};

PresetOverrides load_preset_overrides(const std::string& path);

/// Serializes reports to the stream. The payload is deterministic: no
/// timestamps, insertion order preserved, doubles emitted with
/// shortest-round-trip precision. Runtime metadata is excluded; use
/// write_metadata_sidecar for it.
void emit_report(const std::vector<ComparisonReport>& reports, ReportFormat format,
                 std::ostream& out);
void emit_report(const std::vector<ComparisonReport>& reports, ReportFormat format,
                 const std::string& path);

/// Wall-clock metadata for a report file, written next to it.
void write_metadata_sidecar(const std::vector<ComparisonReport>& reports,
                            const std::string& data_path);

}  // namespace rfp
