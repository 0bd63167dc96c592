#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfp/closed_form.hpp"
#include "rfp/simulator.hpp"

namespace rfp {

enum class Method { Model, Simulation };

std::string to_string(ScenarioId id);
std::string to_string(PolicyKind policy);
std::string to_string(Method method);
ScenarioId scenario_from_string(const std::string& s);
PolicyKind policy_from_string(const std::string& s);
Method method_from_string(const std::string& s);

/// Parameter bundle for one built-in comparison scenario: a sparse
/// reference deployment (1) against a denser or reconfigured candidate
/// (2). Derived ratios are computed on demand, never stored.
struct ScenarioPreset {
    ScenarioId id = ScenarioId::S1;
    double exclusion_radius_m = 15.0;  // shared by both deployments
    double coverage_radius1_m = 500.0;
    double coverage_radius2_m = 250.0;
    double path_loss_exp1 = 3.0;
    double path_loss_exp2 = 3.0;
    double freq1_ghz = 0.7;
    double freq2_ghz = 0.7;
    double freq_exp = 2.0;
    double baseline_db = 32.4;  // free-space fixed term for (GHz, m)
    double overlap = 0.8660254037844386;
    double sensitivity1_dbm = -90.0;
    double sensitivity2_dbm = -90.0;
    double pd_limit_w_m2 = 0.1;
    double tx_gain_db = 15.0;
    double tx_loss_db = 2.32;
    // Spectrum-rule settings. Bandwidths have no preset default and must
    // be supplied explicitly for spectrum-rule runs.
    double sps_power_per_block_dbm = 47.0;
    std::optional<double> sps_bandwidth1_mhz;
    std::optional<double> sps_bandwidth2_mhz;

    double delta_coverage() const { return coverage_radius1_m / coverage_radius2_m; }
    double delta_freq() const { return freq1_ghz / freq2_ghz; }
    /// Sensitivity ratio in the linear domain.
    double delta_sensitivity() const;
    double delta_baseline() const { return 1.0; }
    /// Ratio of served annulus areas.
    double delta_area() const;
    std::optional<double> delta_bandwidth() const;
};

ScenarioPreset preset(ScenarioId id);

/// Instantiates deployment 1 or 2 of the preset under the given power
/// rule. `neighbor_count` enters the closed-form bound and selects the
/// default simulation ring (0 -> none, 6 -> first ring).
Deployment make_deployment(const ScenarioPreset& preset, int index, PolicyKind policy,
                           int neighbor_count);

/// Comparison with the default observation distances: one meter outside
/// the shared exclusion radius for both deployments.
ComparisonSpec make_comparison(const ScenarioPreset& preset, PolicyKind policy,
                               int neighbor_count);

/// Inputs for scenario_ratio_expression, mirroring the preset.
RatioInputs ratio_inputs(const ScenarioPreset& preset);

struct ComparisonReport {
    std::string scenario;  // preset id, possibly with a sweep suffix
    PolicyKind policy = PolicyKind::Msp;
    int neighbor_sites = 0;  // sites contributing around the serving one
    Method method = Method::Model;
    double fixed_ratio = 0.0;
    double cell_ratio = 0.0;
    double pe1_w = 0.0;
    double pe2_w = 0.0;
    double cell1_w = 0.0;
    double cell2_w = 0.0;
    double fx1_w = 0.0;
    double fx2_w = 0.0;
    double elapsed_s = 0.0;  // runtime metadata; kept out of data files
};

struct RunOptions {
    double pixel_size_m = 1.0;
    double window_halfwidth_m = 1.0;
    std::size_t max_pixels = 50'000'000;
    unsigned threads = 0;
};

/// Evaluates the scenario either from the closed forms (neighbor
/// contributions as the worst-case bound) or from the pixel simulator
/// (exact per-pixel neighbor distances).
ComparisonReport run_comparison(const ScenarioPreset& preset, PolicyKind policy,
                                int neighbor_count, Method method,
                                const RunOptions& options = {});

/// Same pipeline for an explicit deployment pair. The report's policy
/// column reflects the first deployment's rule.
ComparisonReport run_comparison_spec(const std::string& label, const ComparisonSpec& spec,
                                     Method method, const RunOptions& options = {});

/// Shrinks deployment 2's exclusion radius over the given values, moving
/// its observation distance to one meter outside each value. The radiated
/// power of both deployments stays at the preset-derived value: the sweep
/// varies where the public can be, not the installed equipment.
std::vector<ComparisonReport> sweep_dmin2(const ScenarioPreset& preset, PolicyKind policy,
                                          int neighbor_count,
                                          const std::vector<double>& exclusion_radii2_m,
                                          Method method, const RunOptions& options = {});

/// Simulated comparison per neighbor ring level (0, 1 or 2 rings).
std::vector<ComparisonReport> sweep_neighbor_levels(const ScenarioPreset& preset,
                                                    PolicyKind policy,
                                                    const std::vector<int>& levels,
                                                    const RunOptions& options = {});

}  // namespace rfp
