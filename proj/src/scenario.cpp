#include "rfp/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rfp {

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::S1: return "S1";
        case ScenarioId::S2: return "S2";
        case ScenarioId::S3: return "S3";
        case ScenarioId::S4: return "S4";
        case ScenarioId::S5: return "S5";
    }
    return "?";
}

std::string to_string(PolicyKind policy) {
    switch (policy) {
        case PolicyKind::Msp: return "msp";
        case PolicyKind::Elp: return "elp";
        case PolicyKind::Sps: return "sps";
    }
    return "?";
}

std::string to_string(Method method) {
    return method == Method::Model ? "model" : "simulation";
}

ScenarioId scenario_from_string(const std::string& s) {
    if (s == "S1" || s == "s1") return ScenarioId::S1;
    if (s == "S2" || s == "s2") return ScenarioId::S2;
    if (s == "S3" || s == "s3") return ScenarioId::S3;
    if (s == "S4" || s == "s4") return ScenarioId::S4;
    if (s == "S5" || s == "s5") return ScenarioId::S5;
    throw std::invalid_argument("unknown scenario '" + s + "' (expected S1..S5)");
}

PolicyKind policy_from_string(const std::string& s) {
    if (s == "msp") return PolicyKind::Msp;
    if (s == "elp") return PolicyKind::Elp;
    if (s == "sps") return PolicyKind::Sps;
    throw std::invalid_argument("unknown policy '" + s + "' (expected msp, elp or sps)");
}

Method method_from_string(const std::string& s) {
    if (s == "model") return Method::Model;
    if (s == "simulation") return Method::Simulation;
    throw std::invalid_argument("unknown method '" + s + "' (expected model or simulation)");
}

double ScenarioPreset::delta_sensitivity() const {
    return dbm_to_watts(PowerDbm(sensitivity1_dbm)).value /
           dbm_to_watts(PowerDbm(sensitivity2_dbm)).value;
}

double ScenarioPreset::delta_area() const {
    const double r0 = exclusion_radius_m;
    return (coverage_radius1_m * coverage_radius1_m - r0 * r0) /
           (coverage_radius2_m * coverage_radius2_m - r0 * r0);
}

std::optional<double> ScenarioPreset::delta_bandwidth() const {
    if (sps_bandwidth1_mhz && sps_bandwidth2_mhz) {
        return *sps_bandwidth1_mhz / *sps_bandwidth2_mhz;
    }
    return std::nullopt;
}

ScenarioPreset preset(ScenarioId id) {
    ScenarioPreset p;
    p.id = id;
    switch (id) {
        case ScenarioId::S1:
            p.coverage_radius2_m = 250.0;
            break;
        case ScenarioId::S2:
            p.coverage_radius2_m = 100.0;
            p.path_loss_exp2 = 2.1;
            break;
        case ScenarioId::S3:
            p.coverage_radius2_m = 250.0;
            p.freq2_ghz = 3.7;
            break;
        case ScenarioId::S4:
            p.coverage_radius2_m = 500.0;
            p.freq2_ghz = 3.7;
            p.sensitivity2_dbm = -87.0;
            break;
        case ScenarioId::S5:
            p.coverage_radius2_m = 50.0;
            p.path_loss_exp2 = 2.1;
            p.freq2_ghz = 3.7;
            p.sensitivity2_dbm = -87.0;
            break;
    }
    return p;
}

namespace {

PowerPolicy make_policy(const ScenarioPreset& preset, int index, PolicyKind policy) {
    switch (policy) {
        case PolicyKind::Msp:
            return MspConfig::from_dbm(index == 1 ? preset.sensitivity1_dbm
                                                  : preset.sensitivity2_dbm);
        case PolicyKind::Elp:
            return ElpConfig(preset.pd_limit_w_m2, GainDb(preset.tx_gain_db),
                             GainDb(preset.tx_loss_db));
        case PolicyKind::Sps: {
            const auto& bw = index == 1 ? preset.sps_bandwidth1_mhz : preset.sps_bandwidth2_mhz;
            if (!bw) {
                throw std::invalid_argument(
                    "spectrum-rule runs need explicit bandwidths for both deployments "
                    "(no defensible default exists)");
            }
            return SpsConfig::from_dbm(preset.sps_power_per_block_dbm, *bw);
        }
    }
    throw std::invalid_argument("make_policy: unknown policy");
}

}  // namespace

Deployment make_deployment(const ScenarioPreset& preset, int index, PolicyKind policy,
                           int neighbor_count) {
    if (index != 1 && index != 2) {
        throw std::invalid_argument("make_deployment: index must be 1 or 2");
    }
    const bool first = index == 1;
    PropagationParams prop(first ? preset.path_loss_exp1 : preset.path_loss_exp2,
                           first ? preset.freq1_ghz : preset.freq2_ghz, preset.freq_exp,
                           preset.baseline_db);
    LayoutSpec layout(preset.overlap, neighbor_count == 0 ? 0 : 1);
    return Deployment(preset.exclusion_radius_m,
                      first ? preset.coverage_radius1_m : preset.coverage_radius2_m, prop,
                      make_policy(preset, index, policy), layout, neighbor_count);
}

ComparisonSpec make_comparison(const ScenarioPreset& preset, PolicyKind policy,
                               int neighbor_count) {
    const double d_fx = preset.exclusion_radius_m + 1.0;
    return ComparisonSpec(make_deployment(preset, 1, policy, neighbor_count),
                          make_deployment(preset, 2, policy, neighbor_count), d_fx, d_fx);
}

RatioInputs ratio_inputs(const ScenarioPreset& preset) {
    RatioInputs in;
    in.coverage_radius1_m = preset.coverage_radius1_m;
    in.coverage_radius2_m = preset.coverage_radius2_m;
    in.path_loss_exp1 = preset.path_loss_exp1;
    in.path_loss_exp2 = preset.path_loss_exp2;
    in.freq1_ghz = preset.freq1_ghz;
    in.freq2_ghz = preset.freq2_ghz;
    in.freq_exp = preset.freq_exp;
    in.sensitivity1_w = dbm_to_watts(PowerDbm(preset.sensitivity1_dbm)).value;
    in.sensitivity2_w = dbm_to_watts(PowerDbm(preset.sensitivity2_dbm)).value;
    in.exclusion_radius_m = preset.exclusion_radius_m;
    in.fixed_distance1_m = preset.exclusion_radius_m + 1.0;
    in.fixed_distance2_m = preset.exclusion_radius_m + 1.0;
    return in;
}

namespace {

struct DeploymentFigures {
    double pe_w = 0.0;
    double fx_w = 0.0;
    double cell_w = 0.0;
};

DeploymentFigures model_figures(const Deployment& dep, double d_fx) {
    return {emitted_power(dep).value, total_fixed_rfp(dep, d_fx).value,
            total_cell_rfp(dep).value};
}

DeploymentFigures simulated_figures(const Deployment& dep, double d_fx, int levels,
                                    const RunOptions& options) {
    const PixelGrid grid =
        build_grid(dep, levels, options.pixel_size_m,
                   GridOptions{options.max_pixels, options.threads});
    return {emitted_power(dep).value,
            aggregate_fixed(grid, d_fx, options.window_halfwidth_m).value,
            aggregate_cell(grid).value};
}

ComparisonReport assemble(const std::string& label, PolicyKind policy, int neighbor_sites,
                          Method method, const DeploymentFigures& f1,
                          const DeploymentFigures& f2, double elapsed_s) {
    ComparisonReport r;
    r.scenario = label;
    r.policy = policy;
    r.neighbor_sites = neighbor_sites;
    r.method = method;
    r.fixed_ratio = f1.fx_w / f2.fx_w;
    r.cell_ratio = f1.cell_w / f2.cell_w;
    r.pe1_w = f1.pe_w;
    r.pe2_w = f2.pe_w;
    r.cell1_w = f1.cell_w;
    r.cell2_w = f2.cell_w;
    r.fx1_w = f1.fx_w;
    r.fx2_w = f2.fx_w;
    r.elapsed_s = elapsed_s;
    return r;
}

ComparisonReport run_spec(const std::string& label, const ComparisonSpec& spec,
                          PolicyKind policy, int neighbor_count, Method method,
                          const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    DeploymentFigures f1, f2;
    if (method == Method::Model) {
        f1 = model_figures(spec.first, spec.fixed_distance1_m);
        f2 = model_figures(spec.second, spec.fixed_distance2_m);
    } else {
        const int levels = neighbor_count == 0 ? 0 : 1;
        f1 = simulated_figures(spec.first, spec.fixed_distance1_m, levels, options);
        f2 = simulated_figures(spec.second, spec.fixed_distance2_m, levels, options);
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return assemble(label, policy, neighbor_count, method, f1, f2, elapsed);
}

}  // namespace

ComparisonReport run_comparison(const ScenarioPreset& preset, PolicyKind policy,
                                int neighbor_count, Method method, const RunOptions& options) {
    const ComparisonSpec spec = make_comparison(preset, policy, neighbor_count);
    return run_spec(to_string(preset.id), spec, policy, neighbor_count, method, options);
}

ComparisonReport run_comparison_spec(const std::string& label, const ComparisonSpec& spec,
                                     Method method, const RunOptions& options) {
    const PolicyKind policy = std::holds_alternative<MspConfig>(spec.first.policy)
                                  ? PolicyKind::Msp
                                  : std::holds_alternative<ElpConfig>(spec.first.policy)
                                        ? PolicyKind::Elp
                                        : PolicyKind::Sps;
    return run_spec(label, spec, policy, spec.first.neighbor_count, method, options);
}

std::vector<ComparisonReport> sweep_dmin2(const ScenarioPreset& preset, PolicyKind policy,
                                          int neighbor_count,
                                          const std::vector<double>& exclusion_radii2_m,
                                          Method method, const RunOptions& options) {
    const Deployment base1 = make_deployment(preset, 1, policy, neighbor_count);
    const Deployment base2 = make_deployment(preset, 2, policy, neighbor_count);
    // Freeze both radiated powers at their design values; the sweep only
    // moves the evaluation boundary of deployment 2.
    const PowerWatts pe1 = emitted_power(base1);
    const PowerWatts pe2 = emitted_power(base2);

    std::vector<ComparisonReport> reports;
    reports.reserve(exclusion_radii2_m.size());
    for (const double radius : exclusion_radii2_m) {
        if (!(radius > 0.0 && radius + 1.0 <= base2.coverage_radius_m)) {
            throw std::invalid_argument(
                "sweep_dmin2: exclusion radius " + std::to_string(radius) +
                " m does not leave room for an observation point inside the annulus");
        }
        Deployment dep1 = base1;
        dep1.emitted_power_override = pe1;
        Deployment dep2(radius, base2.coverage_radius_m, base2.prop, base2.policy,
                        base2.layout, base2.neighbor_count, pe2);
        ComparisonSpec spec(dep1, dep2, preset.exclusion_radius_m + 1.0, radius + 1.0);
        char label[64];
        std::snprintf(label, sizeof label, "%s:dmin2=%g", to_string(preset.id).c_str(), radius);
        reports.push_back(run_spec(label, spec, policy, neighbor_count, method, options));
    }
    return reports;
}

std::vector<ComparisonReport> sweep_neighbor_levels(const ScenarioPreset& preset,
                                                    PolicyKind policy,
                                                    const std::vector<int>& levels,
                                                    const RunOptions& options) {
    std::vector<ComparisonReport> reports;
    reports.reserve(levels.size());
    for (const int level : levels) {
        if (level < 0 || level > 2) {
            throw std::invalid_argument("sweep_neighbor_levels: levels must be 0, 1 or 2");
        }
        const int sites = level == 0 ? 0 : level == 1 ? 6 : 18;
        const ComparisonSpec spec =
            make_comparison(preset, policy, level == 0 ? 0 : 6);
        const auto start = std::chrono::steady_clock::now();
        const DeploymentFigures f1 =
            simulated_figures(spec.first, spec.fixed_distance1_m, level, options);
        const DeploymentFigures f2 =
            simulated_figures(spec.second, spec.fixed_distance2_m, level, options);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char label[64];
        std::snprintf(label, sizeof label, "%s:levels=%d", to_string(preset.id).c_str(), level);
        reports.push_back(assemble(label, policy, sites, Method::Simulation, f1, f2, elapsed));
    }
    return reports;
}

}  // namespace rfp
