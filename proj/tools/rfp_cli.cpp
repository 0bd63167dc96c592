// Command-line front end: scenario comparisons, deployment-pair files,
// raster simulation, parameter sweeps, heatmap export and exposure-limit
// verification. All data outputs are deterministic; wall-clock metadata
// goes to a separate .meta.json sidecar.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfp/compliance.hpp"
#include "rfp/io.hpp"
#include "rfp/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;    // bad flags, unknown scenario, malformed config
constexpr int kExitCompute = 3;  // grid cap, empty aggregate, domain errors
constexpr int kExitIo = 4;       // file read/write failures
constexpr int kExitLimit = 5;    // exposure limit exceeded (verify-elp)

struct CommonFlags {
    std::string scenario = "S1";
    std::string policy;
    int neighbors = -1;
    std::string method;
    double pixel_size = 0.0;
    double epsilon = 0.0;
    double dmin2 = 0.0;
    double pf_dbm = 0.0;
    double b1_mhz = 0.0;
    double b2_mhz = 0.0;
    unsigned threads = 0;
    std::string config_path;
    std::string out_path;
    std::string format = "json";
};

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--out", f.out_path, "Write the report here instead of stdout");
    cmd->add_option("--format", f.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

void add_preset_flags(CLI::App* cmd, CommonFlags& f, bool with_neighbors = true) {
    cmd->add_option("--id", f.scenario, "Scenario preset: S1..S5")->required();
    cmd->add_option("--policy", f.policy, "Power rule: msp, elp or sps");
    if (with_neighbors) {
        cmd->add_option("--neighbors", f.neighbors, "Neighbor sites in the bound: 0 or 6")
            ->check(CLI::IsMember({0, 6}));
    }
    cmd->add_option("--pixel-size", f.pixel_size, "Raster pixel size in meters (default 1)");
    cmd->add_option("--epsilon", f.epsilon,
                    "Half-width of the fixed-distance window in meters (default 1)");
    cmd->add_option("--threads", f.threads, "Worker threads for grid construction (0 = auto)");
    cmd->add_option("--config", f.config_path, "JSON override file (flags take precedence)");
    cmd->add_option("--pf-dbm", f.pf_dbm, "Spectrum rule: power per 10 MHz block in dBm");
    cmd->add_option("--b1", f.b1_mhz, "Spectrum rule: bandwidth of deployment 1 in MHz");
    cmd->add_option("--b2", f.b2_mhz, "Spectrum rule: bandwidth of deployment 2 in MHz");
}

struct ResolvedRun {
    rfp::ScenarioPreset preset;
    rfp::PolicyKind policy = rfp::PolicyKind::Msp;
    int neighbors = 0;
    std::string method = "model";
    rfp::RunOptions options;
    std::optional<double> dmin2;
};

// Precedence: command-line flag > override file > preset default.
ResolvedRun resolve(const CLI::App* cmd, const CommonFlags& f) {
    ResolvedRun r;
    r.preset = rfp::preset(rfp::scenario_from_string(f.scenario));

    rfp::PresetOverrides file;
    if (!f.config_path.empty()) {
        file = rfp::load_preset_overrides(f.config_path);
    }

    auto flag_given = [&](const char* name) {
        const CLI::Option* opt = cmd->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };

    std::string policy = "msp";
    if (file.policy) policy = *file.policy;
    if (flag_given("--policy")) policy = f.policy;
    r.policy = rfp::policy_from_string(policy);

    if (file.neighbors) r.neighbors = *file.neighbors;
    if (flag_given("--neighbors")) r.neighbors = f.neighbors;

    if (file.method) r.method = *file.method;
    if (flag_given("--method")) r.method = f.method;

    if (file.pixel_size_m) r.options.pixel_size_m = *file.pixel_size_m;
    if (flag_given("--pixel-size")) r.options.pixel_size_m = f.pixel_size;

    if (file.epsilon_m) r.options.window_halfwidth_m = *file.epsilon_m;
    if (flag_given("--epsilon")) r.options.window_halfwidth_m = f.epsilon;

    if (file.d_min2_m) r.dmin2 = *file.d_min2_m;
    if (flag_given("--dmin2")) r.dmin2 = f.dmin2;

    if (file.sps_power_per_block_dbm)
        r.preset.sps_power_per_block_dbm = *file.sps_power_per_block_dbm;
    if (flag_given("--pf-dbm")) r.preset.sps_power_per_block_dbm = f.pf_dbm;
    if (file.sps_bandwidth1_mhz) r.preset.sps_bandwidth1_mhz = *file.sps_bandwidth1_mhz;
    if (flag_given("--b1")) r.preset.sps_bandwidth1_mhz = f.b1_mhz;
    if (file.sps_bandwidth2_mhz) r.preset.sps_bandwidth2_mhz = *file.sps_bandwidth2_mhz;
    if (flag_given("--b2")) r.preset.sps_bandwidth2_mhz = f.b2_mhz;

    r.options.threads = f.threads;
    return r;
}

std::vector<rfp::Method> methods_for(const std::string& spec) {
    if (spec == "both") {
        return {rfp::Method::Model, rfp::Method::Simulation};
    }
    return {rfp::method_from_string(spec)};
}

void write_reports(const std::vector<rfp::ComparisonReport>& reports, const CommonFlags& f) {
    const rfp::ReportFormat format = rfp::format_from_string(f.format);
    if (f.out_path.empty()) {
        rfp::emit_report(reports, format, std::cout);
    } else {
        rfp::emit_report(reports, format, f.out_path);
        rfp::write_metadata_sidecar(reports, f.out_path);
    }
}

int run_scenario(const CLI::App* cmd, const CommonFlags& f) {
    ResolvedRun r = resolve(cmd, f);
    std::vector<rfp::ComparisonReport> reports;
    for (rfp::Method method : methods_for(r.method.empty() ? "model" : r.method)) {
        if (r.dmin2) {
            auto swept = rfp::sweep_dmin2(r.preset, r.policy, r.neighbors, {*r.dmin2}, method,
                                          r.options);
            reports.insert(reports.end(), swept.begin(), swept.end());
        } else {
            reports.push_back(
                rfp::run_comparison(r.preset, r.policy, r.neighbors, method, r.options));
        }
    }
    write_reports(reports, f);
    return kExitOk;
}

int run_compare(const CLI::App*, const CommonFlags& f, const std::string& pair_path) {
    rfp::ComparisonSpec spec = rfp::load_comparison_spec(pair_path);
    if (f.epsilon > 0.0) spec.window_halfwidth_m = f.epsilon;
    rfp::RunOptions options;
    if (f.pixel_size > 0.0) options.pixel_size_m = f.pixel_size;
    options.window_halfwidth_m = spec.window_halfwidth_m;
    options.threads = f.threads;
    std::vector<rfp::ComparisonReport> reports;
    for (rfp::Method method : methods_for(f.method.empty() ? "model" : f.method)) {
        reports.push_back(rfp::run_comparison_spec("pair", spec, method, options));
    }
    write_reports(reports, f);
    return kExitOk;
}

int run_sweep(const CLI::App* cmd, const CommonFlags& f, const std::vector<double>& dmin2_values,
              const std::vector<int>& level_values) {
    ResolvedRun r = resolve(cmd, f);
    if (dmin2_values.empty() == level_values.empty()) {
        throw rfp::config_error("sweep: give exactly one of --dmin2 or --levels");
    }
    std::vector<rfp::ComparisonReport> reports;
    if (!dmin2_values.empty()) {
        for (rfp::Method method : methods_for(r.method.empty() ? "model" : r.method)) {
            auto swept = rfp::sweep_dmin2(r.preset, r.policy, r.neighbors, dmin2_values, method,
                                          r.options);
            reports.insert(reports.end(), swept.begin(), swept.end());
        }
    } else {
        reports = rfp::sweep_neighbor_levels(r.preset, r.policy, level_values, r.options);
    }
    write_reports(reports, f);
    return kExitOk;
}

int run_simulate(const CLI::App* cmd, const CommonFlags& f, int deployment, int levels,
                 const std::string& profile_path) {
    ResolvedRun r = resolve(cmd, f);
    const rfp::Deployment dep =
        rfp::make_deployment(r.preset, deployment, r.policy, levels == 0 ? 0 : 6);
    const rfp::PixelGrid grid =
        rfp::build_grid(dep, levels, r.options.pixel_size_m,
                        rfp::GridOptions{r.options.max_pixels, r.options.threads});
    const double d_fx = dep.exclusion_radius_m + 1.0;

    nlohmann::json out;
    out["schema_version"] = 1;
    out["scenario"] = rfp::to_string(r.preset.id);
    out["deployment"] = deployment;
    out["policy"] = rfp::to_string(r.policy);
    out["levels"] = levels;
    out["pixel_size_m"] = grid.pixel_size_m();
    out["pe_w"] = rfp::emitted_power(dep).value;
    out["fixed_w"] =
        rfp::aggregate_fixed(grid, d_fx, r.options.window_halfwidth_m).value;
    out["cell_w"] = rfp::aggregate_cell(grid).value;

    if (!profile_path.empty()) {
        rfp::write_profile_csv(rfp::distance_profile(grid), profile_path);
    }
    if (f.out_path.empty()) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::ofstream file(f.out_path);
        if (!file) throw rfp::io_error("cannot open '" + f.out_path + "' for writing");
        file << out.dump(2) << '\n';
    }
    return kExitOk;
}

int run_heatmap(const CLI::App* cmd, const CommonFlags& f, int deployment, int levels) {
    ResolvedRun r = resolve(cmd, f);
    const rfp::Deployment dep =
        rfp::make_deployment(r.preset, deployment, r.policy, levels == 0 ? 0 : 6);
    const rfp::PixelGrid grid =
        rfp::build_grid(dep, levels, r.options.pixel_size_m,
                        rfp::GridOptions{r.options.max_pixels, r.options.threads});
    rfp::export_heatmap(grid, f.out_path);
    return kExitOk;
}

int run_verify_elp(const CLI::App* cmd, const CommonFlags& f, int deployment) {
    ResolvedRun r = resolve(cmd, f);
    const int neighbors = r.neighbors < 0 ? 6 : r.neighbors;
    const rfp::Deployment dep = rfp::make_deployment(r.preset, deployment, rfp::PolicyKind::Elp,
                                                     neighbors);
    const rfp::PixelGrid grid =
        rfp::build_grid(dep, neighbors == 0 ? 0 : 1, r.options.pixel_size_m,
                        rfp::GridOptions{r.options.max_pixels, r.options.threads});
    const rfp::ComplianceReport report = rfp::verify_elp_compliance(dep, grid);

    nlohmann::json out;
    out["schema_version"] = 1;
    out["scenario"] = rfp::to_string(r.preset.id);
    out["deployment"] = deployment;
    out["neighbors"] = neighbors;
    out["limit_w_m2"] = report.limit_w_m2;
    out["max_pd_w_m2"] = report.max_pd_w_m2;
    out["margin_w_m2"] = report.margin_w_m2();
    out["worst_pixel"] = {{"x_m", report.worst_x_m},
                          {"y_m", report.worst_y_m},
                          {"distance_m", report.worst_distance_m}};
    out["passed"] = report.passed;
    std::cout << out.dump(2) << '\n';
    return report.passed ? kExitOk : kExitLimit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Received-power pollution evaluation for cellular deployments"};
    app.require_subcommand(1);

    CommonFlags f;
    std::string pair_path;
    std::vector<double> dmin2_values;
    std::vector<int> level_values;
    int deployment = 1;
    int levels = 0;
    std::string profile_path;

    CLI::App* scenario = app.add_subcommand(
        "scenario", "Compare both deployments of a preset (model and/or simulation)");
    add_preset_flags(scenario, f);
    scenario->add_option("--method", f.method, "model, simulation or both")
        ->check(CLI::IsMember({"model", "simulation", "both"}));
    scenario->add_option("--dmin2", f.dmin2,
                         "Override deployment 2's exclusion radius in meters "
                         "(radiated power stays at the preset value)");
    add_output_flags(scenario, f);

    CLI::App* compare =
        app.add_subcommand("compare", "Compare a deployment pair described in a JSON file");
    compare->add_option("--file", pair_path, "Deployment-pair JSON")->required();
    compare->add_option("--method", f.method, "model, simulation or both")
        ->check(CLI::IsMember({"model", "simulation", "both"}));
    compare->add_option("--pixel-size", f.pixel_size, "Raster pixel size in meters");
    compare->add_option("--epsilon", f.epsilon, "Fixed-distance window half-width in meters");
    compare->add_option("--threads", f.threads, "Worker threads (0 = auto)");
    add_output_flags(compare, f);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep deployment 2's exclusion radius or the neighbor ring level");
    add_preset_flags(sweep, f);
    sweep->add_option("--method", f.method, "model or simulation (exclusion-radius sweep)")
        ->check(CLI::IsMember({"model", "simulation", "both"}));
    sweep->add_option("--dmin2", dmin2_values, "Exclusion radii for deployment 2 in meters");
    sweep->add_option("--levels", level_values, "Neighbor ring levels (0, 1, 2); simulation only");
    add_output_flags(sweep, f);

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Rasterize one deployment and report its aggregates");
    add_preset_flags(simulate, f, /*with_neighbors=*/false);
    simulate->add_option("--deployment", deployment, "1 or 2")->check(CLI::IsMember({1, 2}));
    simulate->add_option("--levels", levels, "Neighbor ring level: 0, 1 or 2")
        ->check(CLI::IsMember({0, 1, 2}));
    simulate->add_option("--profile", profile_path, "Write the distance profile CSV here");
    add_output_flags(simulate, f);

    CLI::App* heatmap =
        app.add_subcommand("heatmap", "Export the per-pixel raster as a CSV heatmap (dBm)");
    add_preset_flags(heatmap, f, /*with_neighbors=*/false);
    heatmap->add_option("--deployment", deployment, "1 or 2")->check(CLI::IsMember({1, 2}));
    heatmap->add_option("--levels", levels, "Neighbor ring level: 0, 1 or 2")
        ->check(CLI::IsMember({0, 1, 2}));
    heatmap->add_option("--out", f.out_path, "Output CSV path")->required();

    CLI::App* verify = app.add_subcommand(
        "verify-elp", "Check the exposure-limit rule against the summed power density");
    add_preset_flags(verify, f);
    verify->add_option("--deployment", deployment, "1 or 2")->check(CLI::IsMember({1, 2}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (scenario->parsed()) return run_scenario(scenario, f);
        if (compare->parsed()) return run_compare(compare, f, pair_path);
        if (sweep->parsed()) return run_sweep(sweep, f, dmin2_values, level_values);
        if (simulate->parsed()) return run_simulate(simulate, f, deployment, levels, profile_path);
        if (heatmap->parsed()) return run_heatmap(heatmap, f, deployment, levels);
        if (verify->parsed()) return run_verify_elp(verify, f, deployment);
    } catch (const rfp::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rfp::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const rfp::grid_limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    } catch (const rfp::empty_aggregate_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
