#include "rfp/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace rfp {

using nlohmann::json;

ReportFormat format_from_string(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw config_error("unknown report format '" + s + "' (expected json or csv)");
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw io_error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open '" + path + "' for reading");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("malformed JSON in '" + path + "': " + e.what());
    }
}

double require_number(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key) || !obj[key].is_number()) {
        throw config_error(ctx + ": missing or non-numeric field '" + key + "'");
    }
    return obj[key].get<double>();
}

PowerPolicy parse_policy(const json& obj, const std::string& ctx) {
    if (!obj.contains("policy") || !obj["policy"].is_object()) {
        throw config_error(ctx + ": missing 'policy' object");
    }
    const json& p = obj["policy"];
    if (!p.contains("type") || !p["type"].is_string()) {
        throw config_error(ctx + ": policy needs a 'type' string (msp, elp or sps)");
    }
    const std::string type = p["type"].get<std::string>();
    const std::string pctx = ctx + ".policy";
    if (type == "msp") {
        return MspConfig::from_dbm(require_number(p, "p_th_dbm", pctx));
    }
    if (type == "elp") {
        return ElpConfig(require_number(p, "s_max_w_m2", pctx),
                         GainDb(require_number(p, "g_tx_db", pctx)),
                         GainDb(require_number(p, "l_tx_db", pctx)));
    }
    if (type == "sps") {
        return SpsConfig::from_dbm(require_number(p, "p_f_dbm", pctx),
                                   require_number(p, "b_mhz", pctx));
    }
    throw config_error(pctx + ": unknown type '" + type + "'");
}

Deployment parse_deployment(const json& obj, const std::string& ctx) {
    if (!obj.is_object()) {
        throw config_error(ctx + ": expected an object");
    }
    const double gamma = require_number(obj, "gamma", ctx);
    const double f_ghz = require_number(obj, "f_ghz", ctx);
    const double eta = require_number(obj, "eta", ctx);
    const double c_db = require_number(obj, "c_db", ctx);
    PropagationParams prop(gamma, f_ghz, eta, c_db);
    const int n_i = obj.contains("n_i") ? obj["n_i"].get<int>() : 0;
    LayoutSpec layout(obj.contains("zeta") ? obj["zeta"].get<double>() : 0.8660254037844386,
                      n_i == 0 ? 0 : 1);
    std::optional<PowerWatts> override_w;
    if (obj.contains("pe_override_w")) {
        override_w = PowerWatts(obj["pe_override_w"].get<double>());
    }
    try {
        return Deployment(require_number(obj, "d_min_m", ctx),
                          require_number(obj, "d_max_m", ctx), prop, parse_policy(obj, ctx),
                          layout, n_i, override_w);
    } catch (const std::invalid_argument& e) {
        throw config_error(ctx + ": " + e.what());
    }
}

}  // namespace

ComparisonSpec parse_comparison_spec(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("malformed JSON: ") + e.what());
    }
    if (!root.contains("dep1") || !root.contains("dep2")) {
        throw config_error("comparison spec needs 'dep1' and 'dep2' objects");
    }
    Deployment dep1 = parse_deployment(root["dep1"], "dep1");
    Deployment dep2 = parse_deployment(root["dep2"], "dep2");
    const double d_fx1 = root.contains("d_fx1_m") ? root["d_fx1_m"].get<double>()
                                                  : dep1.exclusion_radius_m + 1.0;
    const double d_fx2 = root.contains("d_fx2_m") ? root["d_fx2_m"].get<double>()
                                                  : dep2.exclusion_radius_m + 1.0;
    const double epsilon =
        root.contains("epsilon_m") ? root["epsilon_m"].get<double>() : 1.0;
    try {
        return ComparisonSpec(std::move(dep1), std::move(dep2), d_fx1, d_fx2, epsilon);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
}

ComparisonSpec load_comparison_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_comparison_spec(text.str());
    } catch (const config_error& e) {
        throw config_error(std::string(e.what()) + " (in '" + path + "')");
    }
}

PresetOverrides load_preset_overrides(const std::string& path) {
    const json root = load_json_file(path);
    if (!root.is_object()) {
        throw config_error("override file '" + path + "' must contain a JSON object");
    }
    PresetOverrides o;
    auto number = [&](const char* key) -> std::optional<double> {
        if (!root.contains(key)) return std::nullopt;
        if (!root[key].is_number()) {
            throw config_error("override '" + std::string(key) + "' must be numeric in '" +
                               path + "'");
        }
        return root[key].get<double>();
    };
    if (root.contains("policy")) o.policy = root["policy"].get<std::string>();
    if (root.contains("neighbors")) o.neighbors = root["neighbors"].get<int>();
    if (root.contains("method")) o.method = root["method"].get<std::string>();
    o.pixel_size_m = number("pixel_size_m");
    o.epsilon_m = number("epsilon_m");
    o.d_min2_m = number("d_min2_m");
    o.sps_power_per_block_dbm = number("p_f_dbm");
    o.sps_bandwidth1_mhz = number("b1_mhz");
    o.sps_bandwidth2_mhz = number("b2_mhz");
    return o;
}

namespace {

json report_to_json(const ComparisonReport& r) {
    json j;
    j["scenario"] = r.scenario;
    j["policy"] = to_string(r.policy);
    j["n_i"] = r.neighbor_sites;
    j["method"] = to_string(r.method);
    j["fixed_ratio"] = r.fixed_ratio;
    j["cell_ratio"] = r.cell_ratio;
    j["pe1_w"] = r.pe1_w;
    j["pe2_w"] = r.pe2_w;
    j["cell1_w"] = r.cell1_w;
    j["cell2_w"] = r.cell2_w;
    j["fx1_w"] = r.fx1_w;
    j["fx2_w"] = r.fx2_w;
    return j;
}

}  // namespace

void emit_report(const std::vector<ComparisonReport>& reports, ReportFormat format,
                 std::ostream& out) {
    if (reports.empty()) {
        throw config_error("emit_report: nothing to write");
    }
    if (format == ReportFormat::Json) {
        json root;
        root["schema_version"] = 1;
        root["reports"] = json::array();
        for (const auto& r : reports) {
            root["reports"].push_back(report_to_json(r));
        }
        out << root.dump(2) << '\n';
    } else {
        out << "scenario,policy,n_i,method,fixed_ratio,cell_ratio,"
               "pe1_w,pe2_w,cell1_w,cell2_w,fx1_w,fx2_w\n";
        for (const auto& r : reports) {
            out << r.scenario << ',' << to_string(r.policy) << ',' << r.neighbor_sites << ','
                << to_string(r.method) << ',' << format_double(r.fixed_ratio) << ','
                << format_double(r.cell_ratio) << ',' << format_double(r.pe1_w) << ','
                << format_double(r.pe2_w) << ',' << format_double(r.cell1_w) << ','
                << format_double(r.cell2_w) << ',' << format_double(r.fx1_w) << ','
                << format_double(r.fx2_w) << '\n';
        }
    }
    if (!out) {
        throw io_error("emit_report: stream write failed");
    }
}

void emit_report(const std::vector<ComparisonReport>& reports, ReportFormat format,
                 const std::string& path) {
    if (reports.empty()) {
        throw config_error("emit_report: nothing to write, not creating '" + path + "'");
    }
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    emit_report(reports, format, out);
    if (!out.flush()) {
        throw io_error("write to '" + path + "' failed");
    }
}

void write_metadata_sidecar(const std::vector<ComparisonReport>& reports,
                            const std::string& data_path) {
    json meta;
    meta["data_file"] = data_path;
    meta["runs"] = json::array();
    for (const auto& r : reports) {
        meta["runs"].push_back({{"scenario", r.scenario},
                                {"method", to_string(r.method)},
                                {"elapsed_s", r.elapsed_s}});
    }
    const std::string path = data_path + ".meta.json";
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot open '" + path + "' for writing");
    }
    out << meta.dump(2) << '\n';
    if (!out.flush()) {
        throw io_error("write to '" + path + "' failed");
    }
}

}  // namespace rfp
