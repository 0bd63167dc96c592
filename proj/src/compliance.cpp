#include "rfp/compliance.hpp"

#include <cmath>
#include <numbers>

namespace rfp {

ComplianceReport verify_elp_compliance(const Deployment& dep, const PixelGrid& grid) {
    const auto* cfg = std::get_if<ElpConfig>(&dep.policy);
    if (cfg == nullptr) {
        throw std::invalid_argument(
            "verify_elp_compliance: deployment does not use the exposure-limit rule");
    }
    if (grid.inner_radius_m() != dep.exclusion_radius_m ||
        grid.outer_radius_m() != dep.coverage_radius_m) {
        throw std::invalid_argument("verify_elp_compliance: grid was built for a different annulus");
    }

    const double pe = emitted_power(dep).value;
    const double scale =
        pe * db_to_linear(cfg->tx_gain) / (4.0 * std::numbers::pi * db_to_linear(cfg->tx_loss));
    const auto& sites = grid.neighbor_sites();

    ComplianceReport report;
    report.limit_w_m2 = cfg->pd_limit_w_m2;
    report.max_pd_w_m2 = -1.0;

    for (int iy = 0; iy < grid.side(); ++iy) {
        for (int ix = 0; ix < grid.side(); ++ix) {
            if (grid.masked(ix, iy)) continue;
            const double cx = grid.center_x(ix);
            const double cy = grid.center_y(iy);
            const double d = std::hypot(cx, cy);
            double pd = scale / (d * d);
            for (const auto& s : sites) {
                const double dx = cx - s.x;
                const double dy = cy - s.y;
                pd += scale / (dx * dx + dy * dy);
            }
            if (pd > report.max_pd_w_m2) {
                report.max_pd_w_m2 = pd;
                report.worst_x_m = cx;
                report.worst_y_m = cy;
                report.worst_distance_m = d;
            }
        }
    }
    if (report.max_pd_w_m2 < 0.0) {
        throw empty_aggregate_error("verify_elp_compliance: grid has no unmasked pixels");
    }
    report.passed = report.max_pd_w_m2 <= report.limit_w_m2;
    return report;
}

}  // namespace rfp
