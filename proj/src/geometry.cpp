#include "rfp/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rfp {

double inter_site_distance(double coverage_radius_m, double overlap) {
    if (!(coverage_radius_m > 0.0)) {
        throw std::domain_error("inter_site_distance: coverage radius must be > 0");
    }
    return 2.0 * overlap * coverage_radius_m;
}

namespace {

SitePosition polar(double radius, double azimuth_rad) {
    return SitePosition{radius * std::cos(azimuth_rad), radius * std::sin(azimuth_rad)};
}

}  // namespace

std::vector<SitePosition> hex_neighbors(double coverage_radius_m, const LayoutSpec& layout) {
    const double d_site = inter_site_distance(coverage_radius_m, layout.overlap);
    const double step = std::numbers::pi / 3.0;

    std::vector<SitePosition> sites;
    if (layout.neighbor_levels >= 1) {
        for (int k = 0; k < 6; ++k) {
            sites.push_back(polar(d_site, k * step));
        }
    }
    if (layout.neighbor_levels >= 2) {
        for (int k = 0; k < 6; ++k) {
            sites.push_back(polar(2.0 * d_site, k * step));
            sites.push_back(polar(std::numbers::sqrt3 * d_site, step / 2.0 + k * step));
        }
    }
    return sites;
}

bool in_coverage(const SitePosition& p, double inner_m, double outer_m) {
    if (!(inner_m < outer_m)) {
        throw std::invalid_argument("in_coverage: inner radius " + std::to_string(inner_m) +
                                    " must be < outer radius " + std::to_string(outer_m));
    }
    const double d = std::hypot(p.x, p.y);
    return d >= inner_m && d <= outer_m;
}

}  // namespace rfp
