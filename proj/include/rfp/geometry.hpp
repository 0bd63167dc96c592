#pragma once

#include <stdexcept>
#include <vector>

namespace rfp {

/// Planar site coordinates in meters; the serving site sits at the origin.
struct SitePosition {
    double x = 0.0;
    double y = 0.0;
};

/// Regular-lattice layout parameters. `overlap` is the geometric factor
/// relating inter-site distance to the coverage radius (sqrt(3)/2 for a
/// hexagonal tessellation without coverage holes). `neighbor_levels`
/// selects how many lattice rings around the serving site are generated:
/// 0 (none), 1 (the 6 adjacent sites) or 2 (adds the 12 next-ring sites).
struct LayoutSpec {
    double overlap = 0.8660254037844386;  // sqrt(3)/2
    int neighbor_levels = 0;

    LayoutSpec() = default;
    LayoutSpec(double overlap_factor, int levels)
        : overlap(overlap_factor), neighbor_levels(levels) {
        if (!(overlap > 0.0 && overlap < 1.0)) {
            throw std::invalid_argument("LayoutSpec: overlap factor must be in (0, 1)");
        }
        if (levels < 0 || levels > 2) {
            throw std::invalid_argument("LayoutSpec: neighbor levels must be 0, 1 or 2");
        }
    }
};

/// d_site = 2 * overlap * coverage_radius.
double inter_site_distance(double coverage_radius_m, double overlap);

/// Positions of the neighboring sites on the triangular lattice.
/// Level 1: 6 sites at d_site, azimuths k*60 deg.
/// Level 2: 6 more at 2*d_site (k*60 deg) and 6 at sqrt(3)*d_site
/// (30 + k*60 deg), i.e. the full set of sites adjacent to the first ring.
std::vector<SitePosition> hex_neighbors(double coverage_radius_m, const LayoutSpec& layout);

/// True iff the point lies in the closed annulus [inner_m, outer_m]
/// around the origin.
bool in_coverage(const SitePosition& p, double inner_m, double outer_m);

}  // namespace rfp
