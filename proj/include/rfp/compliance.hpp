#pragma once

#include "rfp/simulator.hpp"

namespace rfp {

struct ComplianceReport {
    double max_pd_w_m2 = 0.0;
    double limit_w_m2 = 0.0;
    double worst_x_m = 0.0;
    double worst_y_m = 0.0;
    double worst_distance_m = 0.0;
    bool passed = false;

    double margin_w_m2() const { return limit_w_m2 - max_pd_w_m2; }
};

/// Sums the point-source power density from the serving site and every
/// neighbor site of the grid at each unmasked pixel, and compares the
/// worst pixel against the deployment's configured limit. The deployment
/// must use the exposure-limit power rule, and the grid must have been
/// built for it.
ComplianceReport verify_elp_compliance(const Deployment& dep, const PixelGrid& grid);

}  // namespace rfp
