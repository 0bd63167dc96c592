#pragma once

#include "rfp/deployment.hpp"

namespace rfp {

/// Average received power over the serving annulus, i.e. the area mean of
/// P / (d^gamma * f^eta * c) over exclusion_radius <= d <= coverage_radius.
/// Evaluated in closed form; strictly positive.
PowerWatts cell_rfp(const Deployment& dep);

/// Received power from the serving site at a fixed distance within the
/// annulus.
PowerWatts fixed_rfp(const Deployment& dep, double fixed_distance_m);

/// Worst-case total neighbor contribution: every one of the
/// `neighbor_count` sites is assumed at its closest possible distance to
/// the serving annulus, (2*overlap - 1) * coverage_radius. Zero when the
/// deployment has no neighbors.
PowerWatts neighbor_rfp_ub(const Deployment& dep);

PowerWatts total_cell_rfp(const Deployment& dep);
PowerWatts total_fixed_rfp(const Deployment& dep, double fixed_distance_m);

/// Deployment-1-over-deployment-2 ratios of the totals. A value above 1
/// means deployment 1 pollutes more.
double cell_ratio(const ComparisonSpec& spec);
double fixed_ratio(const ComparisonSpec& spec);

enum class ScenarioId { S1, S2, S3, S4, S5 };
enum class PolicyKind { Msp, Elp, Sps };
enum class RatioKind { FixedDistance, CellAverage };

/// Parameter bundle for the per-scenario printed ratio expressions.
/// Mirrors the built-in scenario presets with a shared exclusion radius.
struct RatioInputs {
    double coverage_radius1_m = 0.0;
    double coverage_radius2_m = 0.0;
    double path_loss_exp1 = 0.0;
    double path_loss_exp2 = 0.0;
    double freq1_ghz = 0.0;
    double freq2_ghz = 0.0;
    double freq_exp = 2.0;
    double sensitivity1_w = 0.0;
    double sensitivity2_w = 0.0;
    double exclusion_radius_m = 15.0;
    double fixed_distance1_m = 16.0;
    double fixed_distance2_m = 16.0;

    double delta_coverage() const { return coverage_radius1_m / coverage_radius2_m; }
    double delta_freq() const { return freq1_ghz / freq2_ghz; }
    double delta_sensitivity() const { return sensitivity1_w / sensitivity2_w; }
    /// Ratio of the two served annulus areas.
    double delta_area() const;
    double beta1() const { return fixed_distance1_m / coverage_radius1_m; }
};

/// The scenario-specific closed-form ratio, as printed per scenario and
/// policy for the no-neighbor case. Must agree with the generic ratio
/// operations whenever the inputs match the preset structure; kept as a
/// separate code path so that agreement is a meaningful check.
double scenario_ratio_expression(ScenarioId scenario, PolicyKind policy, RatioKind kind,
                                 const RatioInputs& in);

}  // namespace rfp
