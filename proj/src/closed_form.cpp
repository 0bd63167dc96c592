#include "rfp/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rfp {

PowerWatts cell_rfp(const Deployment& dep) {
    const double pe = emitted_power(dep).value;
    const double gamma = dep.prop.path_loss_exp;
    const double d_min = dep.exclusion_radius_m;
    const double d_max = dep.coverage_radius_m;
    const double annulus = d_max * d_max - d_min * d_min;
    const double spectral = dep.prop.spectral_factor();

    // Area mean of the kernel over the annulus. In polar coordinates the
    // 2-D integral reduces to the radial antiderivative of r^(1-gamma);
    // the exponent 2 needs the logarithmic branch.
    if (gamma == 2.0) {
        return PowerWatts(2.0 * pe / (annulus * spectral) * std::log(d_max / d_min));
    }
    const double radial =
        std::pow(d_min, 2.0 - gamma) - std::pow(d_max, 2.0 - gamma);
    return PowerWatts(2.0 * pe / (annulus * spectral * (gamma - 2.0)) * radial);
}

PowerWatts fixed_rfp(const Deployment& dep, double fixed_distance_m) {
    if (!(fixed_distance_m >= dep.exclusion_radius_m &&
          fixed_distance_m <= dep.coverage_radius_m)) {
        throw std::domain_error("fixed_rfp: distance " + std::to_string(fixed_distance_m) +
                                " m outside serving annulus [" +
                                std::to_string(dep.exclusion_radius_m) + ", " +
                                std::to_string(dep.coverage_radius_m) + "]");
    }
    return received_power(emitted_power(dep), fixed_distance_m, dep.prop);
}

PowerWatts neighbor_rfp_ub(const Deployment& dep) {
    if (dep.neighbor_count == 0) {
        return PowerWatts(0.0);
    }
    // Closest approach of any neighbor site to the serving annulus.
    const double closest = (2.0 * dep.layout.overlap - 1.0) * dep.coverage_radius_m;
    return PowerWatts(dep.neighbor_count * emitted_power(dep).value *
                      path_gain(closest, dep.prop));
}

PowerWatts total_cell_rfp(const Deployment& dep) {
    return PowerWatts(cell_rfp(dep).value + neighbor_rfp_ub(dep).value);
}

PowerWatts total_fixed_rfp(const Deployment& dep, double fixed_distance_m) {
    return PowerWatts(fixed_rfp(dep, fixed_distance_m).value + neighbor_rfp_ub(dep).value);
}

double cell_ratio(const ComparisonSpec& spec) {
    return total_cell_rfp(spec.first).value / total_cell_rfp(spec.second).value;
}

double fixed_ratio(const ComparisonSpec& spec) {
    return total_fixed_rfp(spec.first, spec.fixed_distance1_m).value /
           total_fixed_rfp(spec.second, spec.fixed_distance2_m).value;
}

double RatioInputs::delta_area() const {
    const double a1 = coverage_radius1_m * coverage_radius1_m - exclusion_radius_m * exclusion_radius_m;
    const double a2 = coverage_radius2_m * coverage_radius2_m - exclusion_radius_m * exclusion_radius_m;
    return a1 / a2;
}

namespace {

// Ratio of the radial integrals of r^(1-gamma) over the two annuli,
// shared by the cell expressions of the mixed-exponent scenarios.
double radial_bracket(const RatioInputs& in) {
    const double g1 = in.path_loss_exp1;
    const double g2 = in.path_loss_exp2;
    const double num = std::pow(in.exclusion_radius_m, 2.0 - g1) -
                       std::pow(in.coverage_radius1_m, 2.0 - g1);
    const double den = std::pow(in.exclusion_radius_m, 2.0 - g2) -
                       std::pow(in.coverage_radius2_m, 2.0 - g2);
    return num / den;
}

// The mixed-exponent cell ratio shared by the sensitivity-rule S2/S5 rows
// (without the sensitivity factor):
//   delta(A)^-1 * d_max1^g1 / d_max2^g2 * (g2-2)/(g1-2) * radial_bracket.
double msp_cell_mixed(const RatioInputs& in) {
    return (1.0 / in.delta_area()) *
           (std::pow(in.coverage_radius1_m, in.path_loss_exp1) /
            std::pow(in.coverage_radius2_m, in.path_loss_exp2)) *
           ((in.path_loss_exp2 - 2.0) / (in.path_loss_exp1 - 2.0)) * radial_bracket(in);
}

// Equal-exponent cell ratio under the exposure-limit rule (equal powers):
//   delta(A)^-1 * delta(d_max)^-1 * (d_max1 - d_min)/(d_max2 - d_min).
// Follows from 1/d_min - 1/d_max = (d_max - d_min)/(d_min*d_max) at
// exponent 3.
double elp_cell_equal_exp(const RatioInputs& in) {
    return (1.0 / in.delta_area()) * (1.0 / in.delta_coverage()) *
           (in.coverage_radius1_m - in.exclusion_radius_m) /
           (in.coverage_radius2_m - in.exclusion_radius_m);
}

[[noreturn]] void unknown_combination(const char* what) {
    throw std::invalid_argument(std::string("scenario_ratio_expression: ") + what);
}

void require_shared_fixed_distance(const RatioInputs& in) {
    // The printed fixed-distance expressions for the mixed-exponent rows
    // are written in terms of beta1 alone, which is only meaningful when
    // both deployments are observed at the same distance.
    if (in.fixed_distance1_m != in.fixed_distance2_m) {
        throw std::invalid_argument(
            "scenario_ratio_expression: this scenario's fixed-distance expression "
            "assumes equal observation distances in both deployments");
    }
}

double msp_expression(ScenarioId scenario, RatioKind kind, const RatioInputs& in) {
    switch (scenario) {
        case ScenarioId::S1:
        case ScenarioId::S3:
            // Frequency terms cancel under the sensitivity rule, so the
            // frequency-change scenario S3 shares the S1 expressions.
            if (kind == RatioKind::FixedDistance) {
                return std::pow(in.delta_coverage(), 3.0);
            }
            return (1.0 / in.delta_area()) * std::pow(in.delta_coverage(), 2.0) *
                   (in.coverage_radius1_m - in.exclusion_radius_m) /
                   (in.coverage_radius2_m - in.exclusion_radius_m);
        case ScenarioId::S2:
            if (kind == RatioKind::FixedDistance) {
                require_shared_fixed_distance(in);
                return std::pow(in.delta_coverage(), in.path_loss_exp2) /
                       std::pow(in.beta1(), in.path_loss_exp1 - in.path_loss_exp2);
            }
            return msp_cell_mixed(in);
        case ScenarioId::S4:
            return in.delta_sensitivity();
        case ScenarioId::S5:
            if (kind == RatioKind::FixedDistance) {
                require_shared_fixed_distance(in);
                return std::pow(in.delta_coverage(), in.path_loss_exp2) * in.delta_sensitivity() /
                       std::pow(in.beta1(), in.path_loss_exp1 - in.path_loss_exp2);
            }
            return in.delta_sensitivity() * msp_cell_mixed(in);
    }
    unknown_combination("unknown scenario");
}

double elp_expression(ScenarioId scenario, RatioKind kind, const RatioInputs& in) {
    const double freq_term = std::pow(in.delta_freq(), -in.freq_exp);
    switch (scenario) {
        case ScenarioId::S1:
            if (kind == RatioKind::FixedDistance) {
                return 1.0;
            }
            return elp_cell_equal_exp(in);
        case ScenarioId::S2:
            if (kind == RatioKind::FixedDistance) {
                require_shared_fixed_distance(in);
                return std::pow(in.beta1() * in.coverage_radius1_m,
                                in.path_loss_exp2 - in.path_loss_exp1);
            }
            return (1.0 / in.delta_area()) *
                   ((in.path_loss_exp2 - 2.0) / (in.path_loss_exp1 - 2.0)) * radial_bracket(in);
        case ScenarioId::S3:
            if (kind == RatioKind::FixedDistance) {
                return freq_term;
            }
            return freq_term * elp_cell_equal_exp(in);
        case ScenarioId::S4:
            return freq_term;
        case ScenarioId::S5:
            if (kind == RatioKind::FixedDistance) {
                require_shared_fixed_distance(in);
                return std::pow(in.beta1() * in.coverage_radius1_m,
                                in.path_loss_exp2 - in.path_loss_exp1) *
                       freq_term;
            }
            return freq_term * (1.0 / in.delta_area()) *
                   ((in.path_loss_exp2 - 2.0) / (in.path_loss_exp1 - 2.0)) * radial_bracket(in);
    }
    unknown_combination("unknown scenario");
}

}  // namespace

double scenario_ratio_expression(ScenarioId scenario, PolicyKind policy, RatioKind kind,
                                 const RatioInputs& in) {
    switch (policy) {
        case PolicyKind::Msp:
            return msp_expression(scenario, kind, in);
        case PolicyKind::Elp:
            return elp_expression(scenario, kind, in);
        case PolicyKind::Sps:
            unknown_combination("no printed expressions for the spectrum rule");
    }
    unknown_combination("unknown policy");
}

}  // namespace rfp
