#pragma once

#include <optional>
#include <stdexcept>

#include "rfp/geometry.hpp"
#include "rfp/power_policy.hpp"
#include "rfp/propagation.hpp"

namespace rfp {

/// One candidate deployment: a serving annulus [exclusion_radius,
/// coverage_radius], the propagation kernel, the radiated-power rule and
/// the neighbor layout. `neighbor_count` is the site count entering the
/// closed-form neighbor bound (0 or 6); the simulator instead places the
/// sites from `layout`.
struct Deployment {
    double exclusion_radius_m = 15.0;
    double coverage_radius_m = 500.0;
    PropagationParams prop;
    PowerPolicy policy;
    LayoutSpec layout;
    int neighbor_count = 0;
    /// When set, replaces the policy-derived radiated power. Used for
    /// what-if runs that vary the evaluation geometry while keeping the
    /// installed equipment (and its power) unchanged.
    std::optional<PowerWatts> emitted_power_override;

    Deployment() = default;
    Deployment(double exclusion_radius, double coverage_radius, PropagationParams propagation,
               PowerPolicy power_rule, LayoutSpec site_layout, int neighbors,
               std::optional<PowerWatts> power_override = std::nullopt)
        : exclusion_radius_m(exclusion_radius),
          coverage_radius_m(coverage_radius),
          prop(propagation),
          policy(std::move(power_rule)),
          layout(site_layout),
          neighbor_count(neighbors),
          emitted_power_override(power_override) {
        if (!(exclusion_radius_m > 0.0 && exclusion_radius_m < coverage_radius_m)) {
            throw std::invalid_argument(
                "Deployment: need 0 < exclusion radius < coverage radius");
        }
        if (neighbor_count != 0 && neighbor_count != 6) {
            throw std::invalid_argument("Deployment: neighbor count must be 0 or 6");
        }
        // The neighbor bound evaluates the kernel at (2*overlap - 1) times the
        // coverage radius, which must be a positive distance.
        if (neighbor_count > 0 && !(layout.overlap > 0.5)) {
            throw std::invalid_argument(
                "Deployment: neighbor bound requires overlap factor > 0.5");
        }
    }
};

/// Radiated power of the deployment under its configured rule (or the
/// explicit override when present).
PowerWatts emitted_power(const Deployment& dep);

/// A pair of candidate deployments plus the settings used to compare them:
/// per-deployment fixed evaluation distances and the half-width of the
/// fixed-distance averaging window used by the simulator.
struct ComparisonSpec {
    Deployment first;
    Deployment second;
    double fixed_distance1_m = 16.0;
    double fixed_distance2_m = 16.0;
    double window_halfwidth_m = 1.0;

    ComparisonSpec() = default;
    ComparisonSpec(Deployment dep1, Deployment dep2, double d_fx1, double d_fx2,
                   double epsilon_m = 1.0)
        : first(std::move(dep1)),
          second(std::move(dep2)),
          fixed_distance1_m(d_fx1),
          fixed_distance2_m(d_fx2),
          window_halfwidth_m(epsilon_m) {
        auto check = [](const Deployment& d, double d_fx, const char* which) {
            if (!(d_fx >= d.exclusion_radius_m && d_fx <= d.coverage_radius_m)) {
                throw std::invalid_argument(std::string("ComparisonSpec: fixed distance for ") +
                                            which + " deployment lies outside its annulus");
            }
        };
        check(first, fixed_distance1_m, "first");
        check(second, fixed_distance2_m, "second");
        if (!(window_halfwidth_m > 0.0)) {
            throw std::invalid_argument("ComparisonSpec: window half-width must be > 0");
        }
    }

    /// Fixed evaluation distance of deployment 1 as a fraction of its
    /// coverage radius. Derived, never stored.
    double beta1() const { return fixed_distance1_m / first.coverage_radius_m; }
    double beta2() const { return fixed_distance2_m / second.coverage_radius_m; }
};

}  // namespace rfp
