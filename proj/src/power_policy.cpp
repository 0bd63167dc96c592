#include "rfp/power_policy.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rfp {

PowerWatts msp_power(const MspConfig& cfg, double coverage_radius_m,
                     const PropagationParams& params) {
    if (!(coverage_radius_m > 0.0)) {
        throw std::domain_error("msp_power: coverage radius must be > 0");
    }
    return PowerWatts(cfg.sensitivity_threshold.value *
                      std::pow(coverage_radius_m, params.path_loss_exp) *
                      params.spectral_factor());
}

PowerWatts elp_power(const ElpConfig& cfg, double exclusion_radius_m) {
    if (!(exclusion_radius_m > 0.0)) {
        throw std::domain_error("elp_power: exclusion radius must be > 0");
    }
    return PowerWatts(4.0 * std::numbers::pi * exclusion_radius_m * exclusion_radius_m *
                      cfg.pd_limit_w_m2 * db_to_linear(cfg.tx_loss) / db_to_linear(cfg.tx_gain));
}

PowerWatts sps_power(const SpsConfig& cfg) {
    return PowerWatts(cfg.power_per_block.value * cfg.bandwidth_mhz / 10.0);
}

double pd_point_source(PowerWatts emitted, const ElpConfig& cfg, double distance_m) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("pd_point_source: distance must be > 0, got " +
                                std::to_string(distance_m));
    }
    return emitted.value * db_to_linear(cfg.tx_gain) /
           (4.0 * std::numbers::pi * db_to_linear(cfg.tx_loss) * distance_m * distance_m);
}

}  // namespace rfp
