#pragma once

#include <stdexcept>
#include <variant>

#include "rfp/propagation.hpp"
#include "rfp/units.hpp"

namespace rfp {

/// Minimum-sensitivity power rule: radiate just enough that the received
/// power at the coverage edge equals the sensitivity threshold.
struct MspConfig {
    PowerWatts sensitivity_threshold;  // stored linear; dBm only at the boundary

    MspConfig() = default;
    explicit MspConfig(PowerWatts threshold) : sensitivity_threshold(threshold) {
        if (!(threshold.value > 0.0)) {
            throw std::invalid_argument("MspConfig: sensitivity threshold must be > 0 W");
        }
    }
    static MspConfig from_dbm(double threshold_dbm) {
        return MspConfig(dbm_to_watts(PowerDbm(threshold_dbm)));
    }
};

/// Exposure-limit power rule: radiate the maximum power that keeps the
/// point-source power density at the exclusion-zone boundary within the
/// regulatory limit.
struct ElpConfig {
    double pd_limit_w_m2 = 0.0;
    GainDb tx_gain;
    GainDb tx_loss;

    ElpConfig() = default;
    ElpConfig(double pd_limit, GainDb gain, GainDb loss)
        : pd_limit_w_m2(pd_limit), tx_gain(gain), tx_loss(loss) {
        if (!(pd_limit > 0.0)) {
            throw std::invalid_argument("ElpConfig: power-density limit must be > 0 W/m^2");
        }
    }
};

/// Spectrum-based power rule: a fixed power budget per 10 MHz block,
/// scaled by the licensed bandwidth.
struct SpsConfig {
    PowerWatts power_per_block;  // per 10 MHz, linear
    double bandwidth_mhz = 0.0;

    SpsConfig() = default;
    SpsConfig(PowerWatts per_block, double bandwidth)
        : power_per_block(per_block), bandwidth_mhz(bandwidth) {
        if (!(bandwidth > 0.0)) {
            throw std::invalid_argument("SpsConfig: bandwidth must be > 0 MHz");
        }
    }
    static SpsConfig from_dbm(double per_block_dbm, double bandwidth_mhz) {
        return SpsConfig(dbm_to_watts(PowerDbm(per_block_dbm)), bandwidth_mhz);
    }
};

using PowerPolicy = std::variant<MspConfig, ElpConfig, SpsConfig>;

/// Radiated power under the minimum-sensitivity rule:
/// threshold * d_max^gamma * f^eta * c. Received power at d_max then
/// equals the threshold by construction.
PowerWatts msp_power(const MspConfig& cfg, double coverage_radius_m,
                     const PropagationParams& params);

/// Radiated power under the exposure-limit rule:
/// 4*pi * d_min^2 * S_max * L_tx / G_tx. The point-source power density
/// at d_min then equals S_max by construction.
PowerWatts elp_power(const ElpConfig& cfg, double exclusion_radius_m);

/// Radiated power under the spectrum rule: P_block * B / 10.
PowerWatts sps_power(const SpsConfig& cfg);

/// Point-source power density S = P * G_tx / (4*pi * L_tx * d^2) in W/m^2.
double pd_point_source(PowerWatts emitted, const ElpConfig& cfg, double distance_m);

}  // namespace rfp
