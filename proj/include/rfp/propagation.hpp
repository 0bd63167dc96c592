#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rfp/units.hpp"

namespace rfp {

/// Deterministic distance/frequency power-law channel. Distances are in
/// meters and frequencies in GHz, so a 32.4 dB baseline reproduces the
/// free-space fixed term. No shadowing or fading margins.
struct PropagationParams {
    double path_loss_exp = 2.0;  // distance exponent, [2, 4]
    double freq_ghz = 1.0;
    double freq_exp = 2.0;
    double baseline_db = 0.0;

    PropagationParams() = default;
    PropagationParams(double path_loss_exponent, double frequency_ghz,
                      double frequency_exponent, double baseline_const_db)
        : path_loss_exp(path_loss_exponent),
          freq_ghz(frequency_ghz),
          freq_exp(frequency_exponent),
          baseline_db(baseline_const_db) {
        // The cell-average integral diverges for exponents below 2, so bad
        // values are rejected here rather than at evaluation time.
        if (!(path_loss_exp >= 2.0 && path_loss_exp <= 4.0)) {
            throw std::invalid_argument("PropagationParams: path-loss exponent must be in [2, 4], got " +
                                        std::to_string(path_loss_exp));
        }
        if (!(freq_ghz > 0.0) || !std::isfinite(freq_ghz)) {
            throw std::invalid_argument("PropagationParams: frequency must be > 0 GHz");
        }
        if (!(freq_exp >= 0.0) || !std::isfinite(freq_exp)) {
            throw std::invalid_argument("PropagationParams: frequency exponent must be >= 0");
        }
        if (!std::isfinite(baseline_db)) {
            throw std::invalid_argument("PropagationParams: baseline constant must be finite");
        }
    }

    /// 10^(baseline_db/10), the linear-domain fixed loss factor.
    double baseline_linear() const { return db_to_linear(GainDb(baseline_db)); }

    /// f^eta * c, the distance-independent part of the kernel denominator.
    double spectral_factor() const {
        return std::pow(freq_ghz, freq_exp) * baseline_linear();
    }
};

/// Dimensionless gain 1 / (d^gamma * f^eta * c). Strictly decreasing in d.
inline double path_gain(double distance_m, const PropagationParams& params) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("path_gain: distance must be > 0 m, got " +
                                std::to_string(distance_m));
    }
    return 1.0 / (std::pow(distance_m, params.path_loss_exp) * params.spectral_factor());
}

inline PowerWatts received_power(PowerWatts emitted, double distance_m,
                                 const PropagationParams& params) {
    return PowerWatts(emitted.value * path_gain(distance_m, params));
}

}  // namespace rfp
