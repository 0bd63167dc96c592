#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rfp {

/// Radiated or received power in linear watts. All internal model
/// arithmetic happens in this representation; dBm appears only at
/// configuration and output boundaries.
struct PowerWatts {
    double value = 0.0;

    PowerWatts() = default;
    explicit PowerWatts(double watts) : value(watts) {
        if (!std::isfinite(watts) || watts < 0.0) {
            throw std::invalid_argument("PowerWatts: value must be finite and >= 0, got " +
                                        std::to_string(watts));
        }
    }
};

/// Power level in dBm (boundary representation only).
struct PowerDbm {
    double value = 0.0;

    PowerDbm() = default;
    explicit PowerDbm(double dbm) : value(dbm) {
        if (!std::isfinite(dbm)) {
            throw std::invalid_argument("PowerDbm: value must be finite");
        }
    }
};

/// Dimensionless gain or loss in dB.
struct GainDb {
    double value = 0.0;

    GainDb() = default;
    explicit GainDb(double db) : value(db) {
        if (!std::isfinite(db)) {
            throw std::invalid_argument("GainDb: value must be finite");
        }
    }
};

inline double db_to_linear(GainDb g) {
    return std::pow(10.0, g.value / 10.0);
}

inline PowerWatts dbm_to_watts(PowerDbm p) {
    return PowerWatts(std::pow(10.0, (p.value - 30.0) / 10.0));
}

inline PowerDbm watts_to_dbm(PowerWatts p) {
    if (p.value <= 0.0) {
        throw std::domain_error("watts_to_dbm: power must be > 0, got " +
                                std::to_string(p.value));
    }
    return PowerDbm(10.0 * std::log10(p.value) + 30.0);
}

}  // namespace rfp
