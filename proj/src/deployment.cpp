#include "rfp/deployment.hpp"

namespace rfp {

PowerWatts emitted_power(const Deployment& dep) {
    if (dep.emitted_power_override) {
        return *dep.emitted_power_override;
    }
    struct Visitor {
        const Deployment& dep;
        PowerWatts operator()(const MspConfig& cfg) const {
            return msp_power(cfg, dep.coverage_radius_m, dep.prop);
        }
        PowerWatts operator()(const ElpConfig& cfg) const {
            return elp_power(cfg, dep.exclusion_radius_m);
        }
        PowerWatts operator()(const SpsConfig& cfg) const { return sps_power(cfg); }
    };
    return std::visit(Visitor{dep}, dep.policy);
}

}  // namespace rfp
