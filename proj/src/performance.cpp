#include "tfcycle/performance.hpp"

#include <cmath>

namespace tfcycle {

double kinetic_bracket(const KineticTerms& kt, ThermalEffForm form) {
    const double jet = (kt.hot_kgps + kt.fuel_kgps) * kt.v8_mps * kt.v8_mps +
                       kt.cold_kgps * kt.v9_mps * kt.v9_mps;
    if (form == ThermalEffForm::JetKinetic) return jet;
    const double total = kt.hot_kgps + kt.cold_kgps;
    return jet - total * kt.v0_mps * kt.v0_mps -
           kt.cold_kgps * kt.v0_mps * kt.v0_mps;
}

double tsfc(double fuel_flow_kgps, double thrust_kn) {
    if (!(thrust_kn > 0.0))
        throw PreconditionError("tsfc undefined for nonpositive thrust");
    return fuel_flow_kgps * 1000.0 / thrust_kn;
}

double thermal_efficiency(const KineticTerms& kt, double fhv_mj_per_kg,
                          ThermalEffForm form) {
    if (!(kt.fuel_kgps > 0.0)) return 0.0;
    return kinetic_bracket(kt, form) /
           (2.0 * kt.fuel_kgps * fhv_mj_per_kg * 1e6);
}

double propulsive_efficiency(double thrust_kn, double v0_mps,
                             double kinetic_term_w) {
    if (v0_mps == 0.0) return 0.0;
    return thrust_kn * 1000.0 * v0_mps / kinetic_term_w;
}

double propulsive_efficiency_equivalent_jet(double thrust_kn, double v0_mps,
                                            double intake_kgps) {
    if (v0_mps == 0.0) return 0.0;
    if (!(intake_kgps > 0.0))
        throw PreconditionError("propulsive efficiency needs intake flow");
    return 2.0 * v0_mps / (2.0 * v0_mps + thrust_kn * 1000.0 / intake_kgps);
}

double overall_efficiency(double eta_thermal, double eta_propulsive) {
    return eta_thermal * eta_propulsive;
}

double tsf(double thrust_kn, double intake_kgps) {
    if (!(intake_kgps > 0.0))
        throw PreconditionError("tsf undefined for nonpositive intake flow");
    return thrust_kn * 1000.0 / intake_kgps;
}

double snox(const EmissionInputs& in) {
    return std::pow(in.p4_kpa / 2965.0, 0.4) *
           std::exp((in.t4_k - 826.0) / 194.0 +
                    (6.29 - 100.0 * in.war) / 53.2);
}

double nox_rate(double snox_index, double fuel_flow_kgps) {
    if (fuel_flow_kgps < 0.0)
        throw PreconditionError("fuel flow must be nonnegative");
    return 23.0 * snox_index * fuel_flow_kgps;
}

}  // namespace tfcycle
