#pragma once

#include "tfcycle/cycle.hpp"

namespace tfcycle {

/// Mass flows and jet/flight velocities feeding the efficiency brackets.
struct KineticTerms {
    double hot_kgps = 0.0;    // core air flow
    double cold_kgps = 0.0;   // bypass flow
    double fuel_kgps = 0.0;
    double v8_mps = 0.0;      // hot jet
    double v9_mps = 0.0;      // cold jet
    double v0_mps = 0.0;      // flight speed
};

/// Kinetic-energy bracket [W] for the requested form. JetKinetic is the
/// total jet kinetic energy; Verbatim subtracts the flight-speed terms of
/// both streams (can go negative at high flight speed).
double kinetic_bracket(const KineticTerms& kt, ThermalEffForm form);

/// Thrust-specific fuel consumption [g/(kN s)]. Thrust must be positive.
double tsfc(double fuel_flow_kgps, double thrust_kn);

/// Thermal efficiency: kinetic bracket over twice the fuel heat input.
double thermal_efficiency(const KineticTerms& kt, double fhv_mj_per_kg,
                          ThermalEffForm form);

/// Propulsive efficiency, Verbatim form: thrust power over the kinetic
/// bracket. Returns 0 at v0 = 0.
double propulsive_efficiency(double thrust_kn, double v0_mps,
                             double kinetic_term_w);

/// Propulsive efficiency of the single equivalent jet:
/// 2 v0 / (2 v0 + F/mt). Returns 0 at v0 = 0.
double propulsive_efficiency_equivalent_jet(double thrust_kn, double v0_mps,
                                            double intake_kgps);

double overall_efficiency(double eta_thermal, double eta_propulsive);

/// Specific thrust [N s/kg].
double tsf(double thrust_kn, double intake_kgps);

/// NOx severity inputs: HPC exit pressure/temperature and the liquid
/// water-air ratio (0 for dry air).
struct EmissionInputs {
    double p4_kpa = 0.0;
    double t4_k = 0.0;
    double war = 0.0;
};

/// NOx severity index (P4/2965)^0.4 exp((T4-826)/194 + (6.29-100 war)/53.2).
double snox(const EmissionInputs& in);

/// NOx production rate [g/s] = 23 snox mf.
double nox_rate(double snox_index, double fuel_flow_kgps);

}  // namespace tfcycle
