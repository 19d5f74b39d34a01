#pragma once

#include <string>
#include <vector>

#include "tfcycle/gas.hpp"

namespace tfcycle {

/// Flight point: Mach number, altitude and the chiller temperature shift
/// applied to the inlet stream (negative = cooling).
struct FlightCondition {
    double mach = 0.0;
    double altitude_m = 0.0;
    double delta_t_k = 0.0;
};

inline FlightCondition takeoff_condition() { return {0.0, 0.0, 0.0}; }
inline FlightCondition ondesign_condition() { return {0.85, 10000.0, 0.0}; }

/// Numbering follows the usual separate-flow layout: 0 ambient, 1 inlet
/// (post-chiller), 2 diffuser exit / fan face, 31 fan exit, 32 LPC exit,
/// 4 HPC exit, 5 combustor exit, 6 HPT exit, 7 LPT exit, 8 hot nozzle
/// exit, 9 cold nozzle exit.
enum class StationId : int {
    ambient = 0,
    inlet = 1,
    diffuser_exit = 2,
    fan_exit = 31,
    lpc_exit = 32,
    hpc_exit = 4,
    combustor_exit = 5,
    hpt_exit = 6,
    lpt_exit = 7,
    hot_nozzle_exit = 8,
    cold_nozzle_exit = 9,
};

const char* station_name(StationId id);

struct StationState {
    StationId id = StationId::ambient;
    double t_k = 0.0;
    double p_kpa = 0.0;
    double mdot_kgps = 0.0;
};

struct StationTable {
    std::vector<StationState> rows;

    const StationState& at(StationId id) const;
    void set(StationId id, double t_k, double p_kpa, double mdot_kgps);
};

/// Shaft power bookkeeping [kW]. The spool balances
///   w_hpt == w_hpc + w_offtake   and   w_lpt == w_fan + w_lpc
/// hold by construction.
struct PowerLedger {
    double w_fan_kw = 0.0;
    double w_lpc_kw = 0.0;
    double w_hpc_kw = 0.0;
    double w_hpt_kw = 0.0;
    double w_lpt_kw = 0.0;
    double w_offtake_kw = 0.0;
};

struct NozzleExit {
    double velocity_mps = 0.0;
    double exit_p_kpa = 0.0;
    double exit_t_k = 0.0;
    double exit_area_m2 = 0.0;
    bool choked = false;
};

/// How the actual intake mass flow is scaled from the design value
/// (design flow is anchored at sea-level static, no cooling):
///   FanFaceDensity - proportional to diffuser-exit (fan face) density
///   InletDensity   - proportional to pre-diffuser static density
///   CorrectedFlow  - constant corrected flow w sqrt(T2)/P2
enum class IntakeModel { FanFaceDensity, InletDensity, CorrectedFlow };

/// Which kinetic-energy bracket feeds the thermal efficiency:
///   JetKinetic - total jet kinetic energy over 2 mf FHV
///   Verbatim   - jet KE minus the flight-speed terms of both streams
enum class ThermalEffForm { JetKinetic, Verbatim };

/// Propulsive efficiency form:
///   EquivalentJet - Froude efficiency of the single equivalent jet,
///                   2 v0 / (2 v0 + F/mt)
///   Verbatim      - F v0 over the Verbatim kinetic bracket
enum class PropulsiveEffForm { EquivalentJet, Verbatim };

/// Constant-cp property sets per engine segment. Cold covers diffuser,
/// fan, compressors and the bypass nozzle; hot covers both turbines and
/// the core nozzle; combustor_cp_avg is the mean cp used for heat addition.
struct GasPropertyMap {
    GasProperties cold{1005.0, 1.4};
    GasProperties hot{1150.0, 1.33};
    double combustor_cp_avg = 1200.0;

    const GasProperties& at(StationId station) const;
};

/// Full design-point definition. Table values follow the GEnx-1B70 class
/// engine; efficiencies and property sets not publicly documented are
/// calibration defaults and can be overridden in the config file.
struct EngineSpec {
    double tit_k = 1695.0;  // turbine inlet (combustor exit) temperature
    double pi_fan = 1.5;
    double pi_lpc = 1.3;
    double pi_hpc = 23.0;
    double bypass_ratio = 9.1;
    double design_mass_flow_kgps = 1155.43;  // at sea-level static, dT = 0
    double eta_fan = 0.91;
    double eta_lpc = 0.91;
    double eta_hpc = 0.91;
    double eta_hpt = 0.85;
    double eta_lpt = 0.85;
    double eta_nozzle_hot = 0.90;
    double eta_nozzle_cold = 0.91;
    double eta_combustor = 0.99;
    double combustor_pressure_drop_frac = 0.055;
    double aux_offtake_kw = 50.0;
    double chiller_cop = 6.0;
    GasPropertyMap gas;
    IntakeModel intake_model = IntakeModel::FanFaceDensity;
    ThermalEffForm thermal_form = ThermalEffForm::JetKinetic;
    PropulsiveEffForm propulsive_form = PropulsiveEffForm::EquivalentJet;
    // Literal-formula combustor exergetic efficiency (fuel exergy moved to
    // the denominator's negative side). Off by default: it can exceed 1 and
    // is kept only for comparison against the published formula set.
    bool combustor_exergy_verbatim = false;

    void validate() const;  // throws PreconditionError on bad invariants
};

/// Scalar performance record. Field names double as the serialization
/// schema.
struct CyclePerformance {
    double thrust_kn = 0.0;
    double tsfc_g_per_kns = 0.0;
    double eta_thermal = 0.0;
    double eta_propulsive = 0.0;
    double eta_overall = 0.0;
    double eta_exergetic = 0.0;
    double tsf_ns_per_kg = 0.0;
    double fuel_flow_kgps = 0.0;
    double snox = 0.0;
    double nox_g_per_s = 0.0;
    double offtake_kw = 0.0;
};

/// Everything produced by one design-point evaluation.
struct CycleResult {
    StationTable stations;
    PowerLedger ledger;
    CyclePerformance perf;
    NozzleExit hot_nozzle;
    NozzleExit cold_nozzle;
    AmbientState ambient;
    InletState inlet;
    Fuel fuel;
    double v0_mps = 0.0;
    double intake_kgps = 0.0;
    double hot_kgps = 0.0;
    double cold_kgps = 0.0;
    double fuel_kgps = 0.0;
    double heat_rate_kw = 0.0;
    double thrust_hot_kn = 0.0;
    double thrust_cold_kn = 0.0;
};

// ---- individual cycle legs (pure functions) --------------------------

/// Ideal ram recovery: total state at the diffuser exit.
StationState diffuser(const InletState& inlet, double mach,
                      const GasProperties& gas);

struct CompressorResult {
    StationState out;
    double specific_work_j_per_kg = 0.0;
};

/// Adiabatic compression at pressure ratio pi and isentropic efficiency
/// eta. Used for the fan, LPC and HPC.
CompressorResult compress(const StationState& in, double pi, double eta,
                          const GasProperties& gas);

struct FlowSplit {
    double hot_kgps = 0.0;
    double cold_kgps = 0.0;
};

/// Bypass split: hot (core) flow = total / (alpha + 1).
FlowSplit split_flow(double total_kgps, double bypass_ratio);

struct CombustorResult {
    StationState out;
    double fuel_flow_kgps = 0.0;
    double heat_rate_kw = 0.0;
};

/// Heat addition from the HPC exit state to the turbine inlet
/// temperature. Fuel flow from the heating value and combustion
/// efficiency; exit pressure drops by drop_frac.
CombustorResult combustor(const StationState& in, double tit_k,
                          const Fuel& fuel, double eta_combustor,
                          double drop_frac, double combustor_cp_avg);

/// Expand until the shaft extracts required_power. Exit temperature from
/// the power balance, exit pressure from the isentropic-efficiency
/// relation.
StationState turbine_expand_to_power(const StationState& in,
                                     double required_power_kw, double eta,
                                     const GasProperties& gas,
                                     StationId out_id);

/// Convergent nozzle with a choking check. Below the critical pressure
/// ratio the flow expands fully to ambient; above it the exit sticks at
/// the sonic state and the remaining pressure shows up as pressure thrust.
NozzleExit nozzle(const StationState& in, double eta,
                  const GasProperties& gas, double ambient_p_kpa);

struct ThrustResult {
    double hot_kn = 0.0;
    double cold_kn = 0.0;
    double total_kn = 0.0;
};

/// Momentum plus pressure-area thrust of both streams [kN].
ThrustResult thrust(const NozzleExit& hot, const NozzleExit& cold,
                    double hot_kgps, double cold_kgps, double fuel_kgps,
                    double v0_mps, double ambient_p_kpa);

/// Actual intake flow for the given model, anchored at the sea-level
/// static design value.
double intake_mass_flow(const EngineSpec& spec, const InletState& inlet,
                        double mach);

/// Run the complete design-point cycle.
CycleResult run_cycle(const EngineSpec& spec, const FlightCondition& cond,
                      const Fuel& fuel);

}  // namespace tfcycle
