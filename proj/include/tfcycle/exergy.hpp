#pragma once

#include <string>
#include <vector>

#include "tfcycle/cycle.hpp"

namespace tfcycle {

struct FlowExergy {
    StationId station = StationId::ambient;
    double rate_kw = 0.0;
};

enum class Component { Fan, LPC, HPC, Combustor, HPT, LPT };

const char* component_name(Component c);

struct ComponentExergyRecord {
    Component component = Component::Fan;
    double eta_ex = 0.0;
    bool eta_defined = true;   // false when the defining ratio degenerates
    double destruction_kw = 0.0;
};

/// Second-law audit of one cycle. The balance
///   fuel + intake == thrust work + exhaust residual + sum(E_D) + offtake
/// closes to round-off by construction; the exhaust residual is the stream
/// exergy leaving through both nozzles beyond the delivered thrust work.
struct ExergyReport {
    std::vector<ComponentExergyRecord> components;
    double fuel_exergy_kw = 0.0;
    double intake_exergy_kw = 0.0;    // inlet-stream flow + kinetic exergy
    double thrust_exergy_kw = 0.0;    // F v0
    double exhaust_residual_kw = 0.0;
    double engine_eta_ex = 0.0;
    double total_destruction_kw = 0.0;  // components + exhaust residual
    double entropy_gen_kw_per_k = 0.0;
    bool combustor_verbatim = false;  // literal-formula efficiency was used

    const ComponentExergyRecord& at(Component c) const;
};

/// Specific flow exergy of an ideal-gas stream against the ambient dead
/// state [J/kg]: cp (T - T0) - T0 (cp ln(T/T0) - R ln(P/P0)).
double specific_flow_exergy(double t_k, double p_kpa,
                            const AmbientState& ambient,
                            const GasProperties& gas);

/// Flow exergy rate of a station [kW].
FlowExergy physical_exergy(const StationState& station,
                           const AmbientState& ambient,
                           const GasProperties& gas);

/// Chemical exergy rate of the fuel stream [kW], from the tabulated value.
double fuel_exergy_rate(double fuel_flow_kgps, const Fuel& fuel);

/// Per-component efficiencies and destruction rates for the six audited
/// components.
std::vector<ComponentExergyRecord> component_exergy_audit(
    const StationTable& stations, const PowerLedger& ledger,
    double fuel_exergy_kw, const AmbientState& ambient,
    const GasPropertyMap& gas, bool combustor_verbatim = false);

/// Engine-level exergetic efficiency F v0 / fuel exergy; 0 at v0 = 0.
double engine_exergetic_efficiency(double thrust_kn, double v0_mps,
                                   double fuel_exergy_kw);

/// Gouy-Stodola: total destruction over the ambient dead-state temperature.
double entropy_generation(const std::vector<ComponentExergyRecord>& components,
                          double exhaust_residual_kw, double t0_k);

/// Full audit of a completed cycle.
ExergyReport audit_cycle(const CycleResult& cycle, const EngineSpec& spec);

}  // namespace tfcycle
