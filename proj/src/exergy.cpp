#include "tfcycle/exergy.hpp"

#include <cmath>

namespace tfcycle {

const char* component_name(Component c) {
    switch (c) {
        case Component::Fan: return "fan";
        case Component::LPC: return "LPC";
        case Component::HPC: return "HPC";
        case Component::Combustor: return "combustor";
        case Component::HPT: return "HPT";
        case Component::LPT: return "LPT";
    }
    return "unknown";
}

const ComponentExergyRecord& ExergyReport::at(Component c) const {
    for (const auto& rec : components) {
        if (rec.component == c) return rec;
    }
    throw Error(std::string("component not audited: ") + component_name(c));
}

double specific_flow_exergy(double t_k, double p_kpa,
                            const AmbientState& ambient,
                            const GasProperties& gas) {
    const double t0 = ambient.t_k;
    const double enthalpy = gas.cp_j_per_kgk * (t_k - t0);
    const double entropy = gas.cp_j_per_kgk * std::log(t_k / t0) -
                           gas.gas_constant() * std::log(p_kpa / ambient.p_kpa);
    return enthalpy - t0 * entropy;
}

FlowExergy physical_exergy(const StationState& station,
                           const AmbientState& ambient,
                           const GasProperties& gas) {
    FlowExergy fx;
    fx.station = station.id;
    fx.rate_kw = station.mdot_kgps *
                 specific_flow_exergy(station.t_k, station.p_kpa, ambient, gas) /
                 1000.0;
    return fx;
}

double fuel_exergy_rate(double fuel_flow_kgps, const Fuel& fuel) {
    if (fuel_flow_kgps < 0.0)
        throw PreconditionError("fuel flow must be nonnegative");
    return fuel_flow_kgps * fuel.chem_exergy_mj_per_kg * 1000.0;
}

namespace {

double station_exergy_kw(const StationTable& st, StationId id,
                         const AmbientState& ambient, const GasPropertyMap& gas,
                         double mdot_override_kgps = -1.0) {
    StationState s = st.at(id);
    if (mdot_override_kgps >= 0.0) s.mdot_kgps = mdot_override_kgps;
    return physical_exergy(s, ambient, gas.at(id)).rate_kw;
}

// Work-absorbing machine (fan, compressors): eta = dPsi / W, E_D = W - dPsi.
ComponentExergyRecord absorber(Component c, double w_kw, double psi_in_kw,
                               double psi_out_kw) {
    ComponentExergyRecord rec;
    rec.component = c;
    rec.destruction_kw = w_kw + psi_in_kw - psi_out_kw;
    if (w_kw > 0.0) {
        rec.eta_ex = (psi_out_kw - psi_in_kw) / w_kw;
    } else {
        rec.eta_defined = false;
    }
    return rec;
}

// Work-producing machine (turbines): eta = W / dPsi, E_D = dPsi - W.
ComponentExergyRecord producer(Component c, double w_kw, double psi_in_kw,
                               double psi_out_kw) {
    ComponentExergyRecord rec;
    rec.component = c;
    const double drop = psi_in_kw - psi_out_kw;
    rec.destruction_kw = drop - w_kw;
    if (drop > 0.0) {
        rec.eta_ex = w_kw / drop;
    } else {
        rec.eta_defined = false;
    }
    return rec;
}

}  // namespace

std::vector<ComponentExergyRecord> component_exergy_audit(
    const StationTable& stations, const PowerLedger& ledger,
    double fuel_exergy_kw, const AmbientState& ambient,
    const GasPropertyMap& gas, bool combustor_verbatim) {
    const double m_hot = stations.at(StationId::lpc_exit).mdot_kgps;

    const double psi2 = station_exergy_kw(stations, StationId::diffuser_exit,
                                          ambient, gas);
    const double psi31_full =
        station_exergy_kw(stations, StationId::fan_exit, ambient, gas);
    const double psi31_hot = station_exergy_kw(stations, StationId::fan_exit,
                                               ambient, gas, m_hot);
    const double psi32 =
        station_exergy_kw(stations, StationId::lpc_exit, ambient, gas);
    const double psi4 =
        station_exergy_kw(stations, StationId::hpc_exit, ambient, gas);
    const double psi5 =
        station_exergy_kw(stations, StationId::combustor_exit, ambient, gas);
    const double psi6 =
        station_exergy_kw(stations, StationId::hpt_exit, ambient, gas);
    const double psi7 =
        station_exergy_kw(stations, StationId::lpt_exit, ambient, gas);

    std::vector<ComponentExergyRecord> out;
    out.push_back(absorber(Component::Fan, ledger.w_fan_kw, psi2, psi31_full));
    out.push_back(absorber(Component::LPC, ledger.w_lpc_kw, psi31_hot, psi32));
    out.push_back(absorber(Component::HPC, ledger.w_hpc_kw, psi32, psi4));

    // Combustor: fuel chemical exergy counts as an input. The verbatim
    // variant keeps the published efficiency denominator (inlet minus fuel
    // exergy); destruction is the same residual either way.
    ComponentExergyRecord cc;
    cc.component = Component::Combustor;
    cc.destruction_kw = psi4 + fuel_exergy_kw - psi5;
    const double cc_in =
        combustor_verbatim ? psi4 - fuel_exergy_kw : psi4 + fuel_exergy_kw;
    if (cc_in != 0.0) {
        cc.eta_ex = psi5 / cc_in;
    } else {
        cc.eta_defined = false;
    }
    out.push_back(cc);

    out.push_back(producer(Component::HPT, ledger.w_hpt_kw, psi5, psi6));
    out.push_back(producer(Component::LPT, ledger.w_lpt_kw, psi6, psi7));
    return out;
}

double engine_exergetic_efficiency(double thrust_kn, double v0_mps,
                                   double fuel_exergy_kw) {
    if (v0_mps == 0.0) return 0.0;
    if (!(fuel_exergy_kw > 0.0))
        throw PreconditionError("exergetic efficiency needs fuel exergy");
    return thrust_kn * v0_mps / fuel_exergy_kw;
}

double entropy_generation(const std::vector<ComponentExergyRecord>& components,
                          double exhaust_residual_kw, double t0_k) {
    if (!(t0_k > 0.0))
        throw PreconditionError("dead-state temperature must be positive");
    double total = exhaust_residual_kw;
    for (const auto& rec : components) total += rec.destruction_kw;
    return total / t0_k;
}

ExergyReport audit_cycle(const CycleResult& cycle, const EngineSpec& spec) {
    ExergyReport rep;
    const AmbientState& amb = cycle.ambient;

    rep.fuel_exergy_kw = fuel_exergy_rate(cycle.fuel_kgps, cycle.fuel);
    rep.combustor_verbatim = spec.combustor_exergy_verbatim;
    rep.components = component_exergy_audit(
        cycle.stations, cycle.ledger, rep.fuel_exergy_kw, amb, spec.gas,
        spec.combustor_exergy_verbatim);

    // Intake stream, taken at the fan face: inlet flow exergy plus the ram
    // recovery of the ideal diffuser (which destroys nothing). At zero
    // cooling this equals m (psi_inlet + v0^2/2).
    rep.intake_exergy_kw =
        physical_exergy(cycle.stations.at(StationId::diffuser_exit), amb,
                        spec.gas.cold)
            .rate_kw;

    rep.thrust_exergy_kw = cycle.perf.thrust_kn * cycle.v0_mps;

    // Residual: what both nozzle feeds still carry beyond the thrust work.
    const double psi7 = physical_exergy(cycle.stations.at(StationId::lpt_exit),
                                        amb, spec.gas.hot)
                            .rate_kw;
    StationState cold_feed = cycle.stations.at(StationId::fan_exit);
    cold_feed.mdot_kgps = cycle.cold_kgps;
    const double psi31_cold =
        physical_exergy(cold_feed, amb, spec.gas.cold).rate_kw;
    rep.exhaust_residual_kw = psi7 + psi31_cold - rep.thrust_exergy_kw;

    rep.engine_eta_ex = engine_exergetic_efficiency(
        cycle.perf.thrust_kn, cycle.v0_mps, rep.fuel_exergy_kw);

    rep.total_destruction_kw = rep.exhaust_residual_kw;
    for (const auto& rec : rep.components)
        rep.total_destruction_kw += rec.destruction_kw;
    rep.entropy_gen_kw_per_k =
        entropy_generation(rep.components, rep.exhaust_residual_kw, amb.t_k);
    return rep;
}

}  // namespace tfcycle
