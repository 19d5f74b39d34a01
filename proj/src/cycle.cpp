#include "tfcycle/cycle.hpp"

#include <cmath>
#include <sstream>

#include "tfcycle/performance.hpp"

namespace tfcycle {

const char* station_name(StationId id) {
    switch (id) {
        case StationId::ambient: return "ambient";
        case StationId::inlet: return "inlet";
        case StationId::diffuser_exit: return "diffuserExit";
        case StationId::fan_exit: return "fanExit";
        case StationId::lpc_exit: return "lpcExit";
        case StationId::hpc_exit: return "hpcExit";
        case StationId::combustor_exit: return "combustorExit";
        case StationId::hpt_exit: return "hptExit";
        case StationId::lpt_exit: return "lptExit";
        case StationId::hot_nozzle_exit: return "hotNozzleExit";
        case StationId::cold_nozzle_exit: return "coldNozzleExit";
    }
    return "unknown";
}

const StationState& StationTable::at(StationId id) const {
    for (const StationState& s : rows) {
        if (s.id == id) return s;
    }
    throw Error(std::string("station not recorded: ") + station_name(id));
}

void StationTable::set(StationId id, double t_k, double p_kpa,
                       double mdot_kgps) {
    for (StationState& s : rows) {
        if (s.id == id) {
            s = {id, t_k, p_kpa, mdot_kgps};
            return;
        }
    }
    rows.push_back({id, t_k, p_kpa, mdot_kgps});
}

const GasProperties& GasPropertyMap::at(StationId station) const {
    switch (station) {
        case StationId::combustor_exit:
        case StationId::hpt_exit:
        case StationId::lpt_exit:
        case StationId::hot_nozzle_exit:
            return hot;
        default:
            return cold;
    }
}

void EngineSpec::validate() const {
    auto check = [](bool ok, const char* msg) {
        if (!ok) throw PreconditionError(msg);
    };
    check(tit_k > 400.0, "turbine inlet temperature must exceed 400 K");
    check(pi_fan >= 1.0 && pi_lpc >= 1.0 && pi_hpc >= 1.0,
          "pressure ratios must be >= 1");
    check(bypass_ratio > 0.0, "bypass ratio must be positive");
    check(design_mass_flow_kgps > 0.0, "design mass flow must be positive");
    for (double eta : {eta_fan, eta_lpc, eta_hpc, eta_hpt, eta_lpt,
                       eta_nozzle_hot, eta_nozzle_cold, eta_combustor}) {
        check(eta > 0.0 && eta <= 1.0, "efficiencies must lie in (0, 1]");
    }
    check(combustor_pressure_drop_frac >= 0.0 &&
              combustor_pressure_drop_frac <= 0.1,
          "combustor pressure drop fraction must lie in [0, 0.1]");
    check(chiller_cop > 0.0, "chiller COP must be positive");
    check(aux_offtake_kw >= 0.0, "auxiliary off-take must be nonnegative");
    check(gas.cold.k > 1.0 && gas.hot.k > 1.0, "specific-heat ratios must exceed 1");
    check(gas.cold.cp_j_per_kgk > 0.0 && gas.hot.cp_j_per_kgk > 0.0 &&
              gas.combustor_cp_avg > 0.0,
          "specific heats must be positive");
}

StationState diffuser(const InletState& inlet, double mach,
                      const GasProperties& gas) {
    if (mach < 0.0) throw PreconditionError("Mach number must be nonnegative");
    const double ratio = 1.0 + 0.5 * (gas.k - 1.0) * mach * mach;
    StationState out;
    out.id = StationId::diffuser_exit;
    out.t_k = inlet.t_k * ratio;
    out.p_kpa = inlet.p_kpa * std::pow(ratio, gas.k / (gas.k - 1.0));
    return out;
}

CompressorResult compress(const StationState& in, double pi, double eta,
                          const GasProperties& gas) {
    if (pi < 1.0) throw PreconditionError("compressor pressure ratio must be >= 1");
    if (!(eta > 0.0 && eta <= 1.0))
        throw PreconditionError("compressor efficiency must lie in (0, 1]");
    CompressorResult r;
    r.out = in;
    r.out.p_kpa = in.p_kpa * pi;
    const double rise =
        in.t_k / eta * (std::pow(pi, (gas.k - 1.0) / gas.k) - 1.0);
    r.out.t_k = in.t_k + rise;
    r.specific_work_j_per_kg = gas.cp_j_per_kgk * rise;
    return r;
}

FlowSplit split_flow(double total_kgps, double bypass_ratio) {
    if (!(bypass_ratio > 0.0))
        throw PreconditionError("bypass ratio must be positive");
    FlowSplit s;
    s.hot_kgps = total_kgps / (bypass_ratio + 1.0);
    s.cold_kgps = total_kgps - s.hot_kgps;
    return s;
}

CombustorResult combustor(const StationState& in, double tit_k,
                          const Fuel& fuel, double eta_combustor,
                          double drop_frac, double combustor_cp_avg) {
    if (tit_k < in.t_k)
        throw InfeasibleCycleError(
            "turbine inlet temperature below compressor delivery; no heat "
            "addition possible",
            static_cast<int>(StationId::combustor_exit));
    CombustorResult r;
    r.heat_rate_kw =
        in.mdot_kgps * combustor_cp_avg * (tit_k - in.t_k) / 1000.0;
    r.fuel_flow_kgps =
        r.heat_rate_kw / (fuel.fhv_mj_per_kg * 1000.0 * eta_combustor);
    r.out.id = StationId::combustor_exit;
    r.out.t_k = tit_k;
    r.out.p_kpa = in.p_kpa * (1.0 - drop_frac);
    r.out.mdot_kgps = in.mdot_kgps + r.fuel_flow_kgps;
    return r;
}

StationState turbine_expand_to_power(const StationState& in,
                                     double required_power_kw, double eta,
                                     const GasProperties& gas,
                                     StationId out_id) {
    if (required_power_kw < 0.0)
        throw PreconditionError("turbine power demand must be nonnegative");
    const double enthalpy_kw =
        in.mdot_kgps * gas.cp_j_per_kgk * in.t_k / 1000.0;
    if (required_power_kw >= enthalpy_kw)
        throw InfeasibleCycleError(
            "turbine power demand exceeds available stream enthalpy",
            static_cast<int>(out_id));
    StationState out = in;
    out.id = out_id;
    out.t_k = in.t_k - required_power_kw * 1000.0 /
                           (in.mdot_kgps * gas.cp_j_per_kgk);
    const double bracket = 1.0 - (1.0 / eta) * (1.0 - out.t_k / in.t_k);
    if (bracket <= 0.0)
        throw InfeasibleCycleError(
            "turbine expansion exceeds the isentropic limit",
            static_cast<int>(out_id));
    out.p_kpa = in.p_kpa * std::pow(bracket, gas.k / (gas.k - 1.0));
    return out;
}

NozzleExit nozzle(const StationState& in, double eta,
                  const GasProperties& gas, double ambient_p_kpa) {
    if (in.p_kpa < ambient_p_kpa)
        throw InfeasibleCycleError("nozzle feed pressure below ambient",
                                   static_cast<int>(in.id));
    NozzleExit e;
    const double k = gas.k;
    const double r_gas = gas.gas_constant();
    const double m = (k - 1.0) / k;
    // Critical pressure ratio including the nozzle efficiency.
    const double pr_crit =
        std::pow(1.0 - (1.0 / eta) * (k - 1.0) / (k + 1.0), -k / (k - 1.0));
    const double pr = in.p_kpa / ambient_p_kpa;
    if (pr < pr_crit) {
        e.choked = false;
        e.exit_p_kpa = ambient_p_kpa;
        const double expansion = 1.0 - std::pow(1.0 / pr, m);
        e.velocity_mps = std::sqrt(2.0 * eta * (k / (k - 1.0)) * r_gas *
                                   in.t_k * expansion);
        e.exit_t_k = in.t_k * (1.0 - eta * expansion);
    } else {
        e.choked = true;
        e.exit_p_kpa = in.p_kpa / pr_crit;
        e.exit_t_k = in.t_k * 2.0 / (k + 1.0);  // sonic exit
        e.velocity_mps = std::sqrt(k * r_gas * e.exit_t_k);
    }
    if (e.velocity_mps > 0.0 && in.mdot_kgps > 0.0) {
        const double rho = e.exit_p_kpa * 1000.0 / (r_gas * e.exit_t_k);
        e.exit_area_m2 = in.mdot_kgps / (rho * e.velocity_mps);
    }
    return e;
}

ThrustResult thrust(const NozzleExit& hot, const NozzleExit& cold,
                    double hot_kgps, double cold_kgps, double fuel_kgps,
                    double v0_mps, double ambient_p_kpa) {
    ThrustResult t;
    t.hot_kn = ((hot_kgps + fuel_kgps) * hot.velocity_mps -
                hot_kgps * v0_mps) /
                   1000.0 +
               hot.exit_area_m2 * (hot.exit_p_kpa - ambient_p_kpa);
    t.cold_kn = cold_kgps * (cold.velocity_mps - v0_mps) / 1000.0 +
                cold.exit_area_m2 * (cold.exit_p_kpa - ambient_p_kpa);
    t.total_kn = t.hot_kn + t.cold_kn;
    return t;
}

double intake_mass_flow(const EngineSpec& spec, const InletState& inlet,
                        double mach) {
    // Reference: sea-level static, no cooling.
    const GasProperties& air = spec.gas.cold;
    const double t_ref = kSeaLevelTempK;
    const double p_ref = kSeaLevelPressureKPa;

    InletState in_ref;
    in_ref.t_k = t_ref;
    in_ref.p_kpa = p_ref;
    const StationState face = diffuser(inlet, mach, air);
    const StationState face_ref = diffuser(in_ref, 0.0, air);

    switch (spec.intake_model) {
        case IntakeModel::FanFaceDensity: {
            const double rho = face.p_kpa / face.t_k;
            const double rho_ref = face_ref.p_kpa / face_ref.t_k;
            return spec.design_mass_flow_kgps * rho / rho_ref;
        }
        case IntakeModel::InletDensity: {
            const double rho = inlet.p_kpa / inlet.t_k;
            const double rho_ref = in_ref.p_kpa / in_ref.t_k;
            return spec.design_mass_flow_kgps * rho / rho_ref;
        }
        case IntakeModel::CorrectedFlow: {
            const double w = face.p_kpa / std::sqrt(face.t_k);
            const double w_ref = face_ref.p_kpa / std::sqrt(face_ref.t_k);
            return spec.design_mass_flow_kgps * w / w_ref;
        }
    }
    throw Error("unhandled intake model");
}

CycleResult run_cycle(const EngineSpec& spec, const FlightCondition& cond,
                      const Fuel& fuel) {
    spec.validate();
    if (cond.mach < 0.0)
        throw PreconditionError("Mach number must be nonnegative");

    CycleResult r;
    r.fuel = fuel;
    r.ambient = isa_ambient(cond.altitude_m);

    // Inlet temperature first; the chiller load needs the intake flow,
    // which itself depends only on the post-chiller temperature.
    InletState pre;
    pre.t_k = r.ambient.t_k + cond.delta_t_k;
    pre.p_kpa = r.ambient.p_kpa;
    pre.delta_t_k = cond.delta_t_k;
    r.intake_kgps = intake_mass_flow(spec, pre, cond.mach);
    r.inlet = apply_inlet_cooling(r.ambient, cond.delta_t_k, r.intake_kgps,
                                  spec.chiller_cop);

    const GasProperties& air = spec.gas.cold;
    const GasProperties& hot_gas = spec.gas.hot;
    r.v0_mps =
        cond.mach * std::sqrt(air.k * air.gas_constant() * r.ambient.t_k);

    StationTable& st = r.stations;
    st.set(StationId::ambient, r.ambient.t_k, r.ambient.p_kpa, r.intake_kgps);
    st.set(StationId::inlet, r.inlet.t_k, r.inlet.p_kpa, r.intake_kgps);

    StationState s2 = diffuser(r.inlet, cond.mach, air);
    s2.mdot_kgps = r.intake_kgps;
    st.set(s2.id, s2.t_k, s2.p_kpa, s2.mdot_kgps);

    // Fan works on the whole stream.
    CompressorResult fan = compress(s2, spec.pi_fan, spec.eta_fan, air);
    fan.out.id = StationId::fan_exit;
    st.set(fan.out.id, fan.out.t_k, fan.out.p_kpa, r.intake_kgps);

    const FlowSplit split = split_flow(r.intake_kgps, spec.bypass_ratio);
    r.hot_kgps = split.hot_kgps;
    r.cold_kgps = split.cold_kgps;

    StationState lpc_in = fan.out;
    lpc_in.mdot_kgps = r.hot_kgps;
    CompressorResult lpc = compress(lpc_in, spec.pi_lpc, spec.eta_lpc, air);
    lpc.out.id = StationId::lpc_exit;
    st.set(lpc.out.id, lpc.out.t_k, lpc.out.p_kpa, r.hot_kgps);

    CompressorResult hpc = compress(lpc.out, spec.pi_hpc, spec.eta_hpc, air);
    hpc.out.id = StationId::hpc_exit;
    st.set(hpc.out.id, hpc.out.t_k, hpc.out.p_kpa, r.hot_kgps);

    PowerLedger& w = r.ledger;
    w.w_fan_kw = r.intake_kgps * fan.specific_work_j_per_kg / 1000.0;
    w.w_lpc_kw = r.hot_kgps * lpc.specific_work_j_per_kg / 1000.0;
    w.w_hpc_kw = r.hot_kgps * hpc.specific_work_j_per_kg / 1000.0;
    w.w_offtake_kw =
        spec.aux_offtake_kw + r.inlet.chiller_load_kw / spec.chiller_cop;

    CombustorResult cc =
        combustor(hpc.out, spec.tit_k, fuel, spec.eta_combustor,
                  spec.combustor_pressure_drop_frac, spec.gas.combustor_cp_avg);
    r.fuel_kgps = cc.fuel_flow_kgps;
    r.heat_rate_kw = cc.heat_rate_kw;
    st.set(cc.out.id, cc.out.t_k, cc.out.p_kpa, cc.out.mdot_kgps);

    w.w_hpt_kw = w.w_hpc_kw + w.w_offtake_kw;
    StationState s6 = turbine_expand_to_power(cc.out, w.w_hpt_kw, spec.eta_hpt,
                                              hot_gas, StationId::hpt_exit);
    st.set(s6.id, s6.t_k, s6.p_kpa, s6.mdot_kgps);

    w.w_lpt_kw = w.w_fan_kw + w.w_lpc_kw;
    StationState s7 = turbine_expand_to_power(s6, w.w_lpt_kw, spec.eta_lpt,
                                              hot_gas, StationId::lpt_exit);
    st.set(s7.id, s7.t_k, s7.p_kpa, s7.mdot_kgps);

    r.hot_nozzle = nozzle(s7, spec.eta_nozzle_hot, hot_gas, r.ambient.p_kpa);
    st.set(StationId::hot_nozzle_exit, r.hot_nozzle.exit_t_k,
           r.hot_nozzle.exit_p_kpa, s7.mdot_kgps);

    StationState cold_in = fan.out;
    cold_in.mdot_kgps = r.cold_kgps;
    r.cold_nozzle = nozzle(cold_in, spec.eta_nozzle_cold, air, r.ambient.p_kpa);
    st.set(StationId::cold_nozzle_exit, r.cold_nozzle.exit_t_k,
           r.cold_nozzle.exit_p_kpa, r.cold_kgps);

    const ThrustResult f =
        thrust(r.hot_nozzle, r.cold_nozzle, r.hot_kgps, r.cold_kgps,
               r.fuel_kgps, r.v0_mps, r.ambient.p_kpa);
    r.thrust_hot_kn = f.hot_kn;
    r.thrust_cold_kn = f.cold_kn;

    CyclePerformance& perf = r.perf;
    perf.thrust_kn = f.total_kn;
    perf.fuel_flow_kgps = r.fuel_kgps;
    perf.offtake_kw = w.w_offtake_kw;
    perf.tsfc_g_per_kns = tsfc(r.fuel_kgps, f.total_kn);
    perf.tsf_ns_per_kg = tsf(f.total_kn, r.intake_kgps);

    KineticTerms kt{r.hot_kgps,
                    r.cold_kgps,
                    r.fuel_kgps,
                    r.hot_nozzle.velocity_mps,
                    r.cold_nozzle.velocity_mps,
                    r.v0_mps};
    perf.eta_thermal =
        thermal_efficiency(kt, fuel.fhv_mj_per_kg, spec.thermal_form);
    perf.eta_propulsive =
        spec.propulsive_form == PropulsiveEffForm::EquivalentJet
            ? propulsive_efficiency_equivalent_jet(f.total_kn, r.v0_mps,
                                                   r.intake_kgps)
            : propulsive_efficiency(f.total_kn, r.v0_mps,
                                    kinetic_bracket(kt, ThermalEffForm::Verbatim));
    perf.eta_overall = overall_efficiency(perf.eta_thermal, perf.eta_propulsive);

    const double fuel_exergy_kw =
        r.fuel_kgps * fuel.chem_exergy_mj_per_kg * 1000.0;
    perf.eta_exergetic =
        fuel_exergy_kw > 0.0
            ? f.total_kn * r.v0_mps / fuel_exergy_kw
            : 0.0;

    perf.snox = snox({hpc.out.p_kpa, hpc.out.t_k, 0.0});
    perf.nox_g_per_s = nox_rate(perf.snox, r.fuel_kgps);
    return r;
}

}  // namespace tfcycle
