#include <cmath>

#include "doctest.h"
#include "tfcycle/cycle.hpp"

using namespace tfcycle;

namespace {

GasProperties hot_gas_r287() {
    // cp chosen so the derived gas constant is exactly 287 at k = 1.33
    return GasProperties{1.33 * 287.0 / 0.33, 1.33};
}

}  // namespace

TEST_CASE("diffuser at Mach 0 is the identity") {
    InletState in;
    in.t_k = 250.0;
    in.p_kpa = 30.0;
    const StationState out = diffuser(in, 0.0, standard_air());
    CHECK(out.t_k == doctest::Approx(250.0).epsilon(1e-15));
    CHECK(out.p_kpa == doctest::Approx(30.0).epsilon(1e-15));
}

TEST_CASE("diffuser ram rise at Mach 0.85") {
    InletState in;
    in.t_k = 223.15;
    in.p_kpa = 26.44;
    const StationState out = diffuser(in, 0.85, standard_air());
    CHECK(out.t_k == doctest::Approx(255.395175).epsilon(1e-9));
    CHECK(out.p_kpa == doctest::Approx(42.404968).epsilon(1e-6));
}

TEST_CASE("compressor at unity pressure ratio does nothing") {
    StationState in{StationId::diffuser_exit, 288.15, 101.325, 100.0};
    const CompressorResult r = compress(in, 1.0, 0.91, standard_air());
    CHECK(r.out.t_k == doctest::Approx(288.15).epsilon(1e-15));
    CHECK(r.specific_work_j_per_kg == doctest::Approx(0.0));
}

TEST_CASE("fan temperature rise at pi=1.5, eta=0.91") {
    StationState in{StationId::diffuser_exit, 288.15, 101.325, 100.0};
    const CompressorResult r = compress(in, 1.5, 0.91, standard_air());
    CHECK(r.out.t_k == doctest::Approx(327.042100).epsilon(1e-9));
    CHECK(r.out.p_kpa == doctest::Approx(151.9875).epsilon(1e-12));
    CHECK(r.specific_work_j_per_kg ==
          doctest::Approx(1005.0 * (327.042100 - 288.15)).epsilon(1e-7));
}

TEST_CASE("compressor rejects pressure ratios below one") {
    StationState in{StationId::diffuser_exit, 288.15, 101.325, 100.0};
    CHECK_THROWS_AS(compress(in, 0.8, 0.91, standard_air()), PreconditionError);
}

TEST_CASE("bypass split") {
    const FlowSplit s = split_flow(1155.43, 9.1);
    CHECK(s.hot_kgps == doctest::Approx(114.399010).epsilon(1e-9));
    CHECK(s.cold_kgps == doctest::Approx(1041.030990).epsilon(1e-9));
    CHECK(s.hot_kgps + s.cold_kgps == doctest::Approx(1155.43).epsilon(1e-15));

    const FlowSplit zero = split_flow(0.0, 9.1);
    CHECK(zero.hot_kgps == 0.0);
    CHECK(zero.cold_kgps == 0.0);

    // alpha -> 0+: everything goes through the core
    const FlowSplit tiny = split_flow(100.0, 1e-12);
    CHECK(tiny.hot_kgps == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("combustor heat addition and fuel flow") {
    StationState in{StationId::hpc_exit, 900.0, 4000.0, 100.0};
    const Fuel jp10 = fuel_lookup("JP10");
    const CombustorResult r = combustor(in, 1695.0, jp10, 0.99, 0.04, 1148.0);
    CHECK(r.heat_rate_kw == doctest::Approx(91266.0).epsilon(1e-12));
    CHECK(r.fuel_flow_kgps == doctest::Approx(2.191037).epsilon(1e-6));
    CHECK(r.out.p_kpa == doctest::Approx(3840.0).epsilon(1e-12));
    CHECK(r.out.mdot_kgps == doctest::Approx(100.0 + r.fuel_flow_kgps));

    // hydrogen needs less fuel in the ratio of heating values
    const Fuel h2 = fuel_lookup("hydrogen");
    const CombustorResult rh = combustor(in, 1695.0, h2, 0.99, 0.04, 1148.0);
    CHECK(rh.fuel_flow_kgps / r.fuel_flow_kgps ==
          doctest::Approx(42.075 / 118.429).epsilon(1e-12));
}

TEST_CASE("combustor boundary and infeasible cases") {
    StationState in{StationId::hpc_exit, 900.0, 4000.0, 100.0};
    const Fuel jp10 = fuel_lookup("JP10");
    const CombustorResult r = combustor(in, 900.0, jp10, 0.99, 0.04, 1148.0);
    CHECK(r.heat_rate_kw == 0.0);
    CHECK(r.fuel_flow_kgps == 0.0);
    CHECK_THROWS_AS(combustor(in, 899.0, jp10, 0.99, 0.04, 1148.0),
                    InfeasibleCycleError);
}

TEST_CASE("idle turbine does not change the state") {
    StationState in{StationId::combustor_exit, 1695.0, 4000.0, 116.0};
    const StationState out =
        turbine_expand_to_power(in, 0.0, 0.92, hot_gas_r287(), StationId::hpt_exit);
    CHECK(out.t_k == doctest::Approx(1695.0).epsilon(1e-15));
    CHECK(out.p_kpa == doctest::Approx(4000.0).epsilon(1e-15));
}

TEST_CASE("turbine power balance and expansion relation") {
    StationState in{StationId::combustor_exit, 1695.0, 4000.0, 116.0};
    GasProperties gas{1148.0, 1.33};
    const StationState out = turbine_expand_to_power(in, 40000.0, 0.92, gas,
                                                     StationId::hpt_exit);
    CHECK(out.t_k == doctest::Approx(1394.627538).epsilon(1e-9));
    CHECK(out.p_kpa / in.p_kpa == doctest::Approx(0.422177390).epsilon(1e-8));
}

TEST_CASE("turbine over-extraction is infeasible") {
    StationState in{StationId::combustor_exit, 1000.0, 4000.0, 10.0};
    GasProperties gas{1148.0, 1.33};
    // stream enthalpy flow is ~11.5 MW; asking for more must fail
    CHECK_THROWS_AS(
        turbine_expand_to_power(in, 2e4, 0.92, gas, StationId::hpt_exit),
        InfeasibleCycleError);
    // below the enthalpy limit but beyond the isentropic bracket
    CHECK_THROWS_AS(
        turbine_expand_to_power(in, 1.1e4, 0.92, gas, StationId::hpt_exit),
        InfeasibleCycleError);
}

TEST_CASE("nozzle with no pressure ratio produces no velocity") {
    StationState in{StationId::lpt_exit, 800.0, 26.44, 100.0};
    const NozzleExit e = nozzle(in, 0.98, hot_gas_r287(), 26.44);
    CHECK(e.velocity_mps == 0.0);
    CHECK(!e.choked);
    CHECK(e.exit_p_kpa == doctest::Approx(26.44));
}

TEST_CASE("unchoked nozzle velocity matches the expansion formula") {
    StationState in{StationId::lpt_exit, 800.0, 1.5 * 26.44, 100.0};
    const NozzleExit e = nozzle(in, 0.98, hot_gas_r287(), 26.44);
    CHECK(!e.choked);
    CHECK(e.velocity_mps == doctest::Approx(416.638438).epsilon(1e-9));
    CHECK(e.exit_p_kpa == doctest::Approx(26.44));
    CHECK(e.exit_area_m2 > 0.0);
}

TEST_CASE("nozzle chokes above the critical pressure ratio") {
    // critical ratio for eta 0.98, k 1.33 is about 1.876
    StationState in{StationId::lpt_exit, 800.0, 4.0 * 26.44, 100.0};
    const NozzleExit e = nozzle(in, 0.98, hot_gas_r287(), 26.44);
    CHECK(e.choked);
    CHECK(e.exit_p_kpa > 26.44);
    CHECK(e.exit_p_kpa ==
          doctest::Approx(4.0 * 26.44 / 1.875934).epsilon(1e-6));
    // sonic exit
    const double a = std::sqrt(1.33 * 287.0 * e.exit_t_k);
    CHECK(e.velocity_mps == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("nozzle below ambient feed pressure is infeasible") {
    StationState in{StationId::lpt_exit, 800.0, 20.0, 100.0};
    CHECK_THROWS_AS(nozzle(in, 0.98, hot_gas_r287(), 26.44),
                    InfeasibleCycleError);
}

TEST_CASE("static thrust with fully expanded nozzles is pure momentum") {
    NozzleExit hot;
    hot.velocity_mps = 500.0;
    hot.exit_p_kpa = 101.325;
    hot.exit_area_m2 = 0.5;
    NozzleExit cold;
    cold.velocity_mps = 260.0;
    cold.exit_p_kpa = 101.325;
    cold.exit_area_m2 = 3.0;
    const ThrustResult t = thrust(hot, cold, 100.0, 1000.0, 2.5, 0.0, 101.325);
    CHECK(t.hot_kn == doctest::Approx(102.5 * 500.0 / 1000.0).epsilon(1e-12));
    CHECK(t.cold_kn == doctest::Approx(1000.0 * 260.0 / 1000.0).epsilon(1e-12));
    CHECK(t.total_kn == doctest::Approx(t.hot_kn + t.cold_kn));
}

TEST_CASE("choked exit contributes pressure thrust") {
    NozzleExit hot;
    hot.velocity_mps = 500.0;
    hot.exit_p_kpa = 120.0;
    hot.exit_area_m2 = 0.5;
    hot.choked = true;
    NozzleExit cold;
    cold.velocity_mps = 0.0;
    cold.exit_p_kpa = 101.325;
    const ThrustResult t = thrust(hot, cold, 100.0, 0.0, 0.0, 0.0, 101.325);
    CHECK(t.hot_kn ==
          doctest::Approx(50.0 + 0.5 * (120.0 - 101.325)).epsilon(1e-12));
}

TEST_CASE("intake flow equals the design value at the reference condition") {
    EngineSpec spec;
    InletState in;
    in.t_k = kSeaLevelTempK;
    in.p_kpa = kSeaLevelPressureKPa;
    CHECK(intake_mass_flow(spec, in, 0.0) ==
          doctest::Approx(spec.design_mass_flow_kgps).epsilon(1e-12));
}

TEST_CASE("intake flow rises when the inlet is cooled") {
    EngineSpec spec;
    InletState warm, cool;
    warm.t_k = kSeaLevelTempK;
    warm.p_kpa = kSeaLevelPressureKPa;
    cool = warm;
    cool.t_k -= 20.0;
    for (IntakeModel m : {IntakeModel::FanFaceDensity, IntakeModel::InletDensity,
                          IntakeModel::CorrectedFlow}) {
        spec.intake_model = m;
        CHECK(intake_mass_flow(spec, cool, 0.0) >
              intake_mass_flow(spec, warm, 0.0));
    }
}

TEST_CASE("full cycle: station pressures rise to the combustor then fall") {
    const EngineSpec spec;
    const CycleResult r =
        run_cycle(spec, ondesign_condition(), fuel_lookup("JP10"));
    const StationId rising[] = {StationId::diffuser_exit, StationId::fan_exit,
                                StationId::lpc_exit, StationId::hpc_exit};
    for (int i = 1; i < 4; ++i) {
        CHECK(r.stations.at(rising[i]).p_kpa > r.stations.at(rising[i - 1]).p_kpa);
    }
    const StationId falling[] = {StationId::combustor_exit, StationId::hpt_exit,
                                 StationId::lpt_exit, StationId::hot_nozzle_exit};
    for (int i = 1; i < 4; ++i) {
        CHECK(r.stations.at(falling[i]).p_kpa <
              r.stations.at(falling[i - 1]).p_kpa);
    }
}

TEST_CASE("full cycle: shaft power balances close") {
    const EngineSpec spec;
    for (const FlightCondition& fc :
         {takeoff_condition(), ondesign_condition()}) {
        const CycleResult r = run_cycle(spec, fc, fuel_lookup("JP10"));
        const PowerLedger& w = r.ledger;
        CHECK(std::abs(w.w_hpt_kw - w.w_hpc_kw - w.w_offtake_kw) /
                  w.w_hpt_kw <=
              1e-6);
        CHECK(std::abs(w.w_lpt_kw - w.w_fan_kw - w.w_lpc_kw) / w.w_lpt_kw <=
              1e-6);
    }
}

TEST_CASE("full cycle: mass closure at every boundary") {
    const EngineSpec spec;
    const CycleResult r =
        run_cycle(spec, ondesign_condition(), fuel_lookup("JP10"));
    CHECK(r.stations.at(StationId::hot_nozzle_exit).mdot_kgps ==
          doctest::Approx(r.hot_kgps + r.fuel_kgps).epsilon(1e-12));
    CHECK(r.stations.at(StationId::cold_nozzle_exit).mdot_kgps ==
          doctest::Approx(r.cold_kgps).epsilon(1e-12));
    CHECK(r.intake_kgps ==
          doctest::Approx(r.hot_kgps + r.cold_kgps).epsilon(1e-12));
}

TEST_CASE("fuel flow orders by heating value at identical conditions") {
    const EngineSpec spec;
    const double mf_h2 =
        run_cycle(spec, ondesign_condition(), fuel_lookup("hydrogen")).fuel_kgps;
    const double mf_ng =
        run_cycle(spec, ondesign_condition(), fuel_lookup("natural-gas")).fuel_kgps;
    const double mf_jp10 =
        run_cycle(spec, ondesign_condition(), fuel_lookup("JP10")).fuel_kgps;
    CHECK(mf_h2 < mf_ng);
    CHECK(mf_ng < mf_jp10);
}

TEST_CASE("take-off nozzles run unchoked, so thrust is pure momentum") {
    const EngineSpec spec;
    const CycleResult r =
        run_cycle(spec, takeoff_condition(), fuel_lookup("JP10"));
    CHECK(!r.hot_nozzle.choked);
    CHECK(!r.cold_nozzle.choked);
    const double momentum_hot =
        (r.hot_kgps + r.fuel_kgps) * r.hot_nozzle.velocity_mps / 1000.0;
    const double momentum_cold = r.cold_kgps * r.cold_nozzle.velocity_mps / 1000.0;
    CHECK(r.thrust_hot_kn == doctest::Approx(momentum_hot).epsilon(1e-12));
    CHECK(r.thrust_cold_kn == doctest::Approx(momentum_cold).epsilon(1e-12));
}

TEST_CASE("cooling the inlet raises intake flow, thrust and fuel flow") {
    const EngineSpec spec;
    FlightCondition cooled = ondesign_condition();
    cooled.delta_t_k = -20.0;
    const CycleResult base =
        run_cycle(spec, ondesign_condition(), fuel_lookup("JP10"));
    const CycleResult cold = run_cycle(spec, cooled, fuel_lookup("JP10"));
    CHECK(cold.intake_kgps > base.intake_kgps);
    CHECK(cold.perf.thrust_kn > base.perf.thrust_kn);
    CHECK(cold.perf.fuel_flow_kgps > base.perf.fuel_flow_kgps);
    // chiller off-take shows up in the ledger
    CHECK(cold.ledger.w_offtake_kw > spec.aux_offtake_kw);
    CHECK(cold.perf.snox < base.perf.snox);
}

TEST_CASE("infeasible cycles carry the failing station") {
    EngineSpec spec;
    spec.tit_k = 500.0;  // below the HPC delivery temperature
    try {
        run_cycle(spec, ondesign_condition(), fuel_lookup("JP10"));
        FAIL("expected InfeasibleCycleError");
    } catch (const InfeasibleCycleError& e) {
        CHECK(e.station == static_cast<int>(StationId::combustor_exit));
    }
}

TEST_CASE("engine spec validation rejects bad invariants") {
    EngineSpec spec;
    spec.eta_fan = 1.2;
    CHECK_THROWS_AS(spec.validate(), PreconditionError);
    spec = EngineSpec{};
    spec.combustor_pressure_drop_frac = 0.2;
    CHECK_THROWS_AS(spec.validate(), PreconditionError);
    spec = EngineSpec{};
    spec.pi_fan = 0.9;
    CHECK_THROWS_AS(spec.validate(), PreconditionError);
}
