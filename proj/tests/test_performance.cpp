#include <cmath>
#include <random>

#include "doctest.h"
#include "tfcycle/performance.hpp"

using namespace tfcycle;

TEST_CASE("tsfc unit arithmetic") {
    CHECK(tsfc(1.0, 100.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK_THROWS_AS(tsfc(1.0, 0.0), PreconditionError);
    CHECK_THROWS_AS(tsfc(1.0, -5.0), PreconditionError);
}

TEST_CASE("thermal efficiency vanishes without jet kinetic energy") {
    KineticTerms kt;
    kt.hot_kgps = 100.0;
    kt.cold_kgps = 1000.0;
    kt.fuel_kgps = 2.0;
    kt.v8_mps = kt.v9_mps = kt.v0_mps = 0.0;
    CHECK(thermal_efficiency(kt, 42.075, ThermalEffForm::JetKinetic) == 0.0);
    CHECK(thermal_efficiency(kt, 42.075, ThermalEffForm::Verbatim) == 0.0);
}

TEST_CASE("thermal efficiency equals jet KE over twice the fuel heat") {
    KineticTerms kt;
    kt.hot_kgps = 50.0;
    kt.cold_kgps = 450.0;
    kt.fuel_kgps = 1.0;
    kt.v8_mps = 550.0;
    kt.v9_mps = 310.0;
    kt.v0_mps = 250.0;
    const double jet = 51.0 * 550.0 * 550.0 + 450.0 * 310.0 * 310.0;
    CHECK(thermal_efficiency(kt, 100.0, ThermalEffForm::JetKinetic) ==
          doctest::Approx(jet / (2.0 * 1.0 * 100.0e6)).epsilon(1e-15));
    // the verbatim bracket subtracts both flight-speed terms
    const double bracket =
        jet - 500.0 * 250.0 * 250.0 - 450.0 * 250.0 * 250.0;
    CHECK(kinetic_bracket(kt, ThermalEffForm::Verbatim) ==
          doctest::Approx(bracket).epsilon(1e-15));
}

TEST_CASE("propulsive efficiency forms") {
    CHECK(propulsive_efficiency(100.0, 0.0, 1e6) == 0.0);
    CHECK(propulsive_efficiency(100.0, 250.0, 1e8) ==
          doctest::Approx(100.0 * 1000.0 * 250.0 / 1e8).epsilon(1e-15));

    CHECK(propulsive_efficiency_equivalent_jet(100.0, 0.0, 1000.0) == 0.0);
    // thrust 100 kN over 1000 kg/s at 250 m/s: 2*250/(2*250+100)
    CHECK(propulsive_efficiency_equivalent_jet(100.0, 250.0, 1000.0) ==
          doctest::Approx(500.0 / 600.0).epsilon(1e-15));
    CHECK_THROWS_AS(propulsive_efficiency_equivalent_jet(100.0, 250.0, 0.0),
                    PreconditionError);
}

TEST_CASE("overall efficiency is the product") {
    CHECK(overall_efficiency(0.5, 0.8) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(overall_efficiency(0.5791, 0.7795) ==
          doctest::Approx(0.45140845).epsilon(1e-8));
}

TEST_CASE("specific thrust") {
    CHECK(tsf(100.0, 1000.0) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK_THROWS_AS(tsf(100.0, 0.0), PreconditionError);
}

TEST_CASE("NOx severity at the reference constants") {
    CHECK(snox({2965.0, 826.0, 0.0}) ==
          doctest::Approx(std::exp(6.29 / 53.2)).epsilon(1e-12));
    // humidity term cancels exactly at war = 0.0629
    CHECK(snox({2965.0, 826.0, 0.0629}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("NOx severity partial-derivative signs at random points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> p(500.0, 5000.0);
    std::uniform_real_distribution<double> t(600.0, 1100.0);
    std::uniform_real_distribution<double> w(0.0, 0.05);
    for (int i = 0; i < 100; ++i) {
        const EmissionInputs x{p(rng), t(rng), w(rng)};
        const double base = snox(x);
        CHECK(snox({x.p4_kpa * 1.001, x.t4_k, x.war}) > base);
        CHECK(snox({x.p4_kpa, x.t4_k + 0.1, x.war}) > base);
        CHECK(snox({x.p4_kpa, x.t4_k, x.war + 1e-4}) < base);
    }
}

TEST_CASE("NOx rate is 23 snox mf and linear in both factors") {
    CHECK(nox_rate(1.0, 1.0) == doctest::Approx(23.0).epsilon(1e-15));
    CHECK(nox_rate(2.0, 1.0) == doctest::Approx(2.0 * nox_rate(1.0, 1.0)));
    CHECK(nox_rate(1.0, 3.0) == doctest::Approx(3.0 * nox_rate(1.0, 1.0)));
    CHECK(nox_rate(0.5, 0.0) == 0.0);
    CHECK_THROWS_AS(nox_rate(1.0, -1.0), PreconditionError);
}

TEST_CASE("per-cycle identities hold for computed cycles") {
    const EngineSpec spec;
    for (const FlightCondition& fc :
         {takeoff_condition(), ondesign_condition()}) {
        const CycleResult r = run_cycle(spec, fc, fuel_lookup("JP10"));
        const CyclePerformance& p = r.perf;
        // eta_o == eta_th * eta_p to machine precision
        CHECK(std::abs(p.eta_overall - p.eta_thermal * p.eta_propulsive) <=
              1e-12);
        // tsfc * thrust == fuel flow in consistent units
        CHECK(p.tsfc_g_per_kns * p.thrust_kn ==
              doctest::Approx(p.fuel_flow_kgps * 1000.0).epsilon(1e-12));
        // efficiencies stay in the loose [0, 1.2] envelope
        for (double eta : {p.eta_thermal, p.eta_propulsive, p.eta_overall,
                           p.eta_exergetic}) {
            CHECK(eta >= 0.0);
            CHECK(eta <= 1.2);
        }
    }
}
