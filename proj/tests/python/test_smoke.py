import math

import pytest

import tfcycle


def test_isa_ambient():
    sl = tfcycle.isa_ambient(0.0)
    assert sl.t_k == pytest.approx(288.15)
    assert sl.p_kpa == pytest.approx(101.325)
    cruise = tfcycle.isa_ambient(10000.0)
    assert cruise.t_k == pytest.approx(223.15)
    with pytest.raises(ValueError):
        tfcycle.isa_ambient(12000.0)


def test_fuel_database():
    h2 = tfcycle.fuel_lookup("hydrogen")
    assert h2.fhv_mj_per_kg == pytest.approx(118.429)
    with pytest.raises(KeyError):
        tfcycle.fuel_lookup("kerosine")


def test_takeoff_analysis_bands():
    out = tfcycle.analyze(tfcycle.EngineSpec(), tfcycle.takeoff_condition(),
                          "JP10")
    perf = out["performance"]
    assert perf["thrust"] == pytest.approx(310.0, rel=0.05)
    assert perf["tsfc"] == pytest.approx(8.454, rel=0.12)
    assert perf["etaOverall"] == pytest.approx(
        perf["etaThermal"] * perf["etaPropulsive"], abs=1e-12)


def test_cruise_hydrogen_analysis():
    out = tfcycle.analyze(tfcycle.EngineSpec(), tfcycle.ondesign_condition(),
                          "hydrogen")
    perf = out["performance"]
    assert perf["thrust"] == pytest.approx(73.26, rel=0.10)
    assert perf["tsfc"] == pytest.approx(6.594, rel=0.10)
    exergy = out["exergy"]
    destructions = {c["component"]: c["destruction"]
                    for c in exergy["perComponent"]}
    assert destructions["combustor"] == max(destructions.values())


def test_infeasible_cycle_raises():
    spec = tfcycle.EngineSpec()
    spec.tit_k = 500.0
    with pytest.raises(RuntimeError):
        tfcycle.analyze(spec, tfcycle.ondesign_condition(), "JP10")


def test_snox_reference_point():
    assert tfcycle.snox(2965.0, 826.0, 0.0) == pytest.approx(
        math.exp(6.29 / 53.2), abs=1e-9)


def test_topsis_ranking():
    values = [[57.91, 28.761, 6.58, 247.3, 5.186],
              [58.06, 23.64, 7.996, 301.50, 5.961],
              [54.85, 30.85, 8.008, 95.60, 2.733]]
    econ = tfcycle.topsis_rank(values, [0.99, 0.0, -0.95, 0.0, 0.0])
    assert econ["ranking"] == [0, 1, 2]
    envi = tfcycle.topsis_rank(values, [0.0, 0.99, 0.0, -0.95, -0.90])
    assert envi["ranking"][0] == 2
    assert envi["ranking"][-1] == 1


def test_optimizer_smoke_deterministic():
    a = tfcycle.optimize(1, population=30, generations=20, seed=5, jobs=2)
    b = tfcycle.optimize(1, population=30, generations=20, seed=5, jobs=1)
    assert a["history"] == b["history"]
    assert a["best"] == b["best"]
    assert a["feasible"]
