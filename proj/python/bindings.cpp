#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfcycle/config.hpp"
#include "tfcycle/performance.hpp"
#include "tfcycle/validation.hpp"

namespace py = pybind11;
using namespace tfcycle;

namespace {

py::dict perf_dict(const CyclePerformance& p) {
    py::dict d;
    d["thrust"] = p.thrust_kn;
    d["tsfc"] = p.tsfc_g_per_kns;
    d["etaThermal"] = p.eta_thermal;
    d["etaPropulsive"] = p.eta_propulsive;
    d["etaOverall"] = p.eta_overall;
    d["etaExergetic"] = p.eta_exergetic;
    d["tsf"] = p.tsf_ns_per_kg;
    d["fuelFlow"] = p.fuel_flow_kgps;
    d["snox"] = p.snox;
    d["noxRate"] = p.nox_g_per_s;
    d["offtake"] = p.offtake_kw;
    return d;
}

py::dict exergy_dict(const ExergyReport& r) {
    py::dict d;
    py::list comps;
    for (const auto& c : r.components) {
        py::dict rec;
        rec["component"] = component_name(c.component);
        rec["etaEx"] = c.eta_defined ? py::cast(c.eta_ex) : py::none();
        rec["destruction"] = c.destruction_kw;
        comps.append(rec);
    }
    d["perComponent"] = comps;
    d["fuelExergyRate"] = r.fuel_exergy_kw;
    d["intakeExergyRate"] = r.intake_exergy_kw;
    d["thrustExergyRate"] = r.thrust_exergy_kw;
    d["exhaustResidual"] = r.exhaust_residual_kw;
    d["engineEtaEx"] = r.engine_eta_ex;
    d["totalDestruction"] = r.total_destruction_kw;
    d["entropyGeneration"] = r.entropy_gen_kw_per_k;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "design-point turbofan cycle analysis, exergy audit and "
              "cycle optimization";

    py::register_exception<PreconditionError>(m, "PreconditionError",
                                              PyExc_ValueError);
    py::register_exception<InfeasibleCycleError>(m, "InfeasibleCycleError",
                                                 PyExc_RuntimeError);
    py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_KeyError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<AmbientState>(m, "AmbientState")
        .def_readonly("altitude_m", &AmbientState::altitude_m)
        .def_readonly("t_k", &AmbientState::t_k)
        .def_readonly("p_kpa", &AmbientState::p_kpa)
        .def_readonly("rho_kg_m3", &AmbientState::rho_kg_m3);

    py::class_<Fuel>(m, "Fuel")
        .def_readonly("name", &Fuel::name)
        .def_readonly("carbon_atoms", &Fuel::carbon_atoms)
        .def_readonly("hydrogen_atoms", &Fuel::hydrogen_atoms)
        .def_readonly("fhv_mj_per_kg", &Fuel::fhv_mj_per_kg)
        .def_readonly("chem_exergy_mj_per_kg", &Fuel::chem_exergy_mj_per_kg)
        .def_readonly("molecular_weight_g_mol", &Fuel::molecular_weight_g_mol);

    py::class_<FlightCondition>(m, "FlightCondition")
        .def(py::init<>())
        .def(py::init([](double mach, double altitude_m, double delta_t_k) {
                 return FlightCondition{mach, altitude_m, delta_t_k};
             }),
             py::arg("mach"), py::arg("altitude_m"), py::arg("delta_t_k") = 0.0)
        .def_readwrite("mach", &FlightCondition::mach)
        .def_readwrite("altitude_m", &FlightCondition::altitude_m)
        .def_readwrite("delta_t_k", &FlightCondition::delta_t_k);

    py::class_<EngineSpec>(m, "EngineSpec")
        .def(py::init<>())
        .def_readwrite("tit_k", &EngineSpec::tit_k)
        .def_readwrite("pi_fan", &EngineSpec::pi_fan)
        .def_readwrite("pi_lpc", &EngineSpec::pi_lpc)
        .def_readwrite("pi_hpc", &EngineSpec::pi_hpc)
        .def_readwrite("bypass_ratio", &EngineSpec::bypass_ratio)
        .def_readwrite("design_mass_flow_kgps", &EngineSpec::design_mass_flow_kgps)
        .def_readwrite("eta_fan", &EngineSpec::eta_fan)
        .def_readwrite("eta_lpc", &EngineSpec::eta_lpc)
        .def_readwrite("eta_hpc", &EngineSpec::eta_hpc)
        .def_readwrite("eta_hpt", &EngineSpec::eta_hpt)
        .def_readwrite("eta_lpt", &EngineSpec::eta_lpt)
        .def_readwrite("eta_nozzle_hot", &EngineSpec::eta_nozzle_hot)
        .def_readwrite("eta_nozzle_cold", &EngineSpec::eta_nozzle_cold)
        .def_readwrite("eta_combustor", &EngineSpec::eta_combustor)
        .def_readwrite("combustor_pressure_drop_frac",
                       &EngineSpec::combustor_pressure_drop_frac)
        .def_readwrite("aux_offtake_kw", &EngineSpec::aux_offtake_kw)
        .def_readwrite("chiller_cop", &EngineSpec::chiller_cop);

    m.def("isa_ambient", &isa_ambient, py::arg("altitude_m"),
          "ISA troposphere state at an altitude in [0, 11000] m");
    m.def("fuel_lookup",
          [](const std::string& name) { return fuel_lookup(name); },
          py::arg("name"), "look up a fuel in the built-in database");
    m.def("takeoff_condition", &takeoff_condition);
    m.def("ondesign_condition", &ondesign_condition);

    m.def(
        "analyze",
        [](const EngineSpec& spec, const FlightCondition& cond,
           const std::string& fuel) {
            const CycleResult cycle = run_cycle(spec, cond, fuel_lookup(fuel));
            const ExergyReport rep = audit_cycle(cycle, spec);
            py::dict d;
            py::list stations;
            for (const auto& s : cycle.stations.rows) {
                py::dict st;
                st["station"] = static_cast<int>(s.id);
                st["name"] = station_name(s.id);
                st["T_K"] = s.t_k;
                st["P_kPa"] = s.p_kpa;
                st["mdot_kgps"] = s.mdot_kgps;
                stations.append(st);
            }
            d["stations"] = stations;
            d["performance"] = perf_dict(cycle.perf);
            d["exergy"] = exergy_dict(rep);
            d["intakeMassFlow"] = cycle.intake_kgps;
            d["flightSpeed"] = cycle.v0_mps;
            return d;
        },
        py::arg("spec"), py::arg("condition"), py::arg("fuel") = "JP10",
        "run the design-point cycle and its exergy audit");

    m.def(
        "snox",
        [](double p4_kpa, double t4_k, double war) {
            return snox({p4_kpa, t4_k, war});
        },
        py::arg("p4_kpa"), py::arg("t4_k"), py::arg("war") = 0.0,
        "NOx severity index");

    m.def(
        "topsis_rank",
        [](const std::vector<std::vector<double>>& values,
           const std::vector<double>& weights,
           const std::vector<std::string>& alternatives) {
            DecisionMatrix mat;
            mat.values = values;
            if (alternatives.empty()) {
                for (std::size_t i = 0; i < values.size(); ++i)
                    mat.alternatives.push_back("alt" + std::to_string(i));
            } else {
                mat.alternatives = alternatives;
            }
            const std::size_t n = values.empty() ? 0 : values.front().size();
            for (std::size_t j = 0; j < n; ++j)
                mat.criteria.push_back("c" + std::to_string(j));
            const TopsisResult r = topsis_rank(mat, WeightVector{weights});
            py::dict d;
            d["closeness"] = r.closeness;
            d["share"] = r.share;
            d["ranking"] = r.ranking;
            return d;
        },
        py::arg("values"), py::arg("weights"),
        py::arg("alternatives") = std::vector<std::string>{},
        "TOPSIS with signed benefit/cost weights");

    m.def(
        "optimize",
        [](int objective_case, int population, int generations,
           std::uint64_t seed, int jobs) {
            ObjectiveCase oc;
            switch (objective_case) {
                case 1: oc = ObjectiveCase::ThrustMax; break;
                case 2: oc = ObjectiveCase::ThermalEffMax; break;
                case 3: oc = ObjectiveCase::PropulsiveEffMax; break;
                default:
                    throw PreconditionError("objective case must be 1, 2 or 3");
            }
            OptimizationProblem prob =
                OptimizationProblem::standard(oc, EngineSpec{});
            GAConfig cfg;
            cfg.population_size = population;
            cfg.generations = generations;
            cfg.seed = seed;
            cfg.jobs = jobs;
            const OptimizationResult r = ga_optimize(prob, cfg);
            py::dict d;
            py::dict best;
            best["TIT"] = r.best.tit_k;
            best["deltaT"] = r.best.delta_t_k;
            best["piFan"] = r.best.pi_fan;
            best["piCompressor"] = r.best.pi_compressor;
            best["alpha"] = r.best.bypass_ratio;
            d["best"] = best;
            d["feasible"] = r.feasible;
            d["objective"] = r.objective;
            d["history"] = r.history;
            d["performance"] = perf_dict(r.performance);
            return d;
        },
        py::arg("objective_case"), py::arg("population") = 100,
        py::arg("generations") = 200, py::arg("seed") = 12345,
        py::arg("jobs") = 1,
        "GA cycle optimization at the cruise design point (hydrogen)");

    m.def("default_config_json",
          []() { return dump_run_config(default_run_config()); });
}
