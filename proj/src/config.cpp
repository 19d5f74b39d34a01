#include "tfcycle/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tfcycle {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void check_keys(const ordered_json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(path + "." + key, "unknown field");
    }
}

double get_num(const ordered_json& j, const std::string& path, const char* key,
               double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) fail(path + "." + key, "expected a number");
    return j[key].get<double>();
}

std::string get_str(const ordered_json& j, const std::string& path,
                    const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) fail(path + "." + key, "expected a string");
    return j[key].get<std::string>();
}

bool get_bool(const ordered_json& j, const std::string& path, const char* key,
              bool fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) fail(path + "." + key, "expected a boolean");
    return j[key].get<bool>();
}

// ---- enum name maps ---------------------------------------------------

std::string to_string(IntakeModel m) {
    switch (m) {
        case IntakeModel::FanFaceDensity: return "fan-face-density";
        case IntakeModel::InletDensity: return "inlet-density";
        case IntakeModel::CorrectedFlow: return "corrected-flow";
    }
    return "fan-face-density";
}

IntakeModel intake_from_string(const std::string& s, const std::string& path) {
    if (s == "fan-face-density") return IntakeModel::FanFaceDensity;
    if (s == "inlet-density") return IntakeModel::InletDensity;
    if (s == "corrected-flow") return IntakeModel::CorrectedFlow;
    fail(path, "unknown intake model '" + s + "'");
}

std::string to_string(ThermalEffForm f) {
    return f == ThermalEffForm::JetKinetic ? "jet-kinetic" : "verbatim";
}

ThermalEffForm thermal_form_from_string(const std::string& s,
                                        const std::string& path) {
    if (s == "jet-kinetic") return ThermalEffForm::JetKinetic;
    if (s == "verbatim") return ThermalEffForm::Verbatim;
    fail(path, "unknown thermal efficiency form '" + s + "'");
}

std::string to_string(PropulsiveEffForm f) {
    return f == PropulsiveEffForm::EquivalentJet ? "equivalent-jet" : "verbatim";
}

PropulsiveEffForm propulsive_form_from_string(const std::string& s,
                                              const std::string& path) {
    if (s == "equivalent-jet") return PropulsiveEffForm::EquivalentJet;
    if (s == "verbatim") return PropulsiveEffForm::Verbatim;
    fail(path, "unknown propulsive efficiency form '" + s + "'");
}

std::string to_string(ObjectiveCase c) {
    switch (c) {
        case ObjectiveCase::ThrustMax: return "thrust";
        case ObjectiveCase::ThermalEffMax: return "thermal-efficiency";
        case ObjectiveCase::PropulsiveEffMax: return "propulsive-efficiency";
    }
    return "thrust";
}

ObjectiveCase case_from_string(const std::string& s, const std::string& path) {
    if (s == "thrust" || s == "1" || s == "case1") return ObjectiveCase::ThrustMax;
    if (s == "thermal-efficiency" || s == "2" || s == "case2")
        return ObjectiveCase::ThermalEffMax;
    if (s == "propulsive-efficiency" || s == "3" || s == "case3")
        return ObjectiveCase::PropulsiveEffMax;
    fail(path, "unknown objective case '" + s + "'");
}

// ---- engine / flight --------------------------------------------------

ordered_json gas_to_json(const GasPropertyMap& g) {
    return ordered_json{
        {"cold", {{"cp", g.cold.cp_j_per_kgk}, {"k", g.cold.k}}},
        {"hot", {{"cp", g.hot.cp_j_per_kgk}, {"k", g.hot.k}}},
        {"combustorCpAvg", g.combustor_cp_avg},
    };
}

GasPropertyMap gas_from_json(const ordered_json& j, const std::string& path) {
    GasPropertyMap g;
    check_keys(j, path, {"cold", "hot", "combustorCpAvg"});
    if (j.contains("cold")) {
        check_keys(j["cold"], path + ".cold", {"cp", "k"});
        g.cold.cp_j_per_kgk = get_num(j["cold"], path + ".cold", "cp", g.cold.cp_j_per_kgk);
        g.cold.k = get_num(j["cold"], path + ".cold", "k", g.cold.k);
    }
    if (j.contains("hot")) {
        check_keys(j["hot"], path + ".hot", {"cp", "k"});
        g.hot.cp_j_per_kgk = get_num(j["hot"], path + ".hot", "cp", g.hot.cp_j_per_kgk);
        g.hot.k = get_num(j["hot"], path + ".hot", "k", g.hot.k);
    }
    g.combustor_cp_avg = get_num(j, path, "combustorCpAvg", g.combustor_cp_avg);
    return g;
}

ordered_json engine_to_json(const EngineSpec& e) {
    return ordered_json{
        {"TIT", e.tit_k},
        {"piFan", e.pi_fan},
        {"piLPC", e.pi_lpc},
        {"piHPC", e.pi_hpc},
        {"alpha", e.bypass_ratio},
        {"designMassFlow", e.design_mass_flow_kgps},
        {"etaFan", e.eta_fan},
        {"etaLPC", e.eta_lpc},
        {"etaHPC", e.eta_hpc},
        {"etaHPT", e.eta_hpt},
        {"etaLPT", e.eta_lpt},
        {"etaNozzleHot", e.eta_nozzle_hot},
        {"etaNozzleCold", e.eta_nozzle_cold},
        {"etaCombustor", e.eta_combustor},
        {"combustorPressureDropFrac", e.combustor_pressure_drop_frac},
        {"auxOfftake", e.aux_offtake_kw},
        {"chillerCOP", e.chiller_cop},
        {"gasProps", gas_to_json(e.gas)},
        {"intakeModel", to_string(e.intake_model)},
        {"thermalEfficiencyForm", to_string(e.thermal_form)},
        {"propulsiveEfficiencyForm", to_string(e.propulsive_form)},
        {"combustorExergyVerbatim", e.combustor_exergy_verbatim},
    };
}

EngineSpec engine_from_json(const ordered_json& j, const std::string& path) {
    EngineSpec e;
    check_keys(j, path,
               {"TIT", "piFan", "piLPC", "piHPC", "alpha", "designMassFlow",
                "etaFan", "etaLPC", "etaHPC", "etaHPT", "etaLPT", "etaNozzleHot",
                "etaNozzleCold", "etaCombustor", "combustorPressureDropFrac",
                "auxOfftake", "chillerCOP", "gasProps", "intakeModel",
                "thermalEfficiencyForm", "propulsiveEfficiencyForm",
                "combustorExergyVerbatim"});
    e.tit_k = get_num(j, path, "TIT", e.tit_k);
    e.pi_fan = get_num(j, path, "piFan", e.pi_fan);
    e.pi_lpc = get_num(j, path, "piLPC", e.pi_lpc);
    e.pi_hpc = get_num(j, path, "piHPC", e.pi_hpc);
    e.bypass_ratio = get_num(j, path, "alpha", e.bypass_ratio);
    e.design_mass_flow_kgps = get_num(j, path, "designMassFlow", e.design_mass_flow_kgps);
    e.eta_fan = get_num(j, path, "etaFan", e.eta_fan);
    e.eta_lpc = get_num(j, path, "etaLPC", e.eta_lpc);
    e.eta_hpc = get_num(j, path, "etaHPC", e.eta_hpc);
    e.eta_hpt = get_num(j, path, "etaHPT", e.eta_hpt);
    e.eta_lpt = get_num(j, path, "etaLPT", e.eta_lpt);
    e.eta_nozzle_hot = get_num(j, path, "etaNozzleHot", e.eta_nozzle_hot);
    e.eta_nozzle_cold = get_num(j, path, "etaNozzleCold", e.eta_nozzle_cold);
    e.eta_combustor = get_num(j, path, "etaCombustor", e.eta_combustor);
    e.combustor_pressure_drop_frac =
        get_num(j, path, "combustorPressureDropFrac", e.combustor_pressure_drop_frac);
    e.aux_offtake_kw = get_num(j, path, "auxOfftake", e.aux_offtake_kw);
    e.chiller_cop = get_num(j, path, "chillerCOP", e.chiller_cop);
    if (j.contains("gasProps"))
        e.gas = gas_from_json(j["gasProps"], path + ".gasProps");
    e.intake_model = intake_from_string(
        get_str(j, path, "intakeModel", to_string(e.intake_model)),
        path + ".intakeModel");
    e.thermal_form = thermal_form_from_string(
        get_str(j, path, "thermalEfficiencyForm", to_string(e.thermal_form)),
        path + ".thermalEfficiencyForm");
    e.propulsive_form = propulsive_form_from_string(
        get_str(j, path, "propulsiveEfficiencyForm", to_string(e.propulsive_form)),
        path + ".propulsiveEfficiencyForm");
    e.combustor_exergy_verbatim = get_bool(j, path, "combustorExergyVerbatim",
                                           e.combustor_exergy_verbatim);
    try {
        e.validate();
    } catch (const PreconditionError& err) {
        fail(path, err.what());
    }
    return e;
}

ordered_json flight_to_json(const FlightCondition& f) {
    return ordered_json{
        {"mach", f.mach}, {"altitude", f.altitude_m}, {"deltaT", f.delta_t_k}};
}

FlightCondition flight_from_json(const ordered_json& j, const std::string& path) {
    check_keys(j, path, {"mach", "altitude", "deltaT"});
    FlightCondition f;
    f.mach = get_num(j, path, "mach", f.mach);
    f.altitude_m = get_num(j, path, "altitude", f.altitude_m);
    f.delta_t_k = get_num(j, path, "deltaT", f.delta_t_k);
    if (f.mach < 0.0) fail(path + ".mach", "must be nonnegative");
    if (f.altitude_m < 0.0 || f.altitude_m > kTropopauseAltitudeM)
        fail(path + ".altitude", "must lie in [0, 11000] m");
    return f;
}

// ---- fuels ------------------------------------------------------------

ordered_json fuel_to_json(const Fuel& f) {
    return ordered_json{
        {"name", f.name},
        {"c", f.carbon_atoms},
        {"h", f.hydrogen_atoms},
        {"FHV", f.fhv_mj_per_kg},
        {"chemExergy", f.chem_exergy_mj_per_kg},
        {"molecularWeight", f.molecular_weight_g_mol},
    };
}

Fuel fuel_from_json(const ordered_json& j, const std::string& path) {
    check_keys(j, path, {"name", "c", "h", "FHV", "chemExergy", "molecularWeight"});
    Fuel f;
    f.name = get_str(j, path, "name", "");
    if (f.name.empty()) fail(path + ".name", "fuel name is required");
    f.carbon_atoms = static_cast<int>(get_num(j, path, "c", 0));
    f.hydrogen_atoms = static_cast<int>(get_num(j, path, "h", 0));
    f.fhv_mj_per_kg = get_num(j, path, "FHV", 0.0);
    f.chem_exergy_mj_per_kg = get_num(j, path, "chemExergy", 0.0);
    f.molecular_weight_g_mol = get_num(j, path, "molecularWeight", 0.0);
    if (!(f.fhv_mj_per_kg > 0.0)) fail(path + ".FHV", "must be positive");
    if (f.chem_exergy_mj_per_kg < 0.9 * f.fhv_mj_per_kg)
        fail(path + ".chemExergy", "implausibly far below the heating value");
    if (f.carbon_atoms < 0 || f.hydrogen_atoms < 1)
        fail(path, "fuel composition must have c >= 0 and h >= 1");
    return f;
}

// ---- optimizer sections ------------------------------------------------

ordered_json design_to_json(const DesignVector& d) {
    return ordered_json{{"TIT", d.tit_k},
                        {"deltaT", d.delta_t_k},
                        {"piFan", d.pi_fan},
                        {"piCompressor", d.pi_compressor},
                        {"alpha", d.bypass_ratio}};
}

DesignVector design_from_json(const ordered_json& j, const std::string& path,
                              const DesignVector& fallback) {
    check_keys(j, path, {"TIT", "deltaT", "piFan", "piCompressor", "alpha"});
    DesignVector d;
    d.tit_k = get_num(j, path, "TIT", fallback.tit_k);
    d.delta_t_k = get_num(j, path, "deltaT", fallback.delta_t_k);
    d.pi_fan = get_num(j, path, "piFan", fallback.pi_fan);
    d.pi_compressor = get_num(j, path, "piCompressor", fallback.pi_compressor);
    d.bypass_ratio = get_num(j, path, "alpha", fallback.bypass_ratio);
    return d;
}

ordered_json band_to_json(const ConstraintBand& b) {
    return ordered_json::array({b.min, b.max});
}

std::optional<ConstraintBand> band_from_json(const ordered_json& j,
                                             const std::string& path,
                                             const char* key) {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j[key];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(path + "." + key, "expected [min, max]");
    ConstraintBand b{v[0].get<double>(), v[1].get<double>()};
    if (!(b.min < b.max)) fail(path + "." + key, "min must be below max");
    return b;
}

ordered_json constraints_to_json(const ConstraintSet& c) {
    ordered_json j = ordered_json::object();
    if (c.eta_thermal) j["etaThermal"] = band_to_json(*c.eta_thermal);
    if (c.tsfc) j["tsfc"] = band_to_json(*c.tsfc);
    if (c.eta_propulsive) j["etaPropulsive"] = band_to_json(*c.eta_propulsive);
    if (c.tsf) j["tsf"] = band_to_json(*c.tsf);
    return j;
}

ConstraintSet constraints_from_json(const ordered_json& j,
                                    const std::string& path) {
    check_keys(j, path, {"etaThermal", "tsfc", "etaPropulsive", "tsf"});
    ConstraintSet c;
    c.eta_thermal = band_from_json(j, path, "etaThermal");
    c.tsfc = band_from_json(j, path, "tsfc");
    c.eta_propulsive = band_from_json(j, path, "etaPropulsive");
    c.tsf = band_from_json(j, path, "tsf");
    return c;
}

ordered_json ga_to_json(const GAConfig& g) {
    return ordered_json{
        {"populationSize", g.population_size},
        {"generations", g.generations},
        {"crossoverRate", g.crossover_rate},
        {"mutationRate", g.mutation_rate},
        {"mutationSigmaFrac", g.mutation_sigma_frac},
        {"tournamentSize", g.tournament_size},
        {"eliteCount", g.elite_count},
        {"penaltyWeight", g.penalty_weight},
        {"seed", g.seed},
        {"jobs", g.jobs},
    };
}

GAConfig ga_from_json(const ordered_json& j, const std::string& path) {
    check_keys(j, path,
               {"populationSize", "generations", "crossoverRate", "mutationRate",
                "mutationSigmaFrac", "tournamentSize", "eliteCount",
                "penaltyWeight", "seed", "jobs"});
    GAConfig g;
    g.population_size = static_cast<int>(get_num(j, path, "populationSize", g.population_size));
    g.generations = static_cast<int>(get_num(j, path, "generations", g.generations));
    g.crossover_rate = get_num(j, path, "crossoverRate", g.crossover_rate);
    g.mutation_rate = get_num(j, path, "mutationRate", g.mutation_rate);
    g.mutation_sigma_frac = get_num(j, path, "mutationSigmaFrac", g.mutation_sigma_frac);
    g.tournament_size = static_cast<int>(get_num(j, path, "tournamentSize", g.tournament_size));
    g.elite_count = static_cast<int>(get_num(j, path, "eliteCount", g.elite_count));
    g.penalty_weight = get_num(j, path, "penaltyWeight", g.penalty_weight);
    g.seed = static_cast<std::uint64_t>(get_num(j, path, "seed", static_cast<double>(g.seed)));
    g.jobs = static_cast<int>(get_num(j, path, "jobs", g.jobs));
    try {
        g.validate();
    } catch (const PreconditionError& err) {
        fail(path, err.what());
    }
    return g;
}

}  // namespace

RunConfig default_run_config() { return RunConfig{}; }

RunConfig parse_run_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(j, "config",
               {"engine", "flight", "fuel", "fuels", "sweep", "optimize", "rank",
                "output", "format"});
    RunConfig cfg;
    if (j.contains("engine")) cfg.engine = engine_from_json(j["engine"], "engine");
    if (j.contains("flight")) cfg.flight = flight_from_json(j["flight"], "flight");
    cfg.fuel = get_str(j, "config", "fuel", cfg.fuel);
    if (j.contains("fuels")) {
        if (!j["fuels"].is_array()) fail("fuels", "expected an array");
        for (std::size_t i = 0; i < j["fuels"].size(); ++i)
            cfg.extra_fuels.push_back(
                fuel_from_json(j["fuels"][i], "fuels[" + std::to_string(i) + "]"));
    }
    if (j.contains("sweep")) {
        const auto& s = j["sweep"];
        check_keys(s, "sweep", {"deltaTFrom", "deltaTTo", "deltaTStep", "fuels"});
        SweepSection sw;
        sw.delta_t_from = get_num(s, "sweep", "deltaTFrom", sw.delta_t_from);
        sw.delta_t_to = get_num(s, "sweep", "deltaTTo", sw.delta_t_to);
        sw.delta_t_step = get_num(s, "sweep", "deltaTStep", sw.delta_t_step);
        if (!(sw.delta_t_step > 0.0)) fail("sweep.deltaTStep", "must be positive");
        if (s.contains("fuels")) {
            if (!s["fuels"].is_array()) fail("sweep.fuels", "expected an array");
            sw.fuels.clear();
            for (const auto& f : s["fuels"]) {
                if (!f.is_string()) fail("sweep.fuels", "expected fuel names");
                sw.fuels.push_back(f.get<std::string>());
            }
        }
        cfg.sweep = sw;
    }
    if (j.contains("optimize")) {
        const auto& o = j["optimize"];
        check_keys(o, "optimize",
                   {"case", "bounds", "constraints", "ga", "oraclePointsPerAxis",
                    "runOracle"});
        OptimizeSection op;
        op.objective =
            case_from_string(get_str(o, "optimize", "case", "thrust"), "optimize.case");
        if (o.contains("bounds")) {
            check_keys(o["bounds"], "optimize.bounds", {"lower", "upper"});
            Bounds b = default_bounds();
            if (o["bounds"].contains("lower"))
                b.lower = design_from_json(o["bounds"]["lower"],
                                           "optimize.bounds.lower", b.lower);
            if (o["bounds"].contains("upper"))
                b.upper = design_from_json(o["bounds"]["upper"],
                                           "optimize.bounds.upper", b.upper);
            const auto lo = b.lower.to_array();
            const auto hi = b.upper.to_array();
            for (std::size_t i = 0; i < lo.size(); ++i) {
                if (!(lo[i] < hi[i]))
                    fail("optimize.bounds", "lower must be elementwise below upper");
            }
            op.bounds = b;
        }
        if (o.contains("constraints"))
            op.constraints = constraints_from_json(o["constraints"], "optimize.constraints");
        if (o.contains("ga")) op.ga = ga_from_json(o["ga"], "optimize.ga");
        op.oracle_points_per_axis = static_cast<int>(
            get_num(o, "optimize", "oraclePointsPerAxis", op.oracle_points_per_axis));
        op.run_oracle = get_bool(o, "optimize", "runOracle", op.run_oracle);
        cfg.optimize = op;
    }
    if (j.contains("rank")) {
        const auto& r = j["rank"];
        check_keys(r, "rank", {"alternatives", "criteria", "values", "weights"});
        RankSection rk;
        if (!r.contains("alternatives") || !r.contains("criteria") ||
            !r.contains("values") || !r.contains("weights"))
            fail("rank", "needs alternatives, criteria, values and weights");
        for (const auto& a : r["alternatives"])
            rk.matrix.alternatives.push_back(a.get<std::string>());
        for (const auto& c : r["criteria"])
            rk.matrix.criteria.push_back(c.get<std::string>());
        for (const auto& row : r["values"]) {
            std::vector<double> v;
            for (const auto& x : row) {
                if (!x.is_number()) fail("rank.values", "expected numbers");
                v.push_back(x.get<double>());
            }
            rk.matrix.values.push_back(v);
        }
        for (const auto& wv : r["weights"]) {
            if (!wv.is_number()) fail("rank.weights", "expected numbers");
            rk.weights.signed_weights.push_back(wv.get<double>());
        }
        try {
            rk.matrix.validate();
        } catch (const PreconditionError& err) {
            fail("rank", err.what());
        }
        cfg.rank = rk;
    }
    cfg.output_path = get_str(j, "config", "output", cfg.output_path);
    const std::string format = get_str(j, "config", "format", "csv");
    if (format == "csv") {
        cfg.format = OutputFormat::Csv;
    } else if (format == "json") {
        cfg.format = OutputFormat::Json;
    } else {
        fail("format", "expected 'csv' or 'json'");
    }

    int sections = 0;
    sections += cfg.sweep.has_value();
    sections += cfg.optimize.has_value();
    sections += cfg.rank.has_value();
    if (sections > 1)
        fail("config", "at most one of sweep/optimize/rank may be present");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

std::string dump_run_config(const RunConfig& cfg) {
    ordered_json j;
    j["engine"] = engine_to_json(cfg.engine);
    j["flight"] = flight_to_json(cfg.flight);
    j["fuel"] = cfg.fuel;
    if (!cfg.extra_fuels.empty()) {
        j["fuels"] = ordered_json::array();
        for (const Fuel& f : cfg.extra_fuels) j["fuels"].push_back(fuel_to_json(f));
    }
    if (cfg.sweep) {
        j["sweep"] = ordered_json{{"deltaTFrom", cfg.sweep->delta_t_from},
                                  {"deltaTTo", cfg.sweep->delta_t_to},
                                  {"deltaTStep", cfg.sweep->delta_t_step},
                                  {"fuels", cfg.sweep->fuels}};
    }
    if (cfg.optimize) {
        ordered_json o;
        o["case"] = to_string(cfg.optimize->objective);
        o["bounds"] = ordered_json{{"lower", design_to_json(cfg.optimize->bounds.lower)},
                                   {"upper", design_to_json(cfg.optimize->bounds.upper)}};
        if (cfg.optimize->constraints)
            o["constraints"] = constraints_to_json(*cfg.optimize->constraints);
        o["ga"] = ga_to_json(cfg.optimize->ga);
        o["oraclePointsPerAxis"] = cfg.optimize->oracle_points_per_axis;
        o["runOracle"] = cfg.optimize->run_oracle;
        j["optimize"] = o;
    }
    if (cfg.rank) {
        j["rank"] = ordered_json{{"alternatives", cfg.rank->matrix.alternatives},
                                 {"criteria", cfg.rank->matrix.criteria},
                                 {"values", cfg.rank->matrix.values},
                                 {"weights", cfg.rank->weights.signed_weights}};
    }
    if (!cfg.output_path.empty()) j["output"] = cfg.output_path;
    j["format"] = cfg.format == OutputFormat::Csv ? "csv" : "json";
    return j.dump(2) + "\n";
}

// ---- result serialization ----------------------------------------------

namespace {

ordered_json perf_json(const CyclePerformance& p) {
    return ordered_json{
        {"thrust", p.thrust_kn},
        {"tsfc", p.tsfc_g_per_kns},
        {"etaThermal", p.eta_thermal},
        {"etaPropulsive", p.eta_propulsive},
        {"etaOverall", p.eta_overall},
        {"etaExergetic", p.eta_exergetic},
        {"tsf", p.tsf_ns_per_kg},
        {"fuelFlow", p.fuel_flow_kgps},
        {"snox", p.snox},
        {"noxRate", p.nox_g_per_s},
        {"offtake", p.offtake_kw},
    };
}

ordered_json exergy_json(const ExergyReport& r) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : r.components) {
        ordered_json rec{{"component", component_name(c.component)},
                         {"destruction", c.destruction_kw}};
        if (c.eta_defined) {
            rec["etaEx"] = c.eta_ex;
        } else {
            rec["etaEx"] = nullptr;
        }
        comps.push_back(rec);
    }
    return ordered_json{
        {"perComponent", comps},
        {"fuelExergyRate", r.fuel_exergy_kw},
        {"intakeExergyRate", r.intake_exergy_kw},
        {"thrustExergyRate", r.thrust_exergy_kw},
        {"exhaustResidual", r.exhaust_residual_kw},
        {"engineEtaEx", r.engine_eta_ex},
        {"totalDestruction", r.total_destruction_kw},
        {"entropyGeneration", r.entropy_gen_kw_per_k},
    };
}

}  // namespace

std::string perf_to_json(const CyclePerformance& perf) {
    return perf_json(perf).dump(2) + "\n";
}

std::string exergy_to_json(const ExergyReport& rep) {
    return exergy_json(rep).dump(2) + "\n";
}

std::string cycle_to_json(const CycleResult& cycle, const ExergyReport& rep) {
    ordered_json stations = ordered_json::array();
    for (const auto& s : cycle.stations.rows) {
        stations.push_back(ordered_json{{"station", static_cast<int>(s.id)},
                                        {"name", station_name(s.id)},
                                        {"T_K", s.t_k},
                                        {"P_kPa", s.p_kpa},
                                        {"mdot_kgps", s.mdot_kgps}});
    }
    ordered_json j{
        {"stations", stations},
        {"powerLedger",
         ordered_json{{"wFan", cycle.ledger.w_fan_kw},
                      {"wLPC", cycle.ledger.w_lpc_kw},
                      {"wHPC", cycle.ledger.w_hpc_kw},
                      {"wHPT", cycle.ledger.w_hpt_kw},
                      {"wLPT", cycle.ledger.w_lpt_kw},
                      {"wOfftake", cycle.ledger.w_offtake_kw}}},
        {"nozzles",
         ordered_json{{"hot",
                       ordered_json{{"velocity", cycle.hot_nozzle.velocity_mps},
                                    {"exitPressure", cycle.hot_nozzle.exit_p_kpa},
                                    {"exitTemperature", cycle.hot_nozzle.exit_t_k},
                                    {"exitArea", cycle.hot_nozzle.exit_area_m2},
                                    {"choked", cycle.hot_nozzle.choked}}},
                      {"cold",
                       ordered_json{{"velocity", cycle.cold_nozzle.velocity_mps},
                                    {"exitPressure", cycle.cold_nozzle.exit_p_kpa},
                                    {"exitTemperature", cycle.cold_nozzle.exit_t_k},
                                    {"exitArea", cycle.cold_nozzle.exit_area_m2},
                                    {"choked", cycle.cold_nozzle.choked}}}}},
        {"flightSpeed", cycle.v0_mps},
        {"intakeMassFlow", cycle.intake_kgps},
        {"heatRate", cycle.heat_rate_kw},
        {"performance", perf_json(cycle.perf)},
        {"exergy", exergy_json(rep)},
    };
    return j.dump(2) + "\n";
}

std::string optimization_to_json(const OptimizationResult& ga,
                                 const OptimizationResult* oracle) {
    auto result_json = [](const OptimizationResult& r) {
        return ordered_json{
            {"best", design_to_json(r.best)},
            {"feasible", r.feasible},
            {"objective", r.objective},
            {"fitness", r.fitness},
            {"evaluations", r.evaluations},
            {"performance", perf_json(r.performance)},
            {"exergy", exergy_json(r.exergy)},
            {"history", r.history},
        };
    };
    ordered_json j{{"ga", result_json(ga)}};
    if (oracle != nullptr) j["oracle"] = result_json(*oracle);
    return j.dump(2) + "\n";
}

std::string topsis_to_json(const DecisionMatrix& m, const TopsisResult& r) {
    ordered_json ranking = ordered_json::array();
    for (std::size_t idx : r.ranking) {
        ranking.push_back(ordered_json{{"alternative", m.alternatives[idx]},
                                       {"closeness", r.closeness[idx]},
                                       {"share", r.share[idx]}});
    }
    return ordered_json{{"ranking", ranking}}.dump(2) + "\n";
}

std::string station_table_csv(const StationTable& table) {
    std::ostringstream os;
    os << "station,T_K,P_kPa,mdot_kgps\n";
    for (const auto& s : table.rows) {
        os << static_cast<int>(s.id) << "," << fmt(s.t_k) << "," << fmt(s.p_kpa)
           << "," << fmt(s.mdot_kgps) << "\n";
    }
    return os.str();
}

std::string exergy_csv(const ExergyReport& rep) {
    std::ostringstream os;
    os << "component,etaEx,E_D_kW\n";
    for (const auto& c : rep.components) {
        os << component_name(c.component) << ",";
        if (c.eta_defined) os << fmt(c.eta_ex);
        os << "," << fmt(c.destruction_kw) << "\n";
    }
    os << "exhaust,," << fmt(rep.exhaust_residual_kw) << "\n";
    return os.str();
}

std::string convergence_csv(const OptimizationResult& r) {
    std::ostringstream os;
    os << "generation,bestFitness\n";
    for (std::size_t g = 0; g < r.history.size(); ++g)
        os << g << "," << fmt(r.history[g]) << "\n";
    return os.str();
}

std::vector<SweepRow> run_sweep(const EngineSpec& spec,
                                const FlightCondition& flight,
                                const SweepSection& sweep,
                                const std::vector<Fuel>& extra_fuels) {
    std::vector<SweepRow> rows;
    const double eps = 1e-9;
    for (double dt = sweep.delta_t_from; dt <= sweep.delta_t_to + eps;
         dt += sweep.delta_t_step) {
        for (const std::string& fuel_name : sweep.fuels) {
            SweepRow row;
            row.delta_t_k = dt;
            row.fuel = fuel_name;
            try {
                const Fuel fuel = fuel_lookup(fuel_name, extra_fuels);
                FlightCondition fc = flight;
                fc.delta_t_k = dt;
                EngineSpec sp = spec;
                const CycleResult cycle = run_cycle(sp, fc, fuel);
                row.exergy = audit_cycle(cycle, sp);
                row.perf = cycle.perf;
                row.intake_kgps = cycle.intake_kgps;
            } catch (const Error& e) {
                row.ok = false;
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "deltaT_K,fuel,error,intake_kgps,thrust_kN,fuelFlow_kgps,"
          "tsfc_g_per_kNs,etaThermal,etaPropulsive,etaOverall,etaExergetic,"
          "tsf_Ns_per_kg,snox,noxRate_g_per_s,offtake_kW,fuelExergyRate_kW,"
          "entropyGeneration_kW_per_K,exhaustResidual_kW";
    const Component comps[] = {Component::Fan, Component::LPC, Component::HPC,
                               Component::Combustor, Component::HPT,
                               Component::LPT};
    for (Component c : comps)
        os << ",etaEx_" << component_name(c) << ",E_D_" << component_name(c)
           << "_kW";
    os << "\n";
    for (const auto& r : rows) {
        os << fmt(r.delta_t_k) << "," << r.fuel << ",";
        if (!r.ok) {
            std::string msg = r.error;
            for (char& ch : msg) {
                if (ch == ',' || ch == '\n') ch = ';';
            }
            os << msg;
            for (int i = 0; i < 15 + 12; ++i) os << ",";
            os << "\n";
            continue;
        }
        os << "," << fmt(r.intake_kgps) << "," << fmt(r.perf.thrust_kn) << ","
           << fmt(r.perf.fuel_flow_kgps) << "," << fmt(r.perf.tsfc_g_per_kns)
           << "," << fmt(r.perf.eta_thermal) << "," << fmt(r.perf.eta_propulsive)
           << "," << fmt(r.perf.eta_overall) << "," << fmt(r.perf.eta_exergetic)
           << "," << fmt(r.perf.tsf_ns_per_kg) << "," << fmt(r.perf.snox) << ","
           << fmt(r.perf.nox_g_per_s) << "," << fmt(r.perf.offtake_kw) << ","
           << fmt(r.exergy.fuel_exergy_kw) << ","
           << fmt(r.exergy.entropy_gen_kw_per_k) << ","
           << fmt(r.exergy.exhaust_residual_kw);
        for (Component c : comps) {
            const auto& rec = r.exergy.at(c);
            os << ",";
            if (rec.eta_defined) os << fmt(rec.eta_ex);
            os << "," << fmt(rec.destruction_kw);
        }
        os << "\n";
    }
    return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j{{"deltaT", r.delta_t_k}, {"fuel", r.fuel}};
        if (!r.ok) {
            j["error"] = r.error;
        } else {
            j["intakeMassFlow"] = r.intake_kgps;
            j["performance"] = perf_json(r.perf);
            j["exergy"] = exergy_json(r.exergy);
        }
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace tfcycle
