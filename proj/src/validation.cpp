#include "tfcycle/validation.hpp"

#include "tfcycle/performance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace tfcycle {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double x, int prec = 4) {
    std::ostringstream os;
    os.precision(prec);
    os << x;
    return os.str();
}

CheckResult band_check(const std::string& name, double value, double target,
                       double rel_tol) {
    CheckResult c;
    c.name = name;
    const double err = (value - target) / target;
    c.pass = std::abs(err) <= rel_tol;
    c.detail = fmt(value) + " vs " + fmt(target) + " (" +
               (err >= 0 ? "+" : "") + fmt(err * 100.0, 3) + "%, tol ±" +
               fmt(rel_tol * 100.0, 3) + "%)";
    return c;
}

CheckResult range_check(const std::string& name, double value, double lo,
                        double hi) {
    CheckResult c;
    c.name = name;
    c.pass = value >= lo && value <= hi;
    c.detail = fmt(value) + " in [" + fmt(lo) + ", " + fmt(hi) + "]";
    return c;
}

CheckResult bool_check(const std::string& name, bool ok,
                       const std::string& detail) {
    return {name, ok, detail};
}

struct Analysis {
    CycleResult cycle;
    ExergyReport exergy;
};

Analysis analyze(const EngineSpec& spec, const FlightCondition& cond,
                 const std::string& fuel_name) {
    Analysis a;
    a.cycle = run_cycle(spec, cond, fuel_lookup(fuel_name));
    a.exergy = audit_cycle(a.cycle, spec);
    return a;
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) return false;
    }
    return true;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] > v[i - 1])) return false;
    }
    return true;
}

}  // namespace

bool CriterionResult::pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::string CriterionResult::summary() const {
    std::ostringstream os;
    os << "[" << id << "] " << name << " ... " << (pass() ? "PASS" : "FAIL")
       << " (" << fmt(elapsed_s, 3) << " s)";
    return os.str();
}

DecisionMatrix reference_cycle_matrix() {
    DecisionMatrix m;
    m.alternatives = {"case1", "case2", "case3"};
    m.criteria = {"etaThermal", "etaExergetic", "tsfc", "entropyGeneration",
                  "noxRate"};
    m.values = {
        {57.91, 28.761, 6.58, 247.3, 5.186},
        {58.06, 23.64, 7.996, 301.50, 5.961},
        {54.85, 30.85, 8.008, 95.60, 2.733},
    };
    return m;
}

WeightVector economic_weights() { return {{0.99, 0.0, -0.95, 0.0, 0.0}}; }

WeightVector exergo_environmental_weights() {
    return {{0.0, 0.99, 0.0, -0.95, -0.90}};
}

DecisionMatrix cycle_metrics_matrix(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<CyclePerformance, ExergyReport>>& cycles) {
    if (labels.size() != cycles.size())
        throw PreconditionError("one label per cycle is required");
    DecisionMatrix m;
    m.alternatives = labels;
    m.criteria = {"etaThermal", "etaExergetic", "tsfc", "entropyGeneration",
                  "noxRate"};
    for (const auto& [perf, exergy] : cycles) {
        m.values.push_back({perf.eta_thermal, exergy.engine_eta_ex,
                            perf.tsfc_g_per_kns, exergy.entropy_gen_kw_per_k,
                            perf.nox_g_per_s});
    }
    return m;
}

namespace {

CriterionResult criterion_takeoff() {
    CriterionResult r{1, "take-off validation (thrust, TSFC)", {}, 0.0};
    const auto t0 = clock_type::now();
    const Analysis a = analyze(EngineSpec{}, takeoff_condition(), "JP10");
    r.checks.push_back(band_check("thrust", a.cycle.perf.thrust_kn, 310.0, 0.05));
    r.checks.push_back(band_check("tsfc", a.cycle.perf.tsfc_g_per_kns, 8.454, 0.12));
    r.elapsed_s = seconds_since(t0);
    r.checks.push_back(bool_check("runtime < 1 s", r.elapsed_s < 1.0,
                                  fmt(r.elapsed_s, 3) + " s"));
    return r;
}

CriterionResult criterion_ondesign() {
    CriterionResult r{2, "on-design validation (thrust, TSFC)", {}, 0.0};
    const auto t0 = clock_type::now();
    const Analysis a = analyze(EngineSpec{}, ondesign_condition(), "JP10");
    r.checks.push_back(band_check("thrust", a.cycle.perf.thrust_kn, 72.5, 0.08));
    r.checks.push_back(band_check("tsfc", a.cycle.perf.tsfc_g_per_kns, 18.001, 0.12));
    r.elapsed_s = seconds_since(t0);
    r.checks.push_back(bool_check("runtime < 1 s", r.elapsed_s < 1.0,
                                  fmt(r.elapsed_s, 3) + " s"));
    return r;
}

CriterionResult criterion_hydrogen_baseline() {
    CriterionResult r{3, "hydrogen baseline reproduction", {}, 0.0};
    const auto t0 = clock_type::now();
    const Analysis a = analyze(EngineSpec{}, ondesign_condition(), "hydrogen");
    const CyclePerformance& p = a.cycle.perf;
    r.checks.push_back(band_check("thrust", p.thrust_kn, 73.26, 0.10));
    r.checks.push_back(band_check("tsfc", p.tsfc_g_per_kns, 6.594, 0.10));
    r.checks.push_back(band_check("etaThermal", p.eta_thermal, 0.5791, 0.10));
    r.checks.push_back(band_check("etaPropulsive", p.eta_propulsive, 0.7795, 0.10));
    const double identity =
        std::abs(p.eta_overall - p.eta_thermal * p.eta_propulsive);
    r.checks.push_back(bool_check("etaOverall identity <= 1e-12",
                                  identity <= 1e-12, fmt(identity, 3)));
    r.elapsed_s = seconds_since(t0);
    return r;
}

CriterionResult criterion_trends() {
    CriterionResult r{4, "inlet-temperature trend suite", {}, 0.0};
    const auto t0 = clock_type::now();
    const EngineSpec spec;
    const FlightCondition conds[] = {takeoff_condition(), ondesign_condition()};
    const char* labels[] = {"take-off", "on-design"};
    for (int ci = 0; ci < 2; ++ci) {
        // Columns indexed by rising inlet temperature.
        std::vector<double> intake, thrust_col, fuel, snox_col, sgen, etaex;
        for (double dt = -20.0; dt <= 10.0 + 1e-9; dt += 5.0) {
            FlightCondition fc = conds[ci];
            fc.delta_t_k = dt;
            const CycleResult c = run_cycle(spec, fc, fuel_lookup("JP10"));
            intake.push_back(c.intake_kgps);
            thrust_col.push_back(c.perf.thrust_kn);
            fuel.push_back(c.perf.fuel_flow_kgps);
            snox_col.push_back(c.perf.snox);
            if (ci == 1) {
                const ExergyReport rep = audit_cycle(c, spec);
                sgen.push_back(rep.entropy_gen_kw_per_k);
                etaex.push_back(rep.engine_eta_ex);
            }
        }
        const std::string tag = labels[ci];
        r.checks.push_back(bool_check("intake flow decreasing with T1, " + tag,
                                      strictly_decreasing(intake), ""));
        r.checks.push_back(bool_check("thrust decreasing with T1, " + tag,
                                      strictly_decreasing(thrust_col), ""));
        r.checks.push_back(bool_check("fuel flow decreasing with T1, " + tag,
                                      strictly_decreasing(fuel), ""));
        r.checks.push_back(bool_check("SNOx increasing with T1, " + tag,
                                      strictly_increasing(snox_col), ""));
        if (ci == 1) {
            r.checks.push_back(bool_check(
                "entropy generation decreasing with T1, on-design",
                strictly_decreasing(sgen), ""));
            r.checks.push_back(
                bool_check("exergetic efficiency increasing with T1, on-design",
                           strictly_increasing(etaex), ""));
        }
    }
    r.elapsed_s = seconds_since(t0);
    r.checks.push_back(bool_check("runtime < 10 s", r.elapsed_s < 10.0,
                                  fmt(r.elapsed_s, 3) + " s"));
    return r;
}

CriterionResult criterion_abstract_deltas() {
    CriterionResult r{5, "cooling deltas at on-design (dT = -20 vs 0)", {}, 0.0};
    const auto t0 = clock_type::now();
    const EngineSpec spec;
    FlightCondition cooled = ondesign_condition();
    cooled.delta_t_k = -20.0;
    const CycleResult base = run_cycle(spec, ondesign_condition(), fuel_lookup("JP10"));
    const CycleResult cold = run_cycle(spec, cooled, fuel_lookup("JP10"));
    const double d_thrust =
        (cold.perf.thrust_kn - base.perf.thrust_kn) / base.perf.thrust_kn;
    const double d_fuel = (cold.perf.fuel_flow_kgps - base.perf.fuel_flow_kgps) /
                          base.perf.fuel_flow_kgps;
    const double d_snox = (cold.perf.snox - base.perf.snox) / base.perf.snox;
    r.checks.push_back(
        range_check("thrust change [9%, 14%]", d_thrust * 100.0, 9.0, 14.0));
    r.checks.push_back(
        range_check("fuel-flow change [8%, 13%]", d_fuel * 100.0, 8.0, 13.0));
    r.checks.push_back(bool_check("SNOx change negative", d_snox < 0.0,
                                  fmt(d_snox * 100.0, 3) + "%"));
    r.elapsed_s = seconds_since(t0);
    return r;
}

CriterionResult criterion_exergy_soundness() {
    CriterionResult r{6, "exergy audit soundness", {}, 0.0};
    const auto t0 = clock_type::now();
    const EngineSpec spec;
    const FlightCondition conds[] = {takeoff_condition(), ondesign_condition()};
    bool destruction_ok = true;
    bool closure_ok = true;
    bool combustor_largest = true;
    double worst_destruction = 0.0;
    double worst_closure = 0.0;
    for (const FlightCondition& base : conds) {
        for (double dt = -20.0; dt <= 10.0 + 1e-9; dt += 5.0) {
            for (const char* fuel : {"JP10", "natural-gas", "hydrogen"}) {
                FlightCondition fc = base;
                fc.delta_t_k = dt;
                const CycleResult c = run_cycle(spec, fc, fuel_lookup(fuel));
                const ExergyReport rep = audit_cycle(c, spec);
                for (const auto& rec : rep.components) {
                    worst_destruction =
                        std::min(worst_destruction, rec.destruction_kw);
                    if (rec.destruction_kw < -1e-6) destruction_ok = false;
                }
                const double inputs = rep.fuel_exergy_kw + rep.intake_exergy_kw;
                double outputs = rep.thrust_exergy_kw + rep.exhaust_residual_kw +
                                 c.ledger.w_offtake_kw;
                for (const auto& rec : rep.components)
                    outputs += rec.destruction_kw;
                const double residual = std::abs(inputs - outputs) / inputs;
                worst_closure = std::max(worst_closure, residual);
                if (residual > 0.005) closure_ok = false;
                if (dt == 0.0) {
                    const double cc =
                        rep.at(Component::Combustor).destruction_kw;
                    for (const auto& rec : rep.components) {
                        if (rec.component != Component::Combustor &&
                            rec.destruction_kw >= cc)
                            combustor_largest = false;
                    }
                }
            }
        }
    }
    r.checks.push_back(bool_check("component destructions >= -1e-6 kW",
                                  destruction_ok,
                                  "min " + fmt(worst_destruction, 6) + " kW"));
    r.checks.push_back(bool_check(
        "combustor is the largest destroyer at baseline", combustor_largest, ""));
    r.checks.push_back(bool_check("exergy balance closes within 0.5%",
                                  closure_ok,
                                  "worst " + fmt(worst_closure * 100.0, 3) + "%"));
    r.elapsed_s = seconds_since(t0);
    return r;
}

struct GaRuns {
    OptimizationResult ga[3];
    OptimizationResult oracle[3];
    bool deterministic = false;
};

GaRuns run_ga_suite(int jobs) {
    GaRuns out;
    const EngineSpec tmpl;
    const ObjectiveCase cases[] = {ObjectiveCase::ThrustMax,
                                   ObjectiveCase::ThermalEffMax,
                                   ObjectiveCase::PropulsiveEffMax};
    for (int i = 0; i < 3; ++i) {
        OptimizationProblem prob = OptimizationProblem::standard(cases[i], tmpl);
        GAConfig cfg;
        cfg.seed = 20240 + static_cast<std::uint64_t>(i);
        cfg.jobs = jobs;
        out.ga[i] = ga_optimize(prob, cfg);
        out.oracle[i] = grid_search_oracle(prob, 7, jobs);
    }
    // Determinism probe on case 1.
    OptimizationProblem prob =
        OptimizationProblem::standard(ObjectiveCase::ThrustMax, tmpl);
    GAConfig cfg;
    cfg.seed = 20240;
    cfg.jobs = jobs;
    const OptimizationResult again = ga_optimize(prob, cfg);
    out.deterministic =
        again.history == out.ga[0].history &&
        again.best.to_array() == out.ga[0].best.to_array() &&
        again.objective == out.ga[0].objective;
    return out;
}

CriterionResult criterion_ga_vs_oracle(const GaRuns& runs, double elapsed_s) {
    CriterionResult r{7, "GA vs grid-search oracle", {}, elapsed_s};
    for (int i = 0; i < 3; ++i) {
        const std::string tag = "case " + std::to_string(i + 1);
        const OptimizationResult& ga = runs.ga[i];
        const OptimizationResult& oracle = runs.oracle[i];
        r.checks.push_back(bool_check(tag + " feasible", ga.feasible, ""));
        if (oracle.feasible) {
            const bool ok = ga.objective >= oracle.objective * 0.99;
            r.checks.push_back(bool_check(
                tag + " GA >= oracle - 1%", ok,
                "ga " + fmt(ga.objective) + " vs oracle " + fmt(oracle.objective)));
        } else {
            r.checks.push_back(bool_check(tag + " oracle feasible", true,
                                          "oracle found no feasible grid point"));
        }
    }
    r.checks.push_back(bool_check("fixed seed reproduces bit-identically",
                                  runs.deterministic, ""));
    r.checks.push_back(bool_check("runtime < 5 min", elapsed_s < 300.0,
                                  fmt(elapsed_s, 3) + " s"));
    return r;
}

CriterionResult criterion_optimization_quality(const GaRuns& runs) {
    CriterionResult r{8, "optimization qualitative match", {}, 0.0};
    const auto t0 = clock_type::now();
    const Analysis base = analyze(EngineSpec{}, ondesign_condition(), "hydrogen");
    const CyclePerformance& b = base.cycle.perf;
    const CyclePerformance& c1 = runs.ga[0].performance;
    const CyclePerformance& c2 = runs.ga[1].performance;
    const CyclePerformance& c3 = runs.ga[2].performance;
    r.checks.push_back(bool_check(
        "case-1 thrust >= baseline + 10%", c1.thrust_kn >= 1.10 * b.thrust_kn,
        fmt(c1.thrust_kn) + " vs baseline " + fmt(b.thrust_kn)));
    r.checks.push_back(bool_check(
        "case-2 etaThermal >= baseline", c2.eta_thermal >= b.eta_thermal,
        fmt(c2.eta_thermal) + " vs baseline " + fmt(b.eta_thermal)));
    r.checks.push_back(bool_check(
        "case-3 etaPropulsive >= baseline + 8 pt",
        c3.eta_propulsive >= b.eta_propulsive + 0.08,
        fmt(c3.eta_propulsive) + " vs baseline " + fmt(b.eta_propulsive)));
    r.elapsed_s = seconds_since(t0);
    return r;
}

CriterionResult criterion_topsis_tables() {
    CriterionResult r{9, "TOPSIS ranking of the reference cycles", {}, 0.0};
    const DecisionMatrix m = reference_cycle_matrix();

    const auto t0 = clock_type::now();
    const TopsisResult econ = topsis_rank(m, economic_weights());
    const TopsisResult envi = topsis_rank(m, exergo_environmental_weights());
    const double elapsed = seconds_since(t0);

    const bool econ_order = econ.ranking ==
                            std::vector<std::size_t>{0, 1, 2};
    r.checks.push_back(bool_check("economic ranking case1 > case2 > case3",
                                  econ_order, ""));
    const double econ_ref[] = {0.81, 0.18, 0.05};
    bool econ_scores = true;
    for (int i = 0; i < 3; ++i)
        econ_scores = econ_scores && std::abs(econ.share[i] - econ_ref[i]) <= 0.15;
    r.checks.push_back(bool_check(
        "economic scores within 0.15",
        econ_scores,
        fmt(econ.share[0], 3) + "/" + fmt(econ.share[1], 3) + "/" +
            fmt(econ.share[2], 3) + " vs 0.81/0.18/0.05"));

    const bool envi_order =
        envi.ranking.front() == 2 && envi.ranking.back() == 1;
    r.checks.push_back(bool_check(
        "exergo-environmental ranking: case3 first, case2 last", envi_order, ""));
    const double envi_ref[] = {0.21, 0.02, 0.77};
    bool envi_scores = true;
    for (int i = 0; i < 3; ++i)
        envi_scores = envi_scores && std::abs(envi.share[i] - envi_ref[i]) <= 0.15;
    r.checks.push_back(bool_check(
        "exergo-environmental scores within 0.15",
        envi_scores,
        fmt(envi.share[0], 3) + "/" + fmt(envi.share[1], 3) + "/" +
            fmt(envi.share[2], 3) + " vs 0.21/0.02/0.77"));
    r.checks.push_back(bool_check("runtime < 1 ms", elapsed < 1e-3,
                                  fmt(elapsed * 1e3, 3) + " ms"));
    r.elapsed_s = elapsed;
    return r;
}

CriterionResult criterion_point_checks() {
    CriterionResult r{10, "unit and property point checks", {}, 0.0};
    const auto t0 = clock_type::now();

    const double snox_ref = snox({2965.0, 826.0, 0.0});
    r.checks.push_back(bool_check(
        "SNOx(2965 kPa, 826 K, 0) == exp(6.29/53.2) within 1e-9",
        std::abs(snox_ref - std::exp(6.29 / 53.2)) <= 1e-9, fmt(snox_ref, 10)));

    const AmbientState amb = isa_ambient(0.0);
    const StationState dead{StationId::ambient, amb.t_k, amb.p_kpa, 100.0};
    const double psi0 = physical_exergy(dead, amb, standard_air()).rate_kw;
    r.checks.push_back(
        bool_check("dead-state exergy exactly zero", psi0 == 0.0, fmt(psi0)));

    // Randomized TOPSIS properties: scale invariance and the two endpoint
    // identities.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.1, 10.0);
    std::uniform_int_distribution<int> mdist(2, 6);
    std::uniform_int_distribution<int> ndist(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    bool scale_ok = true;
    bool endpoint_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = mdist(rng);
        const int n = ndist(rng);
        DecisionMatrix mat;
        WeightVector w;
        for (int i = 0; i < m; ++i)
            mat.alternatives.push_back("a" + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            mat.criteria.push_back("c" + std::to_string(j));
            w.signed_weights.push_back(sign(rng) ? unit(rng) : -unit(rng));
        }
        mat.values.assign(m, std::vector<double>(n, 0.0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) mat.values[i][j] = unit(rng);

        const TopsisResult base = topsis_rank(mat, w);

        DecisionMatrix scaled = mat;
        const int jcol = std::uniform_int_distribution<int>(0, n - 1)(rng);
        const double c = unit(rng);
        for (int i = 0; i < m; ++i) scaled.values[i][jcol] *= c;
        const TopsisResult after = topsis_rank(scaled, w);
        if (after.ranking != base.ranking) scale_ok = false;

        // Build an extended matrix whose last two rows sit exactly on the
        // per-criterion best and worst of the originals.
        DecisionMatrix ext = mat;
        std::vector<double> best(n), worst(n);
        for (int j = 0; j < n; ++j) {
            double vmin = mat.values[0][j], vmax = mat.values[0][j];
            for (int i = 1; i < m; ++i) {
                vmin = std::min(vmin, mat.values[i][j]);
                vmax = std::max(vmax, mat.values[i][j]);
            }
            const bool benefit = w.signed_weights[j] > 0.0;
            best[j] = benefit ? vmax : vmin;
            worst[j] = benefit ? vmin : vmax;
        }
        ext.alternatives.push_back("ideal");
        ext.alternatives.push_back("nadir");
        ext.values.push_back(best);
        ext.values.push_back(worst);
        const TopsisResult extres = topsis_rank(ext, w);
        if (std::abs(extres.closeness[m] - 1.0) > 1e-12 ||
            std::abs(extres.closeness[m + 1] - 0.0) > 1e-12)
            endpoint_ok = false;
    }
    r.checks.push_back(bool_check("TOPSIS scale invariance, 1000 matrices",
                                  scale_ok, ""));
    r.checks.push_back(bool_check("TOPSIS endpoint property, 1000 matrices",
                                  endpoint_ok, ""));
    r.elapsed_s = seconds_since(t0);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_validation(const ValidationOptions& opts) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_takeoff());
    out.push_back(criterion_ondesign());
    out.push_back(criterion_hydrogen_baseline());
    out.push_back(criterion_trends());
    out.push_back(criterion_abstract_deltas());
    out.push_back(criterion_exergy_soundness());
    if (!opts.skip_slow) {
        const auto t0 = clock_type::now();
        const GaRuns runs = run_ga_suite(opts.jobs);
        const double elapsed = seconds_since(t0);
        out.push_back(criterion_ga_vs_oracle(runs, elapsed));
        out.push_back(criterion_optimization_quality(runs));
    }
    out.push_back(criterion_topsis_tables());
    out.push_back(criterion_point_checks());
    return out;
}

}  // namespace tfcycle
