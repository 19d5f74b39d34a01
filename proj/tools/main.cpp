#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tfcycle/validation.hpp"

namespace fs = std::filesystem;
using namespace tfcycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitValidation = 4;

struct CommonArgs {
    std::string config_path;
    std::string output_path;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 0;
};

// Resolve a config path, falling back to $TFCYCLE_CONFIG_DIR for relative
// names that do not exist in the working directory.
std::string resolve_config_path(const std::string& path) {
    if (path.empty() || fs::exists(path) || fs::path(path).is_absolute())
        return path;
    if (const char* dir = std::getenv("TFCYCLE_CONFIG_DIR")) {
        const fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    return path;
}

RunConfig load_config(const CommonArgs& args) {
    RunConfig cfg = args.config_path.empty()
                        ? default_run_config()
                        : load_run_config(resolve_config_path(args.config_path));
    if (!args.output_path.empty()) cfg.output_path = args.output_path;
    if (!args.format.empty()) {
        if (args.format == "csv") {
            cfg.format = OutputFormat::Csv;
        } else if (args.format == "json") {
            cfg.format = OutputFormat::Json;
        } else {
            throw ConfigError("--format must be csv or json");
        }
    }
    if (cfg.optimize) {
        if (args.seed_set) cfg.optimize->ga.seed = args.seed;
        if (args.jobs > 0) cfg.optimize->ga.jobs = args.jobs;
    }
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write output file: " + path);
    out << content;
}

std::string stem_path(const std::string& path) {
    fs::path p(path);
    const fs::path parent = p.parent_path();
    return (parent / p.stem()).string();
}

std::string perf_csv(const CyclePerformance& p) {
    std::ostringstream os;
    os << "thrust,tsfc,etaThermal,etaPropulsive,etaOverall,etaExergetic,tsf,"
          "fuelFlow,snox,noxRate,offtake\n";
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                  "%.10g\n",
                  p.thrust_kn, p.tsfc_g_per_kns, p.eta_thermal,
                  p.eta_propulsive, p.eta_overall, p.eta_exergetic,
                  p.tsf_ns_per_kg, p.fuel_flow_kgps, p.snox, p.nox_g_per_s,
                  p.offtake_kw);
    os << buf;
    return os.str();
}

void print_analysis(const CycleResult& cycle, const ExergyReport& rep) {
    std::printf("station table\n");
    std::printf("  %-16s %10s %12s %12s\n", "station", "T [K]", "P [kPa]",
                "mdot [kg/s]");
    for (const auto& s : cycle.stations.rows) {
        std::printf("  %2d %-13s %10.2f %12.3f %12.3f\n",
                    static_cast<int>(s.id), station_name(s.id), s.t_k, s.p_kpa,
                    s.mdot_kgps);
    }
    const PowerLedger& w = cycle.ledger;
    std::printf("\npower ledger [kW]\n");
    std::printf("  fan %.1f  LPC %.1f  HPC %.1f  HPT %.1f  LPT %.1f  off-take %.1f\n",
                w.w_fan_kw, w.w_lpc_kw, w.w_hpc_kw, w.w_hpt_kw, w.w_lpt_kw,
                w.w_offtake_kw);
    const CyclePerformance& p = cycle.perf;
    std::printf("\nperformance\n");
    std::printf("  thrust        %10.3f kN   (hot %.3f, cold %.3f)\n",
                p.thrust_kn, cycle.thrust_hot_kn, cycle.thrust_cold_kn);
    std::printf("  TSFC          %10.3f g/kNs\n", p.tsfc_g_per_kns);
    std::printf("  fuel flow     %10.4f kg/s\n", p.fuel_flow_kgps);
    std::printf("  eta thermal   %10.4f\n", p.eta_thermal);
    std::printf("  eta propulsive%10.4f\n", p.eta_propulsive);
    std::printf("  eta overall   %10.4f\n", p.eta_overall);
    std::printf("  eta exergetic %10.4f\n", p.eta_exergetic);
    std::printf("  TSF           %10.2f Ns/kg\n", p.tsf_ns_per_kg);
    std::printf("  SNOx          %10.4f\n", p.snox);
    std::printf("  NOx rate      %10.4f g/s\n", p.nox_g_per_s);
    std::printf("  off-take      %10.2f kW\n", p.offtake_kw);
    std::printf("\nexergy audit\n");
    std::printf("  %-10s %10s %14s\n", "component", "etaEx", "E_D [kW]");
    for (const auto& c : rep.components) {
        if (c.eta_defined) {
            std::printf("  %-10s %10.4f %14.1f\n", component_name(c.component),
                        c.eta_ex, c.destruction_kw);
        } else {
            std::printf("  %-10s %10s %14.1f\n", component_name(c.component),
                        "-", c.destruction_kw);
        }
    }
    std::printf("  %-10s %10s %14.1f\n", "exhaust", "", rep.exhaust_residual_kw);
    std::printf("  fuel exergy %.1f kW, entropy generation %.3f kW/K\n",
                rep.fuel_exergy_kw, rep.entropy_gen_kw_per_k);
    if (rep.combustor_verbatim)
        std::printf("  note: combustor efficiency uses the literal-formula "
                    "denominator (can exceed 1)\n");
}

int cmd_analyze(const CommonArgs& args) {
    const RunConfig cfg = load_config(args);
    const Fuel fuel = fuel_lookup(cfg.fuel, cfg.extra_fuels);
    const CycleResult cycle = run_cycle(cfg.engine, cfg.flight, fuel);
    const ExergyReport rep = audit_cycle(cycle, cfg.engine);
    print_analysis(cycle, rep);
    if (!cfg.output_path.empty()) {
        if (cfg.format == OutputFormat::Json) {
            write_file(cfg.output_path, cycle_to_json(cycle, rep));
        } else {
            const std::string stem = stem_path(cfg.output_path);
            write_file(cfg.output_path, station_table_csv(cycle.stations));
            write_file(stem + "_performance.csv", perf_csv(cycle.perf));
            write_file(stem + "_exergy.csv", exergy_csv(rep));
        }
    }
    return kExitOk;
}

int cmd_sweep(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    if (!cfg.sweep) cfg.sweep = SweepSection{};
    const auto rows = run_sweep(cfg.engine, cfg.flight, *cfg.sweep, cfg.extra_fuels);
    const std::string body =
        cfg.format == OutputFormat::Json ? sweep_json(rows) : sweep_csv(rows);
    if (cfg.output_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        write_file(cfg.output_path, body);
        std::printf("wrote %zu sweep rows to %s\n", rows.size(),
                    cfg.output_path.c_str());
    }
    bool any_failed = false;
    for (const auto& r : rows) any_failed = any_failed || !r.ok;
    return any_failed ? kExitInfeasible : kExitOk;
}

int cmd_optimize(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    if (!cfg.optimize) cfg.optimize = OptimizeSection{};
    const OptimizeSection& op = *cfg.optimize;

    // Optimization always runs at the cruise design point with hydrogen;
    // the inlet cooling is part of the design vector itself.
    OptimizationProblem prob =
        OptimizationProblem::standard(op.objective, cfg.engine);
    prob.fuel = fuel_lookup("hydrogen", cfg.extra_fuels);
    prob.bounds = op.bounds;
    if (op.constraints) prob.constraints = *op.constraints;

    const OptimizationResult ga = ga_optimize(prob, op.ga);
    OptimizationResult oracle;
    const bool with_oracle = op.run_oracle;
    if (with_oracle)
        oracle = grid_search_oracle(prob, op.oracle_points_per_axis,
                                    std::max(1, op.ga.jobs));

    std::printf("GA best: %s, objective %.6g, feasible %s (%ld evaluations)\n",
                ga.feasible ? "feasible" : "least-violating", ga.objective,
                ga.feasible ? "yes" : "no", ga.evaluations);
    if (with_oracle)
        std::printf("oracle best: objective %.6g, feasible %s (%ld evaluations)\n",
                    oracle.objective, oracle.feasible ? "yes" : "no",
                    oracle.evaluations);

    const std::string body =
        optimization_to_json(ga, with_oracle ? &oracle : nullptr);
    if (cfg.output_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        write_file(cfg.output_path, body);
        write_file(stem_path(cfg.output_path) + "_convergence.csv",
                   convergence_csv(ga));
    }
    return ga.feasible ? kExitOk : kExitInfeasible;
}

int cmd_rank(const CommonArgs& args) {
    RunConfig cfg = load_config(args);
    if (!cfg.rank) {
        // Default: rank the built-in reference cycles with both weight sets.
        cfg.rank = RankSection{reference_cycle_matrix(), economic_weights()};
    }
    const TopsisResult res = topsis_rank(cfg.rank->matrix, cfg.rank->weights);
    std::printf("%-4s %-16s %10s %10s\n", "rank", "alternative", "closeness",
                "share");
    for (std::size_t pos = 0; pos < res.ranking.size(); ++pos) {
        const std::size_t i = res.ranking[pos];
        std::printf("%-4zu %-16s %10.4f %10.4f\n", pos + 1,
                    cfg.rank->matrix.alternatives[i].c_str(), res.closeness[i],
                    res.share[i]);
    }
    if (!cfg.output_path.empty())
        write_file(cfg.output_path, topsis_to_json(cfg.rank->matrix, res));
    return kExitOk;
}

int cmd_validate(const CommonArgs& args) {
    ValidationOptions opts;
    opts.jobs = args.jobs > 0 ? args.jobs : 1;
    const auto results = run_validation(opts);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s\n", r.summary().c_str());
        for (const auto& c : r.checks) {
            std::printf("    %-54s %s%s%s\n", c.name.c_str(),
                        c.pass ? "ok" : "FAIL", c.detail.empty() ? "" : "  ",
                        c.detail.c_str());
        }
        if (!r.pass()) ++failures;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(results.size()) - failures, results.size());
    return failures == 0 ? kExitOk : kExitValidation;
}

int cmd_dump_defaults(const CommonArgs& args) {
    const std::string body = dump_run_config(default_run_config());
    if (args.output_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        write_file(args.output_path, body);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"design-point turbofan cycle analysis, exergy audit and "
                 "cycle optimization"};
    app.require_subcommand(1);

    CommonArgs args;
    app.add_option("--config", args.config_path, "run configuration (JSON)");
    app.add_option("--output", args.output_path, "output file path");
    app.add_option("--format", args.format, "output format: csv or json");
    auto* seed_opt = app.add_option("--seed", args.seed, "optimizer RNG seed");
    app.add_option("--jobs", args.jobs, "worker threads for parallel sections");

    auto* analyze = app.add_subcommand("analyze", "single design-point analysis");
    auto* sweep = app.add_subcommand("sweep", "inlet-temperature / fuel sweep");
    auto* optimize = app.add_subcommand("optimize", "GA cycle optimization");
    auto* rank = app.add_subcommand("rank", "TOPSIS ranking of alternatives");
    auto* validate =
        app.add_subcommand("validate", "run the built-in validation suite");
    auto* dump =
        app.add_subcommand("dump-defaults", "print the default configuration");
    for (auto* sub : {analyze, sweep, optimize, rank, validate, dump})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    args.seed_set = seed_opt->count() > 0;

    try {
        if (analyze->parsed()) return cmd_analyze(args);
        if (sweep->parsed()) return cmd_sweep(args);
        if (optimize->parsed()) return cmd_optimize(args);
        if (rank->parsed()) return cmd_rank(args);
        if (validate->parsed()) return cmd_validate(args);
        if (dump->parsed()) return cmd_dump_defaults(args);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const InfeasibleCycleError& e) {
        std::fprintf(stderr, "infeasible cycle at station %d: %s\n", e.station,
                     e.what());
        return kExitInfeasible;
    } catch (const NotFoundError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitError;
}
