#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfcycle/decision.hpp"
#include "tfcycle/optimizer.hpp"

namespace tfcycle {

enum class OutputFormat { Csv, Json };

struct SweepSection {
    double delta_t_from = -20.0;
    double delta_t_to = 10.0;
    double delta_t_step = 5.0;
    std::vector<std::string> fuels = {"JP10", "natural-gas", "hydrogen"};
};

struct OptimizeSection {
    ObjectiveCase objective = ObjectiveCase::ThrustMax;
    Bounds bounds = default_bounds();
    std::optional<ConstraintSet> constraints;  // defaults follow the case
    GAConfig ga;
    int oracle_points_per_axis = 7;
    bool run_oracle = true;
};

struct RankSection {
    DecisionMatrix matrix;
    WeightVector weights;
};

/// One run = engine + flight point + fuel + exactly one command section.
struct RunConfig {
    EngineSpec engine;
    FlightCondition flight;
    std::string fuel = "JP10";
    std::vector<Fuel> extra_fuels;
    std::optional<SweepSection> sweep;
    std::optional<OptimizeSection> optimize;
    std::optional<RankSection> rank;
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
};

RunConfig default_run_config();

/// JSON round-trip. load_run_config throws ConfigError naming the offending
/// field; dump parses back to an identical config.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text);
std::string dump_run_config(const RunConfig& cfg);

// JSON fragments reused by the CLI and the Python bindings.
std::string perf_to_json(const CyclePerformance& perf);
std::string exergy_to_json(const ExergyReport& rep);
std::string cycle_to_json(const CycleResult& cycle, const ExergyReport& rep);
std::string optimization_to_json(const OptimizationResult& ga,
                                 const OptimizationResult* oracle);
std::string topsis_to_json(const DecisionMatrix& m, const TopsisResult& r);

// CSV emitters (comma delimiter, '.' decimal separator, header row).
std::string station_table_csv(const StationTable& table);
std::string exergy_csv(const ExergyReport& rep);
std::string convergence_csv(const OptimizationResult& r);

struct SweepRow {
    double delta_t_k = 0.0;
    std::string fuel;
    bool ok = true;
    std::string error;
    double intake_kgps = 0.0;
    CyclePerformance perf;
    ExergyReport exergy;
};

std::vector<SweepRow> run_sweep(const EngineSpec& spec,
                                const FlightCondition& flight,
                                const SweepSection& sweep,
                                const std::vector<Fuel>& extra_fuels);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

}  // namespace tfcycle
