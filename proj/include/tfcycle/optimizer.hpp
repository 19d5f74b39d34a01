#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tfcycle/exergy.hpp"

namespace tfcycle {

/// The five free cycle parameters. pi_compressor is the overall core
/// compression (LPC x HPC), split in the template's proportion.
struct DesignVector {
    double tit_k = 1695.0;
    double delta_t_k = 0.0;
    double pi_fan = 1.5;
    double pi_compressor = 29.9;
    double bypass_ratio = 9.1;

    std::array<double, 5> to_array() const {
        return {tit_k, delta_t_k, pi_fan, pi_compressor, bypass_ratio};
    }
    static DesignVector from_array(const std::array<double, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }
};

struct Bounds {
    DesignVector lower;
    DesignVector upper;

    bool contains(const DesignVector& d) const;
    DesignVector clamp(const DesignVector& d) const;
    DesignVector midpoint() const;
};

/// Default search box. The fan and bypass ranges are wider than the
/// narrow published table so that the known optima are actually inside
/// the box.
Bounds default_bounds();

enum class ObjectiveCase { ThrustMax = 1, ThermalEffMax = 2, PropulsiveEffMax = 3 };

struct ConstraintBand {
    double min = 0.0;
    double max = 0.0;
};

/// Per-case feasibility bands; absent bands are unconstrained.
struct ConstraintSet {
    std::optional<ConstraintBand> eta_thermal;
    std::optional<ConstraintBand> tsfc;
    std::optional<ConstraintBand> eta_propulsive;
    std::optional<ConstraintBand> tsf;
};

ConstraintSet default_constraints(ObjectiveCase c);

struct GAConfig {
    int population_size = 100;
    int generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
    double mutation_sigma_frac = 0.05;  // sigma as a fraction of range
    int tournament_size = 3;
    int elite_count = 1;
    double penalty_weight = 0.0;  // <= 0 picks 10x the objective scale
    std::uint64_t seed = 12345;
    int jobs = 1;

    void validate() const;
};

struct OptimizationResult {
    DesignVector best;
    CyclePerformance performance;
    ExergyReport exergy;
    bool feasible = false;
    double objective = 0.0;
    double fitness = 0.0;
    std::vector<double> history;  // per-generation best fitness
    long evaluations = 0;
};

/// Apply a design vector to a template spec (rescaling the two core
/// compressors so their product matches pi_compressor while preserving
/// the template's split).
EngineSpec apply_design(const DesignVector& d, const EngineSpec& tmpl);

/// Full cycle + audit at the optimization flight point. When bounds are
/// given, an out-of-bounds vector is a precondition error.
std::pair<CyclePerformance, ExergyReport> evaluate_design(
    const DesignVector& d, const EngineSpec& tmpl, const FlightCondition& cond,
    const Fuel& fuel, const Bounds* bounds = nullptr);

/// Objective value for a case (thrust [kN], eta_th, or eta_p).
double objective_value(const CyclePerformance& perf, ObjectiveCase c);

/// Total normalized band violation (0 when feasible).
double constraint_violation(const CyclePerformance& perf,
                            const ConstraintSet& constraints);

/// Objective minus penalty_weight times the normalized violations.
double penalized_fitness(const CyclePerformance& perf, ObjectiveCase c,
                         const ConstraintSet& constraints,
                         double penalty_weight);

struct FitnessEval {
    double fitness = 0.0;
    double objective = 0.0;
    double violation = 0.0;
    bool cycle_ok = true;
};

using FitnessFn = std::function<FitnessEval(const DesignVector&)>;

/// Generic GA over an arbitrary fitness. Deterministic for a fixed seed;
/// the per-generation best is monotone under elitism.
OptimizationResult ga_core(const FitnessFn& fitness, const Bounds& bounds,
                           const GAConfig& cfg);

/// Problem context shared by the GA and the grid oracle.
struct OptimizationProblem {
    EngineSpec tmpl;
    FlightCondition cond = ondesign_condition();
    Fuel fuel;
    ObjectiveCase objective = ObjectiveCase::ThrustMax;
    Bounds bounds;
    ConstraintSet constraints;

    static OptimizationProblem standard(ObjectiveCase c, const EngineSpec& tmpl);
    FitnessFn make_fitness(double penalty_weight) const;
    double auto_penalty_weight() const;
};

OptimizationResult ga_optimize(const OptimizationProblem& prob,
                               const GAConfig& cfg);

/// Exhaustive regular-grid search over an arbitrary fitness; the
/// independent cross-check for the GA.
OptimizationResult grid_search_core(const FitnessFn& fitness,
                                    const Bounds& bounds, int points_per_axis,
                                    int jobs = 1);

OptimizationResult grid_search_oracle(const OptimizationProblem& prob,
                                      int points_per_axis, int jobs = 1);

}  // namespace tfcycle
