#include "tfcycle/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace tfcycle {

bool Bounds::contains(const DesignVector& d) const {
    const auto x = d.to_array();
    const auto lo = lower.to_array();
    const auto hi = upper.to_array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    }
    return true;
}

DesignVector Bounds::clamp(const DesignVector& d) const {
    auto x = d.to_array();
    const auto lo = lower.to_array();
    const auto hi = upper.to_array();
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::min(std::max(x[i], lo[i]), hi[i]);
    return DesignVector::from_array(x);
}

DesignVector Bounds::midpoint() const {
    auto lo = lower.to_array();
    const auto hi = upper.to_array();
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = 0.5 * (lo[i] + hi[i]);
    return DesignVector::from_array(lo);
}

Bounds default_bounds() {
    Bounds b;
    b.lower = {1000.0, -10.0, 1.1, 28.0, 7.5};
    b.upper = {2000.0, 10.0, 4.5, 32.0, 12.0};
    return b;
}

ConstraintSet default_constraints(ObjectiveCase c) {
    ConstraintSet s;
    s.tsfc = ConstraintBand{2.0, 8.0};
    switch (c) {
        case ObjectiveCase::ThrustMax:
            s.eta_thermal = ConstraintBand{0.50, 0.75};
            s.eta_propulsive = ConstraintBand{0.75, 0.95};
            break;
        case ObjectiveCase::ThermalEffMax:
            s.tsf = ConstraintBand{140.0, 160.0};
            s.eta_propulsive = ConstraintBand{0.75, 0.95};
            break;
        case ObjectiveCase::PropulsiveEffMax:
            s.tsf = ConstraintBand{70.0, 160.0};
            s.eta_thermal = ConstraintBand{0.50, 0.75};
            break;
    }
    return s;
}

void GAConfig::validate() const {
    if (population_size < 10)
        throw PreconditionError("GA population must be at least 10");
    if (generations < 1) throw PreconditionError("GA needs at least 1 generation");
    for (double rate : {crossover_rate, mutation_rate}) {
        if (rate < 0.0 || rate > 1.0)
            throw PreconditionError("GA rates must lie in [0, 1]");
    }
    if (tournament_size < 1 || elite_count < 0)
        throw PreconditionError("bad GA selection parameters");
}

EngineSpec apply_design(const DesignVector& d, const EngineSpec& tmpl) {
    EngineSpec spec = tmpl;
    spec.tit_k = d.tit_k;
    spec.pi_fan = d.pi_fan;
    spec.bypass_ratio = d.bypass_ratio;
    // Split the overall core ratio in the template's log proportion.
    const double split = std::log(tmpl.pi_lpc) /
                         std::log(tmpl.pi_lpc * tmpl.pi_hpc);
    spec.pi_lpc = std::pow(d.pi_compressor, split);
    spec.pi_hpc = d.pi_compressor / spec.pi_lpc;
    return spec;
}

std::pair<CyclePerformance, ExergyReport> evaluate_design(
    const DesignVector& d, const EngineSpec& tmpl, const FlightCondition& cond,
    const Fuel& fuel, const Bounds* bounds) {
    if (bounds != nullptr && !bounds->contains(d))
        throw PreconditionError("design vector outside the search bounds");
    EngineSpec spec = apply_design(d, tmpl);
    FlightCondition fc = cond;
    fc.delta_t_k = d.delta_t_k;
    const CycleResult cycle = run_cycle(spec, fc, fuel);
    ExergyReport report = audit_cycle(cycle, spec);
    CyclePerformance perf = cycle.perf;
    return {perf, report};
}

double objective_value(const CyclePerformance& perf, ObjectiveCase c) {
    switch (c) {
        case ObjectiveCase::ThrustMax: return perf.thrust_kn;
        case ObjectiveCase::ThermalEffMax: return perf.eta_thermal;
        case ObjectiveCase::PropulsiveEffMax: return perf.eta_propulsive;
    }
    throw Error("unhandled objective case");
}

namespace {

double band_violation(double x, const std::optional<ConstraintBand>& band) {
    if (!band) return 0.0;
    const double width = band->max - band->min;
    if (x < band->min) return (band->min - x) / width;
    if (x > band->max) return (x - band->max) / width;
    return 0.0;
}

}  // namespace

double constraint_violation(const CyclePerformance& perf,
                            const ConstraintSet& constraints) {
    return band_violation(perf.eta_thermal, constraints.eta_thermal) +
           band_violation(perf.tsfc_g_per_kns, constraints.tsfc) +
           band_violation(perf.eta_propulsive, constraints.eta_propulsive) +
           band_violation(perf.tsf_ns_per_kg, constraints.tsf);
}

double penalized_fitness(const CyclePerformance& perf, ObjectiveCase c,
                         const ConstraintSet& constraints,
                         double penalty_weight) {
    return objective_value(perf, c) -
           penalty_weight * constraint_violation(perf, constraints);
}

OptimizationProblem OptimizationProblem::standard(ObjectiveCase c,
                                                  const EngineSpec& tmpl) {
    OptimizationProblem p;
    p.tmpl = tmpl;
    p.cond = ondesign_condition();
    p.fuel = fuel_lookup("hydrogen");
    p.objective = c;
    p.bounds = default_bounds();
    p.constraints = default_constraints(c);
    return p;
}

double OptimizationProblem::auto_penalty_weight() const {
    return objective == ObjectiveCase::ThrustMax ? 1000.0 : 10.0;
}

FitnessFn OptimizationProblem::make_fitness(double penalty_weight) const {
    const OptimizationProblem prob = *this;
    return [prob, penalty_weight](const DesignVector& d) -> FitnessEval {
        FitnessEval ev;
        try {
            auto [perf, rep] = evaluate_design(d, prob.tmpl, prob.cond, prob.fuel);
            ev.objective = objective_value(perf, prob.objective);
            ev.violation = constraint_violation(perf, prob.constraints);
            ev.fitness = ev.objective - penalty_weight * ev.violation;
        } catch (const InfeasibleCycleError&) {
            ev.cycle_ok = false;
            ev.objective = 0.0;
            ev.violation = 1e9;
            ev.fitness = -10.0 * penalty_weight;
        }
        return ev;
    };
}

namespace {

void evaluate_population(const FitnessFn& fitness,
                         const std::vector<DesignVector>& pop,
                         std::vector<FitnessEval>& evals, int jobs) {
    evals.resize(pop.size());
    if (jobs <= 1 || pop.size() < 2) {
        for (std::size_t i = 0; i < pop.size(); ++i) evals[i] = fitness(pop[i]);
        return;
    }
    const int workers = std::min<int>(jobs, static_cast<int>(pop.size()));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            for (std::size_t i = w; i < pop.size(); i += workers)
                evals[i] = fitness(pop[i]);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace

OptimizationResult ga_core(const FitnessFn& fitness, const Bounds& bounds,
                           const GAConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    const auto lo = bounds.lower.to_array();
    const auto hi = bounds.upper.to_array();
    std::array<double, 5> range{};
    for (std::size_t i = 0; i < range.size(); ++i) range[i] = hi[i] - lo[i];

    std::vector<DesignVector> pop(cfg.population_size);
    for (auto& d : pop) {
        std::array<double, 5> x{};
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = lo[i] + unit(rng) * range[i];
        d = DesignVector::from_array(x);
    }

    OptimizationResult result;
    std::vector<FitnessEval> evals;
    DesignVector best_any = pop.front();
    FitnessEval best_any_eval;
    best_any_eval.fitness = -std::numeric_limits<double>::infinity();
    DesignVector least_violating = pop.front();
    double least_violation = std::numeric_limits<double>::infinity();
    bool have_feasible = false;
    DesignVector best_feasible = pop.front();
    FitnessEval best_feasible_eval;

    auto pick = [&](int k) -> int {
        int best = static_cast<int>(unit(rng) * pop.size());
        if (best >= static_cast<int>(pop.size())) best = static_cast<int>(pop.size()) - 1;
        for (int i = 1; i < k; ++i) {
            int cand = static_cast<int>(unit(rng) * pop.size());
            if (cand >= static_cast<int>(pop.size())) cand = static_cast<int>(pop.size()) - 1;
            if (evals[cand].fitness > evals[best].fitness) best = cand;
        }
        return best;
    };

    for (int gen = 0; gen < cfg.generations; ++gen) {
        evaluate_population(fitness, pop, evals, cfg.jobs);
        result.evaluations += static_cast<long>(pop.size());

        int gen_best = 0;
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (evals[i].fitness > evals[gen_best].fitness)
                gen_best = static_cast<int>(i);
            if (evals[i].cycle_ok && evals[i].violation < least_violation) {
                least_violation = evals[i].violation;
                least_violating = pop[i];
            }
            if (evals[i].cycle_ok && evals[i].violation == 0.0 &&
                (!have_feasible ||
                 evals[i].objective > best_feasible_eval.objective)) {
                have_feasible = true;
                best_feasible = pop[i];
                best_feasible_eval = evals[i];
            }
        }
        if (evals[gen_best].fitness > best_any_eval.fitness) {
            best_any_eval = evals[gen_best];
            best_any = pop[gen_best];
        }
        result.history.push_back(best_any_eval.fitness);

        if (gen + 1 == cfg.generations) break;

        std::vector<DesignVector> next;
        next.reserve(pop.size());
        for (int e = 0; e < cfg.elite_count && e < static_cast<int>(pop.size()); ++e)
            next.push_back(best_any);
        while (next.size() < pop.size()) {
            const DesignVector& p1 = pop[pick(cfg.tournament_size)];
            const DesignVector& p2 = pop[pick(cfg.tournament_size)];
            auto c = p1.to_array();
            const auto b = p2.to_array();
            if (unit(rng) < cfg.crossover_rate) {
                for (std::size_t i = 0; i < c.size(); ++i) {
                    const double u = unit(rng);
                    c[i] = u * c[i] + (1.0 - u) * b[i];
                }
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (unit(rng) < cfg.mutation_rate)
                    c[i] += gauss(rng) * cfg.mutation_sigma_frac * range[i];
            }
            next.push_back(bounds.clamp(DesignVector::from_array(c)));
        }
        pop.swap(next);
    }

    if (have_feasible) {
        result.best = best_feasible;
        result.feasible = true;
        result.objective = best_feasible_eval.objective;
        result.fitness = best_feasible_eval.fitness;
    } else {
        result.best = least_violation < std::numeric_limits<double>::infinity()
                          ? least_violating
                          : best_any;
        result.feasible = false;
        const FitnessEval ev = fitness(result.best);
        result.objective = ev.objective;
        result.fitness = ev.fitness;
    }
    return result;
}

OptimizationResult ga_optimize(const OptimizationProblem& prob,
                               const GAConfig& cfg) {
    const double pw =
        cfg.penalty_weight > 0.0 ? cfg.penalty_weight : prob.auto_penalty_weight();
    OptimizationResult result = ga_core(prob.make_fitness(pw), prob.bounds, cfg);
    try {
        auto [perf, rep] =
            evaluate_design(result.best, prob.tmpl, prob.cond, prob.fuel);
        result.performance = perf;
        result.exergy = rep;
    } catch (const InfeasibleCycleError&) {
        result.feasible = false;
    }
    return result;
}

OptimizationResult grid_search_core(const FitnessFn& fitness,
                                    const Bounds& bounds, int points_per_axis,
                                    int jobs) {
    if (points_per_axis < 1)
        throw PreconditionError("grid oracle needs at least one point per axis");

    const auto lo = bounds.lower.to_array();
    const auto hi = bounds.upper.to_array();
    auto axis_value = [&](std::size_t axis, int idx) {
        if (points_per_axis == 1) return 0.5 * (lo[axis] + hi[axis]);
        return lo[axis] +
               (hi[axis] - lo[axis]) * idx / (points_per_axis - 1.0);
    };

    const long total = static_cast<long>(std::pow(points_per_axis, 5));
    std::vector<DesignVector> grid;
    grid.reserve(total);
    std::array<int, 5> idx{};
    for (long n = 0; n < total; ++n) {
        long rem = n;
        std::array<double, 5> x{};
        for (std::size_t a = 0; a < 5; ++a) {
            idx[a] = static_cast<int>(rem % points_per_axis);
            rem /= points_per_axis;
            x[a] = axis_value(a, idx[a]);
        }
        grid.push_back(DesignVector::from_array(x));
    }

    std::vector<FitnessEval> evals;
    evaluate_population(fitness, grid, evals, jobs);

    OptimizationResult result;
    result.evaluations = total;
    bool have_feasible = false;
    double best_obj = -std::numeric_limits<double>::infinity();
    double least_violation = std::numeric_limits<double>::infinity();
    DesignVector least_violating = grid.front();
    for (long n = 0; n < total; ++n) {
        const FitnessEval& ev = evals[n];
        if (ev.cycle_ok && ev.violation < least_violation) {
            least_violation = ev.violation;
            least_violating = grid[n];
        }
        if (ev.cycle_ok && ev.violation == 0.0 && ev.objective > best_obj) {
            have_feasible = true;
            best_obj = ev.objective;
            result.best = grid[n];
        }
    }
    result.feasible = have_feasible;
    if (!have_feasible) result.best = least_violating;
    const FitnessEval ev = fitness(result.best);
    result.objective = ev.objective;
    result.fitness = ev.fitness;
    result.history.push_back(ev.fitness);
    return result;
}

OptimizationResult grid_search_oracle(const OptimizationProblem& prob,
                                      int points_per_axis, int jobs) {
    OptimizationResult result =
        grid_search_core(prob.make_fitness(prob.auto_penalty_weight()),
                         prob.bounds, points_per_axis, jobs);
    try {
        auto [perf, rep] =
            evaluate_design(result.best, prob.tmpl, prob.cond, prob.fuel);
        result.performance = perf;
        result.exergy = rep;
    } catch (const InfeasibleCycleError&) {
        result.feasible = false;
    }
    return result;
}

}  // namespace tfcycle
