#pragma once

#include <string>
#include <vector>

#include "tfcycle/config.hpp"

namespace tfcycle {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_s = 0.0;

    bool pass() const;
    std::string summary() const;  // one line: id, name, PASS/FAIL, timing
};

/// Reference metrics of the base engine and the three optimized cycles
/// (hydrogen, cruise design point) used by the ranking validation.
DecisionMatrix reference_cycle_matrix();
WeightVector economic_weights();
WeightVector exergo_environmental_weights();

/// Decision matrix over computed cycles with the standard five criteria
/// {etaThermal, etaExergetic, tsfc, entropyGeneration, noxRate}; feeds
/// topsis_rank directly.
DecisionMatrix cycle_metrics_matrix(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<CyclePerformance, ExergyReport>>& cycles);

struct ValidationOptions {
    int jobs = 1;
    bool skip_slow = false;  // skip the GA/oracle criteria (7 and 8)
};

/// Run the built-in validation suite against the default engine model.
std::vector<CriterionResult> run_validation(const ValidationOptions& opts);

}  // namespace tfcycle
