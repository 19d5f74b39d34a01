#pragma once

#include <string>
#include <vector>

#include "tfcycle/errors.hpp"

namespace tfcycle {

/// m alternatives x n criteria.
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<double>> values;  // values[i][j]

    std::size_t n_alternatives() const { return alternatives.size(); }
    std::size_t n_criteria() const { return criteria.size(); }
    void validate() const;
};

/// One signed weight per criterion: sign encodes the direction (positive =
/// benefit, negative = cost), magnitude the importance. Magnitudes are used
/// as given, without normalization.
struct WeightVector {
    std::vector<double> signed_weights;
};

struct TopsisResult {
    std::vector<double> closeness;  // C_i in [0, 1]
    std::vector<double> share;      // closeness normalized to sum 1
    std::vector<std::size_t> ranking;  // indices, best first
};

/// Column-wise Euclidean normalization. Throws on an all-zero column,
/// naming the criterion.
DecisionMatrix normalize_matrix(const DecisionMatrix& m);

struct WeightedIdeals {
    std::vector<std::vector<double>> weighted;  // zero-weight columns dropped
    std::vector<double> ideal_plus;
    std::vector<double> ideal_minus;
    std::vector<std::size_t> active_columns;
};

/// Weighted matrix (|w| n_ij) and both ideal points; cost criteria swap the
/// max/min roles.
WeightedIdeals weight_and_ideal(const DecisionMatrix& normalized,
                                const WeightVector& w);

/// Full TOPSIS: normalize, weight, closeness to the ideals, and a stable
/// descending ranking. An alternative equidistant from both ideals at zero
/// distance gets closeness 0.5.
TopsisResult topsis_rank(const DecisionMatrix& m, const WeightVector& w);

}  // namespace tfcycle
