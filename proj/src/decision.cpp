#include "tfcycle/decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tfcycle {

void DecisionMatrix::validate() const {
    if (n_alternatives() < 2)
        throw PreconditionError("decision matrix needs at least 2 alternatives");
    if (n_criteria() < 1)
        throw PreconditionError("decision matrix needs at least 1 criterion");
    if (values.size() != n_alternatives())
        throw PreconditionError("decision matrix row count mismatch");
    for (const auto& row : values) {
        if (row.size() != n_criteria())
            throw PreconditionError("decision matrix column count mismatch");
    }
}

DecisionMatrix normalize_matrix(const DecisionMatrix& m) {
    m.validate();
    DecisionMatrix out = m;
    for (std::size_t j = 0; j < m.n_criteria(); ++j) {
        double ss = 0.0;
        for (std::size_t i = 0; i < m.n_alternatives(); ++i)
            ss += m.values[i][j] * m.values[i][j];
        if (ss == 0.0)
            throw PreconditionError("degenerate (all-zero) criterion column: " +
                                    m.criteria[j]);
        const double norm = std::sqrt(ss);
        for (std::size_t i = 0; i < m.n_alternatives(); ++i)
            out.values[i][j] = m.values[i][j] / norm;
    }
    return out;
}

WeightedIdeals weight_and_ideal(const DecisionMatrix& normalized,
                                const WeightVector& w) {
    if (w.signed_weights.size() != normalized.n_criteria())
        throw PreconditionError("weight count does not match criteria count");
    bool any = false;
    for (double wj : w.signed_weights) any = any || wj != 0.0;
    if (!any) throw PreconditionError("at least one weight must be nonzero");

    WeightedIdeals r;
    const std::size_t m = normalized.n_alternatives();
    for (std::size_t j = 0; j < normalized.n_criteria(); ++j) {
        if (w.signed_weights[j] == 0.0) continue;  // dropped
        r.active_columns.push_back(j);
    }
    r.weighted.assign(m, std::vector<double>(r.active_columns.size(), 0.0));
    r.ideal_plus.resize(r.active_columns.size());
    r.ideal_minus.resize(r.active_columns.size());

    for (std::size_t a = 0; a < r.active_columns.size(); ++a) {
        const std::size_t j = r.active_columns[a];
        const double wj = w.signed_weights[j];
        double vmin = std::numeric_limits<double>::infinity();
        double vmax = -vmin;
        for (std::size_t i = 0; i < m; ++i) {
            const double v = std::abs(wj) * normalized.values[i][j];
            r.weighted[i][a] = v;
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
        if (wj > 0.0) {  // benefit
            r.ideal_plus[a] = vmax;
            r.ideal_minus[a] = vmin;
        } else {  // cost
            r.ideal_plus[a] = vmin;
            r.ideal_minus[a] = vmax;
        }
    }
    return r;
}

TopsisResult topsis_rank(const DecisionMatrix& m, const WeightVector& w) {
    const DecisionMatrix normalized = normalize_matrix(m);
    const WeightedIdeals wi = weight_and_ideal(normalized, w);

    TopsisResult res;
    const std::size_t n = m.n_alternatives();
    res.closeness.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double d_plus = 0.0;
        double d_minus = 0.0;
        for (std::size_t a = 0; a < wi.active_columns.size(); ++a) {
            const double v = wi.weighted[i][a];
            d_plus += (v - wi.ideal_plus[a]) * (v - wi.ideal_plus[a]);
            d_minus += (v - wi.ideal_minus[a]) * (v - wi.ideal_minus[a]);
        }
        d_plus = std::sqrt(d_plus);
        d_minus = std::sqrt(d_minus);
        res.closeness[i] =
            (d_plus + d_minus) == 0.0 ? 0.5 : d_minus / (d_minus + d_plus);
    }

    const double sum =
        std::accumulate(res.closeness.begin(), res.closeness.end(), 0.0);
    res.share.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        res.share[i] = sum > 0.0 ? res.closeness[i] / sum : 1.0 / n;

    res.ranking.resize(n);
    std::iota(res.ranking.begin(), res.ranking.end(), std::size_t{0});
    std::stable_sort(res.ranking.begin(), res.ranking.end(),
                     [&](std::size_t a, std::size_t b) {
                         return res.closeness[a] > res.closeness[b];
                     });
    return res;
}

}  // namespace tfcycle
