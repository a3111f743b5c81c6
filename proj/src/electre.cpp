#include "layersort/electre.hpp"

#include <cmath>
#include <string>

namespace layersort {

void ElectreParameters::validate() const {
    if (criteria.empty()) throw ParameterError("criteria: at least one criterion required");
    double weight_sum = 0.0;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        const auto& c = criteria[j];
        const std::string where = "criterion '" + (c.name.empty() ? std::to_string(j + 1) : c.name) + "'";
        if (!(c.weight >= 0.0) || !std::isfinite(c.weight))
            throw ParameterError(where + ": weight must be a nonnegative real");
        if (!(0.0 <= c.q && c.q <= c.p))
            throw ParameterError(where + ": thresholds must satisfy 0 <= q <= p");
        if (c.u.has_value() != c.v.has_value())
            throw ParameterError(where + ": pre-veto u and veto v must be given together");
        if (c.u && !(c.p <= *c.u && *c.u <= *c.v))
            throw ParameterError(where + ": thresholds must satisfy p <= u <= v");
        weight_sum += c.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw ParameterError("weights: must sum to 1, got " + std::to_string(weight_sum));
    if (!(lambda > 0.5 && lambda <= 1.0))
        throw ParameterError("lambda: must lie in ]0.5, 1], got " + std::to_string(lambda));
}

double concordance(const ElectreParameters& params, const PerformanceVector& x,
                   const PerformanceVector& y) {
    require_same_dimension(x, y);
    if (x.scores.size() != params.dimension())
        throw DimensionError("action '" + x.id + "' does not match the model's criterion count");
    double c = 0.0;
    for (std::size_t j = 0; j < params.criteria.size(); ++j) {
        const auto& crit = params.criteria[j];
        const double deficit = y.scores[j] - x.scores[j];
        double cj;
        if (deficit <= crit.q)
            cj = 1.0;
        else if (deficit >= crit.p)
            cj = 0.0;
        else
            cj = (crit.p - deficit) / (crit.p - crit.q);
        c += crit.weight * cj;
    }
    return c;
}

double discordance_marginal(const ElectreParameters& params, std::size_t j,
                            const PerformanceVector& x, const PerformanceVector& y) {
    const auto& crit = params.criteria.at(j);
    if (!crit.u) return 0.0;
    const double deficit = y.scores.at(j) - x.scores.at(j);
    if (deficit <= *crit.u) return 0.0;
    if (deficit >= *crit.v) return 1.0;
    return (deficit - *crit.u) / (*crit.v - *crit.u);
}

double credibility(const ElectreParameters& params, const PerformanceVector& x,
                   const PerformanceVector& y) {
    double sigma = concordance(params, x, y);
    for (std::size_t j = 0; j < params.criteria.size(); ++j)
        sigma *= 1.0 - discordance_marginal(params, j, x, y);
    return sigma;
}

bool crisp_s(const ElectreParameters& params, const PerformanceVector& x,
             const PerformanceVector& y) {
    return credibility(params, x, y) >= params.lambda;
}

bool pareto_dominates(const PerformanceVector& x, const PerformanceVector& y) {
    require_same_dimension(x, y);
    for (std::size_t j = 0; j < x.scores.size(); ++j)
        if (x.scores[j] < y.scores[j]) return false;
    return true;
}

RelationalModel<PerformanceVector> make_electre_model(const ElectreParameters& params) {
    params.validate();
    RelationalModel<PerformanceVector> model;
    model.s = [params](const PerformanceVector& x, const PerformanceVector& y) {
        return crisp_s(params, x, y);
    };
    model.d = [](const PerformanceVector& x, const PerformanceVector& y) {
        return pareto_dominates(x, y);
    };
    model.s_transitive = false;
    return model;
}

}  // namespace layersort
