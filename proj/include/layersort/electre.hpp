#ifndef LAYERSORT_ELECTRE_HPP
#define LAYERSORT_ELECTRE_HPP

#include <optional>
#include <string>
#include <vector>

#include "layersort/relation.hpp"

namespace layersort {

struct Criterion {
    std::string name;
    double weight = 0.0;
    double q = 0.0;  // indifference threshold
    double p = 0.0;  // preference threshold
    std::optional<double> u;  // pre-veto threshold
    std::optional<double> v;  // veto threshold

    friend bool operator==(const Criterion&, const Criterion&) = default;
};

/// Parameters of the classic crisp ELECTRE outranking model:
/// per-criterion pseudo-criterion thresholds plus a credibility cut lambda.
struct ElectreParameters {
    std::vector<Criterion> criteria;
    double lambda = 0.0;  // in ]0.5, 1]

    std::size_t dimension() const { return criteria.size(); }

    /// Enforces 0 <= q <= p <= u <= v, weight sum 1 (1e-9), 0.5 < lambda <= 1.
    /// Throws ParameterError naming the offending field.
    void validate() const;

    friend bool operator==(const ElectreParameters&, const ElectreParameters&) = default;
};

/// Weighted concordance c(x,y) in [0,1], linear between q_j and p_j.
double concordance(const ElectreParameters& params, const PerformanceVector& x,
                   const PerformanceVector& y);

/// Marginal discordance d_j(x,y) in [0,1], linear ramp between u_j and v_j;
/// 0 when the criterion carries no veto data.
double discordance_marginal(const ElectreParameters& params, std::size_t j,
                            const PerformanceVector& x, const PerformanceVector& y);

/// Credibility sigma(x,y) = c(x,y) * prod_j (1 - d_j(x,y)).
double credibility(const ElectreParameters& params, const PerformanceVector& x,
                   const PerformanceVector& y);

/// xSy <=> sigma(x,y) >= lambda (exact >=, boundary sigma = lambda outranks).
bool crisp_s(const ElectreParameters& params, const PerformanceVector& x,
             const PerformanceVector& y);

/// Weak Pareto dominance: g_j(x) >= g_j(y) for all j.
bool pareto_dominates(const PerformanceVector& x, const PerformanceVector& y);

/// The (Pareto, crisp-sigma) relational pair.  Parameters are captured
/// by value; the model is safe to keep past the parameter object.
RelationalModel<PerformanceVector> make_electre_model(const ElectreParameters& params);

}  // namespace layersort

#endif
