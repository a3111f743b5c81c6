#ifndef LAYERSORT_INTERVAL_HPP
#define LAYERSORT_INTERVAL_HPP

#include <string>
#include <vector>

#include "layersort/relation.hpp"

namespace layersort {

/// Closed real interval [lo, hi].
struct IntervalNumber {
    double lo = 0.0;
    double hi = 0.0;

    bool degenerate() const { return lo == hi; }
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    friend bool operator==(const IntervalNumber&, const IntervalNumber&) = default;
};

/// An action scored by interval numbers.
struct IntervalVector {
    std::string id;
    std::vector<IntervalNumber> scores;

    std::size_t dimension() const { return scores.size(); }
    friend bool operator==(const IntervalVector&, const IntervalVector&) = default;
};

/// Poss(B >= C): 1/0 by direct comparison when both intervals are
/// degenerate, otherwise (b+ - c-) / ((b+ - b-) + (c+ - c-)) clamped
/// to [0, 1].
double possibility(const IntervalNumber& b, const IntervalNumber& c);

/// Alpha-dominance: x beats y on every real-valued criterion (G1) and
/// the worst per-criterion possibility over interval criteria (G2) is
/// at least alpha.  is_interval[j] marks criterion j as G2.  With empty
/// G2 this is exactly Pareto dominance.
bool interval_dominates(const std::vector<IntervalNumber>& x, const std::vector<IntervalNumber>& y,
                        double alpha, const std::vector<bool>& is_interval);

/// Imprecise weighted-sum value model over nonnegative interval scores.
/// S cuts Poss(U(x) >= U(y)) at 0.5; the stronger D cuts at alpha_d.
struct IntervalValueModel {
    std::vector<IntervalNumber> weights;
    double alpha_d = 0.0;  // in ]0.5, 1]

    std::size_t dimension() const { return weights.size(); }

    /// Weight midpoints must sum to 1 (1e-9); alpha_d in ]0.5, 1];
    /// weights nonnegative.
    void validate() const;

    /// U(a) = [sum w.lo * s.lo, sum w.hi * s.hi]; rejects negative scores.
    IntervalNumber utility(const IntervalVector& a) const;

    friend bool operator==(const IntervalValueModel&, const IntervalValueModel&) = default;
};

bool interval_value_s(const IntervalValueModel& model, const IntervalVector& x,
                      const IntervalVector& y);
bool interval_value_d(const IntervalValueModel& model, const IntervalVector& x,
                      const IntervalVector& y);

/// S here is a total preorder on utility midpoints, hence transitive.
RelationalModel<IntervalVector> make_interval_value_model(const IntervalValueModel& model);

}  // namespace layersort

#endif
