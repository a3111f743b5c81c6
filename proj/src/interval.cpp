#include "layersort/interval.hpp"

#include <algorithm>
#include <cmath>

namespace layersort {

double possibility(const IntervalNumber& b, const IntervalNumber& c) {
    if (b.degenerate() && c.degenerate()) return b.lo >= c.lo ? 1.0 : 0.0;
    const double p = (b.hi - c.lo) / (b.width() + c.width());
    return std::clamp(p, 0.0, 1.0);
}

bool interval_dominates(const std::vector<IntervalNumber>& x, const std::vector<IntervalNumber>& y,
                        double alpha, const std::vector<bool>& is_interval) {
    if (x.size() != y.size())
        throw DimensionError("interval_dominates: criterion count mismatch");
    if (is_interval.size() != x.size())
        throw ParameterError("interval_dominates: partition must cover all criteria");
    if (!(alpha >= 0.5))
        throw ParameterError("interval_dominates: alpha must be at least 0.5");
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (is_interval[j]) {
            if (possibility(x[j], y[j]) < alpha) return false;
        } else {
            if (x[j].lo < y[j].lo) return false;
        }
    }
    return true;
}

void IntervalValueModel::validate() const {
    if (weights.empty()) throw ParameterError("weights: at least one criterion required");
    double mid_sum = 0.0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const auto& w = weights[j];
        if (!(w.lo >= 0.0) || !(w.lo <= w.hi) || !std::isfinite(w.hi))
            throw ParameterError("weight " + std::to_string(j + 1) +
                                 ": must be a finite nonnegative interval with lo <= hi");
        mid_sum += w.mid();
    }
    if (std::abs(mid_sum - 1.0) > 1e-9)
        throw ParameterError("weights: midpoints must sum to 1, got " + std::to_string(mid_sum));
    if (!(alpha_d > 0.5 && alpha_d <= 1.0))
        throw ParameterError("alpha_d: must lie in ]0.5, 1], got " + std::to_string(alpha_d));
}

IntervalNumber IntervalValueModel::utility(const IntervalVector& a) const {
    if (a.scores.size() != weights.size())
        throw DimensionError("action '" + a.id + "' does not match the model's criterion count");
    IntervalNumber u{0.0, 0.0};
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const auto& s = a.scores[j];
        if (s.lo < 0.0)
            throw ParameterError("action '" + a.id + "': negative interval scores are rejected");
        u.lo += weights[j].lo * s.lo;
        u.hi += weights[j].hi * s.hi;
    }
    return u;
}

bool interval_value_s(const IntervalValueModel& model, const IntervalVector& x,
                      const IntervalVector& y) {
    return possibility(model.utility(x), model.utility(y)) >= 0.5;
}

bool interval_value_d(const IntervalValueModel& model, const IntervalVector& x,
                      const IntervalVector& y) {
    return possibility(model.utility(x), model.utility(y)) >= model.alpha_d;
}

RelationalModel<IntervalVector> make_interval_value_model(const IntervalValueModel& model) {
    model.validate();
    RelationalModel<IntervalVector> rel;
    rel.s = [model](const IntervalVector& x, const IntervalVector& y) {
        return interval_value_s(model, x, y);
    };
    rel.d = [model](const IntervalVector& x, const IntervalVector& y) {
        return interval_value_d(model, x, y);
    };
    rel.s_transitive = true;  // Poss >= 0.5 orders utilities by midpoint
    return rel;
}

}  // namespace layersort
