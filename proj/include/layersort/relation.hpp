#ifndef LAYERSORT_RELATION_HPP
#define LAYERSORT_RELATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "layersort/report.hpp"

namespace layersort {

/// An action evaluated on m criteria, preference-increasing after
/// direction normalization.
struct PerformanceVector {
    std::string id;
    std::vector<double> scores;

    std::size_t dimension() const { return scores.size(); }
    friend bool operator==(const PerformanceVector&, const PerformanceVector&) = default;
};

/// A relational system (D, S) over actions of type Action.  S reads
/// "at least as good as", D is a transitive relation stronger than S;
/// the asymmetric P is derived, never stored.
template <class Action>
struct RelationalModel {
    std::function<bool(const Action&, const Action&)> s;
    std::function<bool(const Action&, const Action&)> d;
    bool s_transitive = false;
};

/// Full relation between an ordered pair, with display precedence
/// D before P before indifference before incomparability.
enum class RelationKind {
    Indifference,  // S both ways
    SForward,      // unreachable in practice: S-only-forward is exactly P-forward
    SBackward,
    PForward,
    PBackward,
    DForward,
    DBackward,
    Incomparable,
};

inline std::string relation_symbol(RelationKind k) {
    switch (k) {
        case RelationKind::Indifference: return "S/S^-1";
        case RelationKind::SForward: return "S";
        case RelationKind::SBackward: return "S^-1";
        case RelationKind::PForward: return "P";
        case RelationKind::PBackward: return "P^-1";
        case RelationKind::DForward: return "D,P";
        case RelationKind::DBackward: return "D^-1,P^-1";
        case RelationKind::Incomparable: return "Inc";
    }
    return "?";
}

inline RelationKind mirror(RelationKind k) {
    switch (k) {
        case RelationKind::SForward: return RelationKind::SBackward;
        case RelationKind::SBackward: return RelationKind::SForward;
        case RelationKind::PForward: return RelationKind::PBackward;
        case RelationKind::PBackward: return RelationKind::PForward;
        case RelationKind::DForward: return RelationKind::DBackward;
        case RelationKind::DBackward: return RelationKind::DForward;
        default: return k;
    }
}

template <class Action>
void require_same_dimension(const Action& x, const Action& y) {
    if (x.scores.size() != y.scores.size())
        throw DimensionError("criterion count mismatch: '" + x.id + "' has " +
                             std::to_string(x.scores.size()) + ", '" + y.id + "' has " +
                             std::to_string(y.scores.size()));
}

/// xPy <=> xSy and not(ySx).
template <class Action>
bool derive_preference(const RelationalModel<Action>& model, const Action& x, const Action& y) {
    require_same_dimension(x, y);
    return model.s(x, y) && !model.s(y, x);
}

template <class Action>
RelationKind classify_pair(const RelationalModel<Action>& model, const Action& x, const Action& y) {
    require_same_dimension(x, y);
    const bool df = model.d(x, y), db = model.d(y, x);
    const bool sf = model.s(x, y), sb = model.s(y, x);
    if (df && !db) return RelationKind::DForward;
    if (db && !df) return RelationKind::DBackward;
    if (sf && !sb) return RelationKind::PForward;
    if (sb && !sf) return RelationKind::PBackward;
    if (sf && sb) return RelationKind::Indifference;
    return RelationKind::Incomparable;
}

namespace detail {

/// Precomputed boolean matrices for a finite action set.
struct RelationTable {
    std::size_t n = 0;
    std::vector<char> s, d;  // row-major n*n
    bool S(std::size_t i, std::size_t j) const { return s[i * n + j] != 0; }
    bool D(std::size_t i, std::size_t j) const { return d[i * n + j] != 0; }
    bool P(std::size_t i, std::size_t j) const { return S(i, j) && !S(j, i); }
};

template <class Action>
RelationTable tabulate(const RelationalModel<Action>& model, const std::vector<Action>& actions) {
    RelationTable t;
    t.n = actions.size();
    t.s.resize(t.n * t.n);
    t.d.resize(t.n * t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            require_same_dimension(actions[i], actions[j]);
            t.s[i * t.n + j] = model.s(actions[i], actions[j]) ? 1 : 0;
            t.d[i * t.n + j] = model.d(actions[i], actions[j]) ? 1 : 0;
        }
    return t;
}

}  // namespace detail

/// Exhaustive empirical check of Condition 1 over a finite action set:
/// S reflexivity, D transitivity, 1.i (xDy => xSy),
/// 1.ii (xSy and yDz => xSz), 1.iii (xDy and ySz => xSz).
template <class Action>
ViolationReport check_condition1(const RelationalModel<Action>& model,
                                 const std::vector<Action>& actions) {
    ViolationReport report;
    const auto t = detail::tabulate(model, actions);
    const auto id = [&](std::size_t i) { return actions[i].id; };
    for (std::size_t i = 0; i < t.n; ++i)
        if (!t.S(i, i))
            report.add("S.refl", {id(i)}, {}, "S is not reflexive at '" + id(i) + "'");
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) {
            if (t.D(i, j) && !t.S(i, j))
                report.add("1.i", {id(i), id(j)}, {},
                           "xDy but not xSy for (" + id(i) + ", " + id(j) + ")");
            for (std::size_t k = 0; k < t.n; ++k) {
                if (t.D(i, j) && t.D(j, k) && !t.D(i, k))
                    report.add("D.trans", {id(i), id(j), id(k)}, {},
                               "D not transitive at (" + id(i) + ", " + id(j) + ", " + id(k) + ")");
                if (t.S(i, j) && t.D(j, k) && !t.S(i, k))
                    report.add("1.ii", {id(i), id(j), id(k)}, {},
                               "xSy, yDz but not xSz at (" + id(i) + ", " + id(j) + ", " + id(k) + ")");
                if (t.D(i, j) && t.S(j, k) && !t.S(i, k))
                    report.add("1.iii", {id(i), id(j), id(k)}, {},
                               "xDy, ySz but not xSz at (" + id(i) + ", " + id(j) + ", " + id(k) + ")");
            }
        }
    return report;
}

/// Exhaustive check of Proposition 1: xPy and yDz => xPz; xDy and yPz => xPz.
/// Empty whenever check_condition1 is empty on the same set.
template <class Action>
ViolationReport check_proposition1(const RelationalModel<Action>& model,
                                   const std::vector<Action>& actions) {
    ViolationReport report;
    const auto t = detail::tabulate(model, actions);
    const auto id = [&](std::size_t i) { return actions[i].id; };
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) {
                if (t.P(i, j) && t.D(j, k) && !t.P(i, k))
                    report.add("P1.i", {id(i), id(j), id(k)}, {},
                               "xPy, yDz but not xPz at (" + id(i) + ", " + id(j) + ", " + id(k) + ")");
                if (t.D(i, j) && t.P(j, k) && !t.P(i, k))
                    report.add("P1.ii", {id(i), id(j), id(k)}, {},
                               "xDy, yPz but not xPz at (" + id(i) + ", " + id(j) + ", " + id(k) + ")");
            }
    return report;
}

}  // namespace layersort

#endif
