#ifndef LAYERSORT_ASSIGNMENT_HPP
#define LAYERSORT_ASSIGNMENT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "layersort/boundary.hpp"
#include "layersort/electre.hpp"

namespace layersort {

enum class Family { S, P };
enum class Rule { SPrimal, SDual, PPrimal, PDual };

inline std::string rule_name(Rule r) {
    switch (r) {
        case Rule::SPrimal: return "s-primal";
        case Rule::SDual: return "s-dual";
        case Rule::PPrimal: return "p-primal";
        case Rule::PDual: return "p-dual";
    }
    return "?";
}

/// Relation flags between an action and boundary k (0 and M address the
/// sentinels).
struct BoundaryRelation {
    bool x_s_b = false;
    bool b_s_x = false;
    bool x_p_b = false;
    bool b_p_x = false;
};

/// Definition 1: xSB_k needs a lower-layer action outranked by x and no
/// boundary action preferred to x; B_kSx is the mirror through the upper
/// layer.  Sentinels: xSB_0 and B_MSx hold for every x.
template <class Action>
BoundaryRelation s_boundary_relation(const RelationalModel<Action>& model, const Action& x,
                                     const BoundarySystem<Action>& system, int k) {
    const int m1 = system.num_boundaries();
    if (k < 0 || k > m1 + 1)
        throw ParameterError("boundary index " + std::to_string(k) + " out of range");
    BoundaryRelation rel;
    if (k == 0) {
        rel.x_s_b = true;
        return rel;
    }
    if (k == m1 + 1) {
        rel.b_s_x = true;
        return rel;
    }
    const auto& b = system.boundary(k);
    const auto all = b.all();
    const bool outranks_lower = std::any_of(b.lower.begin(), b.lower.end(),
                                            [&](const Action& w) { return model.s(x, w); });
    const bool outranked_from_upper = std::any_of(b.upper.begin(), b.upper.end(),
                                                  [&](const Action& w) { return model.s(w, x); });
    const bool preferred_over_x = std::any_of(all.begin(), all.end(), [&](const Action& z) {
        return derive_preference(model, z, x);
    });
    const bool x_preferred = std::any_of(all.begin(), all.end(), [&](const Action& z) {
        return derive_preference(model, x, z);
    });
    rel.x_s_b = outranks_lower && !preferred_over_x;
    rel.b_s_x = outranked_from_upper && !x_preferred;
    return rel;
}

/// Definition 6: the P relations quantify over the whole boundary, both
/// layers.  Sentinels: xPB_0 and B_MPx hold for every x.
template <class Action>
BoundaryRelation p_boundary_relation(const RelationalModel<Action>& model, const Action& x,
                                     const BoundarySystem<Action>& system, int k) {
    const int m1 = system.num_boundaries();
    if (k < 0 || k > m1 + 1)
        throw ParameterError("boundary index " + std::to_string(k) + " out of range");
    BoundaryRelation rel;
    if (k == 0) {
        rel.x_p_b = true;
        return rel;
    }
    if (k == m1 + 1) {
        rel.b_p_x = true;
        return rel;
    }
    const auto all = system.boundary(k).all();
    const bool x_preferred = std::any_of(all.begin(), all.end(), [&](const Action& w) {
        return derive_preference(model, x, w);
    });
    const bool preferred_over_x = std::any_of(all.begin(), all.end(), [&](const Action& z) {
        return derive_preference(model, z, x);
    });
    rel.x_p_b = x_preferred && !preferred_over_x;
    rel.b_p_x = preferred_over_x && !x_preferred;
    return rel;
}

struct AssignmentOutcome {
    Rule rule = Rule::SPrimal;
    int class_index = 0;  // in [1, M]
    std::vector<std::pair<int, BoundaryRelation>> trace;  // boundaries consulted, in rule order
};

template <class Action>
AssignmentOutcome assign(const RelationalModel<Action>& model, const Action& x,
                         const BoundarySystem<Action>& system, Rule rule) {
    const int M = system.num_classes();
    AssignmentOutcome out;
    out.rule = rule;
    switch (rule) {
        case Rule::SPrimal:
            for (int k = M - 1; k >= 0; --k) {
                auto rel = s_boundary_relation(model, x, system, k);
                out.trace.emplace_back(k, rel);
                if (rel.x_s_b) {
                    out.class_index = k + 1;
                    return out;
                }
            }
            break;
        case Rule::SDual:
            for (int k = 1; k <= M; ++k) {
                auto rel = s_boundary_relation(model, x, system, k);
                out.trace.emplace_back(k, rel);
                if (rel.b_s_x) {
                    out.class_index = k;
                    return out;
                }
            }
            break;
        case Rule::PPrimal:
            for (int k = 1; k <= M; ++k) {
                auto rel = p_boundary_relation(model, x, system, k);
                out.trace.emplace_back(k, rel);
                if (rel.b_p_x) {
                    out.class_index = k;
                    return out;
                }
            }
            break;
        case Rule::PDual:
            for (int k = M - 1; k >= 0; --k) {
                auto rel = p_boundary_relation(model, x, system, k);
                out.trace.emplace_back(k, rel);
                if (rel.x_p_b) {
                    out.class_index = k + 1;
                    return out;
                }
            }
            break;
    }
    // unreachable: the sentinels stop every scan
    throw Error("assignment scan fell through its sentinel");
}

template <class Action>
AssignmentOutcome assign_s_primal(const RelationalModel<Action>& model, const Action& x,
                                  const BoundarySystem<Action>& system) {
    return assign(model, x, system, Rule::SPrimal);
}
template <class Action>
AssignmentOutcome assign_s_dual(const RelationalModel<Action>& model, const Action& x,
                                const BoundarySystem<Action>& system) {
    return assign(model, x, system, Rule::SDual);
}
template <class Action>
AssignmentOutcome assign_p_primal(const RelationalModel<Action>& model, const Action& x,
                                  const BoundarySystem<Action>& system) {
    return assign(model, x, system, Rule::PPrimal);
}
template <class Action>
AssignmentOutcome assign_p_dual(const RelationalModel<Action>& model, const Action& x,
                                const BoundarySystem<Action>& system) {
    return assign(model, x, system, Rule::PDual);
}

/// Both rules of a family plus the inclusive class interval between them.
/// No order between the primal and dual results is guaranteed in general,
/// so neither is assumed to bound the other.
struct ConjointOutcome {
    Family family = Family::S;
    int primal_class = 0;
    int dual_class = 0;

    int lower() const { return std::min(primal_class, dual_class); }
    int upper() const { return std::max(primal_class, dual_class); }
};

template <class Action>
ConjointOutcome assign_conjoint(const RelationalModel<Action>& model, const Action& x,
                                const BoundarySystem<Action>& system, Family family) {
    ConjointOutcome out;
    out.family = family;
    out.primal_class =
        assign(model, x, system, family == Family::S ? Rule::SPrimal : Rule::PPrimal).class_index;
    out.dual_class =
        assign(model, x, system, family == Family::S ? Rule::SDual : Rule::PDual).class_index;
    return out;
}

/// A complete ELECTRE problem instance: the crisp outranking parameters
/// plus the two-layer boundary structure.
struct ElectreInstance {
    ElectreParameters params;
    BoundarySystem<PerformanceVector> system;

    RelationalModel<PerformanceVector> model() const { return make_electre_model(params); }
    friend bool operator==(const ElectreInstance&, const ElectreInstance&) = default;
};

inline PerformanceVector transpose_action(const PerformanceVector& x) {
    PerformanceVector t = x;
    for (auto& s : t.scores) s = -s;
    return t;
}

/// Transposition operation: negates all performance scores, reverses the
/// boundary list and the class order, and swaps the layers within each
/// boundary.  Thresholds, weights and lambda act on score differences and
/// are untouched; sigma(-x, -y) = sigma(y, x) holds exactly.
inline ElectreInstance transpose_problem(const ElectreInstance& instance) {
    ElectreInstance t;
    t.params = instance.params;
    t.system.class_names.assign(instance.system.class_names.rbegin(),
                                instance.system.class_names.rend());
    for (auto it = instance.system.boundaries.rbegin(); it != instance.system.boundaries.rend();
         ++it) {
        Boundary<PerformanceVector> b;
        for (const auto& a : it->lower) b.upper.push_back(transpose_action(a));
        for (const auto& a : it->upper) b.lower.push_back(transpose_action(a));
        t.system.boundaries.push_back(std::move(b));
    }
    return t;
}

}  // namespace layersort

#endif
