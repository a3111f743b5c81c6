#ifndef LAYERSORT_BOUNDARY_HPP
#define LAYERSORT_BOUNDARY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "layersort/relation.hpp"

namespace layersort {

/// One limiting boundary: the upper layer belongs to the class below
/// the cut, the lower layer to the class above it.
template <class Action>
struct Boundary {
    std::vector<Action> upper;  // B_Uk, declared in C_k
    std::vector<Action> lower;  // B_Lk, declared in C_{k+1}

    std::vector<Action> all() const {
        std::vector<Action> out = upper;
        out.insert(out.end(), lower.begin(), lower.end());
        return out;
    }
    friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// M ordered classes separated by M-1 two-layer boundaries.  Indices are
/// 1-based; k = 0 and k = M address the virtual anti-ideal and ideal
/// sentinels, which exist only inside the assignment rules.
template <class Action>
struct BoundarySystem {
    std::vector<std::string> class_names;        // size M
    std::vector<Boundary<Action>> boundaries;    // size M-1

    int num_classes() const { return static_cast<int>(class_names.size()); }
    int num_boundaries() const { return static_cast<int>(boundaries.size()); }

    const Boundary<Action>& boundary(int k) const {
        if (k < 1 || k > num_boundaries())
            throw ParameterError("boundary index " + std::to_string(k) + " out of range");
        return boundaries[static_cast<std::size_t>(k - 1)];
    }

    /// All boundary actions, boundaries in order, upper layer first.
    std::vector<Action> all_actions() const {
        std::vector<Action> out;
        for (const auto& b : boundaries) {
            out.insert(out.end(), b.upper.begin(), b.upper.end());
            out.insert(out.end(), b.lower.begin(), b.lower.end());
        }
        return out;
    }

    friend bool operator==(const BoundarySystem&, const BoundarySystem&) = default;
};

namespace detail {

template <class Action>
bool duplicate_action(const Action& a, const Action& b) {
    return a.id == b.id || a.scores == b.scores;
}

// Existence clause "for each z in source there is y in target with rel(z,y)".
// Empty source with empty target is an unsatisfiable-but-idle clause and is
// warned about; empty target with a non-empty source is a hard violation.
template <class Action, class Rel>
void check_existence(ViolationReport& report, const std::string& clause,
                     const std::vector<Action>& source, const std::vector<Action>& target,
                     int source_k, int target_k, Rel rel, const std::string& description) {
    if (source.empty()) {
        if (target.empty())
            report.warn(clause, {}, {source_k, target_k},
                        "unsatisfiable - layer empty (" + description + ")");
        return;
    }
    for (const auto& z : source) {
        if (target.empty()) {
            report.add(clause, {z.id}, {source_k, target_k},
                       description + ": target layer empty, no witness possible for '" + z.id + "'");
            continue;
        }
        if (!std::any_of(target.begin(), target.end(),
                         [&](const Action& y) { return rel(z, y); }))
            report.add(clause, {z.id}, {source_k, target_k},
                       description + ": no witness for '" + z.id + "'");
    }
}

}  // namespace detail

/// Condition 2: layer disjointness plus no preference between distinct
/// actions within a single layer (2.iii lower, 2.iv upper).
template <class Action>
ViolationReport validate_condition2(const BoundarySystem<Action>& system,
                                    const RelationalModel<Action>& model) {
    ViolationReport report;
    for (int k = 1; k <= system.num_boundaries(); ++k) {
        const auto& b = system.boundary(k);
        for (const auto& w : b.upper)
            for (const auto& z : b.lower)
                if (detail::duplicate_action(w, z))
                    report.add("2.disjoint", {w.id, z.id}, {k},
                               "layers of B_" + std::to_string(k) + " share an action");
        const auto check_layer = [&](const std::vector<Action>& layer, const std::string& clause,
                                     const std::string& name) {
            for (std::size_t i = 0; i < layer.size(); ++i)
                for (std::size_t j = 0; j < layer.size(); ++j)
                    if (i != j && derive_preference(model, layer[i], layer[j]))
                        report.add(clause, {layer[i].id, layer[j].id}, {k},
                                   "preference within " + name + std::to_string(k) + ": '" +
                                       layer[i].id + "' P '" + layer[j].id + "'");
        };
        check_layer(b.lower, "2.iii", "B_L");
        check_layer(b.upper, "2.iv", "B_U");
    }
    return report;
}

/// Condition 3, all eight clauses.  3.i is read over the cross product
/// B_Uk x B_Lk; 3.ii over B_k x B_h for h > k.  Clauses addressing a
/// nonexistent adjacent boundary are vacuous at the edges.
template <class Action>
ViolationReport validate_condition3(const BoundarySystem<Action>& system,
                                    const RelationalModel<Action>& model) {
    ViolationReport report;
    const int n = system.num_boundaries();
    const auto s = [&](const Action& a, const Action& b) { return model.s(a, b); };
    const auto d = [&](const Action& a, const Action& b) { return model.d(a, b); };
    for (int k = 1; k <= n; ++k) {
        const auto& bk = system.boundary(k);
        for (const auto& w : bk.upper)
            for (const auto& z : bk.lower)
                if (s(w, z))
                    report.add("3.i", {w.id, z.id}, {k},
                               "'" + w.id + "' S '" + z.id + "' across the layers of B_" +
                                   std::to_string(k));
        for (int h = k + 1; h <= n; ++h)
            for (const auto& w : bk.all())
                for (const auto& z : system.boundary(h).all())
                    if (s(w, z))
                        report.add("3.ii", {w.id, z.id}, {k, h},
                                   "'" + w.id + "' in B_" + std::to_string(k) + " outranks '" +
                                       z.id + "' in B_" + std::to_string(h));
        if (k > 1) {
            const auto& below = system.boundary(k - 1);
            detail::check_existence(report, "3.iii", bk.upper, below.lower, k, k - 1,
                                    [&](const Action& z, const Action& y) { return s(z, y); },
                                    "each upper action must outrank some lower action below");
            detail::check_existence(report, "3.vi", bk.upper, below.upper, k, k - 1,
                                    [&](const Action& z, const Action& w) { return d(z, w); },
                                    "each upper action must dominate some upper action below");
            detail::check_existence(report, "3.vii", bk.lower, below.lower, k, k - 1,
                                    [&](const Action& z, const Action& y) { return d(z, y); },
                                    "each lower action must dominate some lower action below");
        }
        if (k < n) {
            const auto& above = system.boundary(k + 1);
            detail::check_existence(report, "3.iv", bk.lower, above.upper, k, k + 1,
                                    [&](const Action& z, const Action& y) { return s(y, z); },
                                    "each lower action must be outranked from the upper layer above");
            detail::check_existence(report, "3.v", bk.upper, above.upper, k, k + 1,
                                    [&](const Action& z, const Action& w) { return d(w, z); },
                                    "each upper action must be dominated from the upper layer above");
            detail::check_existence(report, "3.viii", bk.lower, above.lower, k, k + 1,
                                    [&](const Action& z, const Action& y) { return d(y, z); },
                                    "each lower action must be dominated from the lower layer above");
        }
    }
    return report;
}

/// Condition 4: 4.i/4.ii mirror 3.i/3.ii; 4.iii demands a lower-layer
/// action outranking each upper-layer action of the same boundary;
/// 4.iv/4.v are whole-boundary dominance chains.
template <class Action>
ViolationReport validate_condition4(const BoundarySystem<Action>& system,
                                    const RelationalModel<Action>& model) {
    ViolationReport report;
    const int n = system.num_boundaries();
    const auto s = [&](const Action& a, const Action& b) { return model.s(a, b); };
    const auto d = [&](const Action& a, const Action& b) { return model.d(a, b); };
    for (int k = 1; k <= n; ++k) {
        const auto& bk = system.boundary(k);
        for (const auto& w : bk.upper)
            for (const auto& z : bk.lower)
                if (s(w, z))
                    report.add("4.i", {w.id, z.id}, {k},
                               "'" + w.id + "' S '" + z.id + "' across the layers of B_" +
                                   std::to_string(k));
        for (int h = k + 1; h <= n; ++h)
            for (const auto& w : bk.all())
                for (const auto& z : system.boundary(h).all())
                    if (s(w, z))
                        report.add("4.ii", {w.id, z.id}, {k, h},
                                   "'" + w.id + "' in B_" + std::to_string(k) + " outranks '" +
                                       z.id + "' in B_" + std::to_string(h));
        detail::check_existence(report, "4.iii", bk.upper, bk.lower, k, k,
                                [&](const Action& z, const Action& y) { return s(y, z); },
                                "each upper action must be outranked from its own lower layer");
        if (k < n)
            detail::check_existence(report, "4.iv", bk.all(), system.boundary(k + 1).all(), k, k + 1,
                                    [&](const Action& z, const Action& w) { return d(w, z); },
                                    "each action must be dominated from the boundary above");
        if (k > 1)
            detail::check_existence(report, "4.v", bk.all(), system.boundary(k - 1).all(), k, k - 1,
                                    [&](const Action& z, const Action& w) { return d(z, w); },
                                    "each action must dominate something in the boundary below");
    }
    return report;
}

/// Definition 4(a): removes boundary k and fuses classes k and k+1.
template <class Action>
BoundarySystem<Action> merge_classes(const BoundarySystem<Action>& system, int k) {
    if (k < 1 || k > system.num_boundaries())
        throw ParameterError("merge_classes: boundary index " + std::to_string(k) + " out of range");
    BoundarySystem<Action> merged;
    merged.boundaries = system.boundaries;
    merged.boundaries.erase(merged.boundaries.begin() + (k - 1));
    merged.class_names = system.class_names;
    merged.class_names[static_cast<std::size_t>(k - 1)] =
        system.class_names[static_cast<std::size_t>(k - 1)] + "+" +
        system.class_names[static_cast<std::size_t>(k)];
    merged.class_names.erase(merged.class_names.begin() + k);
    return merged;
}

/// Definition 4(b): inserts new_boundary at position k, splitting class
/// k in two.  The augmented system is validated against Condition 2 plus
/// the requested separability set (3 or 4); an invalid result is never
/// returned, a ValidationError carrying the report is thrown instead.
template <class Action>
BoundarySystem<Action> split_class(const BoundarySystem<Action>& system, int k,
                                   const Boundary<Action>& new_boundary,
                                   const RelationalModel<Action>& model, int condition_set = 3,
                                   const std::string& lower_name = "",
                                   const std::string& upper_name = "") {
    if (k < 1 || k > system.num_classes())
        throw ParameterError("split_class: class index " + std::to_string(k) + " out of range");
    if (condition_set != 3 && condition_set != 4)
        throw ParameterError("split_class: condition set must be 3 or 4");
    BoundarySystem<Action> split;
    split.boundaries = system.boundaries;
    split.boundaries.insert(split.boundaries.begin() + (k - 1), new_boundary);
    split.class_names = system.class_names;
    const std::string base = split.class_names[static_cast<std::size_t>(k - 1)];
    split.class_names[static_cast<std::size_t>(k - 1)] =
        lower_name.empty() ? base + " (lower)" : lower_name;
    split.class_names.insert(split.class_names.begin() + k,
                             upper_name.empty() ? base + " (upper)" : upper_name);

    ViolationReport report = validate_condition2(split, model);
    report.merge(condition_set == 3 ? validate_condition3(split, model)
                                    : validate_condition4(split, model));
    if (!report.clean()) throw ValidationError(std::move(report));
    return split;
}

/// Removes every upper layer; the reduced system drives the TRI-nB
/// equivalence checks.
template <class Action>
BoundarySystem<Action> strip_upper_layers(const BoundarySystem<Action>& system) {
    BoundarySystem<Action> stripped = system;
    for (auto& b : stripped.boundaries) b.upper.clear();
    return stripped;
}

}  // namespace layersort

#endif
