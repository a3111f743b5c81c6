// Shared test fixtures: the two worked ELECTRE instances and a generator
// of random instances that satisfy Conditions 1-4 by construction
// (stacked boundary levels with within-layer jitter below the
// indifference threshold).

#ifndef LAYERSORT_TESTS_FIXTURES_HPP
#define LAYERSORT_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "layersort/assignment.hpp"

namespace layersort::fixtures {

inline PerformanceVector pv(std::string id, std::vector<double> scores) {
    return PerformanceVector{std::move(id), std::move(scores)};
}

/// Toy instance: 5 equal-weight criteria, q=0, p=0.5, u=1, v=1.5, lambda=0.6,
/// 3 classes, 2 boundaries.
inline ElectreInstance example1() {
    ElectreInstance inst;
    for (int j = 1; j <= 5; ++j)
        inst.params.criteria.push_back({"g" + std::to_string(j), 0.2, 0.0, 0.5, 1.0, 1.5});
    inst.params.lambda = 0.6;
    inst.system.class_names = {"C1", "C2", "C3"};
    Boundary<PerformanceVector> b1;
    b1.upper = {pv("bU1,1", {1, 1, 1, 1, 0.5})};
    b1.lower = {pv("bL1,1", {1, 1, 2.5, 0.5, 0.5})};
    Boundary<PerformanceVector> b2;
    b2.upper = {pv("bU2,1", {1, 1, 2, 2, 1})};
    b2.lower = {pv("bL2,1", {2.5, 1, 2.5, 1.5, 0.5}), pv("bL2,2", {1, 2.5, 2.5, 1.5, 0.5})};
    inst.system.boundaries = {b1, b2};
    return inst;
}

inline PerformanceVector example1_x() { return pv("x", {2, 1, 2, 1, 2}); }

/// R&D project impact instance: 4 criteria, 8 classes, 7 single-action
/// two-layer boundaries, lambda=0.85.
inline ElectreInstance example2() {
    ElectreInstance inst;
    inst.params.criteria = {
        {"g1", 0.24, 0.1, 1.2, 2.1, 2.5},
        {"g2", 0.23, 0.3, 1.7, 2.6, 3.1},
        {"g3", 0.27, 0.2, 1.8, 2.7, 3.1},
        {"g4", 0.26, 0.1, 1.1, 2.1, 2.9},
    };
    inst.params.lambda = 0.85;
    inst.system.class_names = {"Very Low", "Low",  "Below Average", "Average",
                               "Above Average", "High", "Very High", "Outstanding"};
    const std::vector<std::pair<std::vector<double>, std::vector<double>>> layers = {
        {{0.5, 2, 1, 0.5}, {1, 0.5, 0, 1}},
        {{2.5, 2, 1, 1.5}, {1, 1, 2, 2}},
        {{2.5, 2.5, 2, 2}, {2.5, 2, 3.5, 2.5}},
        {{4.5, 3.5, 5.5, 3.5}, {5.5, 3, 4, 3}},
        {{6, 6, 6, 4}, {7, 4, 5.5, 3.5}},
        {{6.5, 7, 6.5, 4}, {7, 5.5, 6, 4.5}},
        {{7, 7.5, 7, 5.5}, {8, 7.5, 6.5, 7}},
    };
    for (std::size_t k = 0; k < layers.size(); ++k) {
        Boundary<PerformanceVector> b;
        const std::string suffix = std::to_string(k + 1) + ",1";
        b.upper = {pv("bU" + suffix, layers[k].first)};
        b.lower = {pv("bL" + suffix, layers[k].second)};
        inst.system.boundaries.push_back(std::move(b));
    }
    return inst;
}

inline PerformanceVector example2_x() { return pv("x", {4, 4, 4, 4}); }

/// Random instance fulfilling Conditions 1-4: boundary k sits at level
/// 10k (upper layer) and 10k+2 (lower layer); within-layer jitter stays
/// below the indifference threshold, so layers are indifference classes,
/// upper never outranks its lower layer, and consecutive boundaries are
/// linked by Pareto dominance on every coordinate.
inline ElectreInstance random_valid_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> m_dist(3, 5), M_dist(2, 5), card_dist(1, 3);
    std::uniform_real_distribution<double> p_dist(0.3, 0.6), lambda_dist(0.6, 0.9),
        w_dist(0.2, 1.0), jitter(-0.05, 0.05);
    const int m = m_dist(rng), M = M_dist(rng);
    ElectreInstance inst;
    double wsum = 0.0;
    std::vector<double> raw(static_cast<std::size_t>(m));
    for (auto& w : raw) wsum += (w = w_dist(rng));
    for (int j = 0; j < m; ++j) {
        Criterion c;
        c.name = "g" + std::to_string(j + 1);
        c.weight = raw[static_cast<std::size_t>(j)] / wsum;
        c.q = 0.1;
        c.p = p_dist(rng);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
            c.u = c.p + 1.0;
            c.v = c.p + 2.0;
        }
        inst.params.criteria.push_back(std::move(c));
    }
    // exact unit sum within 1e-9 after division is not guaranteed; re-dump
    // the residual onto the first weight
    double residual = 1.0;
    for (const auto& c : inst.params.criteria) residual -= c.weight;
    inst.params.criteria.front().weight += residual;
    inst.params.lambda = lambda_dist(rng);

    for (int c = 1; c <= M; ++c) inst.system.class_names.push_back("C" + std::to_string(c));
    for (int k = 1; k <= M - 1; ++k) {
        Boundary<PerformanceVector> b;
        const auto make_layer = [&](double level, const std::string& prefix,
                                    std::vector<PerformanceVector>& layer) {
            const int card = card_dist(rng);
            for (int i = 1; i <= card; ++i) {
                PerformanceVector a;
                a.id = prefix + std::to_string(k) + "," + std::to_string(i);
                for (int j = 0; j < m; ++j) a.scores.push_back(level + jitter(rng));
                layer.push_back(std::move(a));
            }
        };
        make_layer(10.0 * k, "bU", b.upper);
        make_layer(10.0 * k + 2.0, "bL", b.lower);
        inst.system.boundaries.push_back(std::move(b));
    }
    return inst;
}

inline std::vector<PerformanceVector> random_audit(const ElectreInstance& inst, int count,
                                                   std::mt19937& rng) {
    const std::size_t m = inst.params.dimension();
    double lo = 1e300, hi = -1e300;
    for (const auto& a : inst.system.all_actions())
        for (double s : a.scores) {
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
    const double pad = 0.25 * (hi - lo) + 1.0;
    std::uniform_real_distribution<double> score(lo - pad, hi + pad);
    std::vector<PerformanceVector> actions;
    for (int i = 0; i < count; ++i) {
        PerformanceVector a;
        a.id = "r" + std::to_string(i + 1);
        for (std::size_t j = 0; j < m; ++j) a.scores.push_back(score(rng));
        actions.push_back(std::move(a));
    }
    return actions;
}

}  // namespace layersort::fixtures

#endif
