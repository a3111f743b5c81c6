#include "doctest.h"

#include <algorithm>

#include "layersort/boundary.hpp"

#include "fixtures.hpp"

using namespace layersort;
using fixtures::pv;

TEST_CASE("both worked instances pass their applicable conditions") {
    for (const auto& inst : {fixtures::example1(), fixtures::example2()}) {
        const auto model = inst.model();
        CHECK(validate_condition2(inst.system, model).clean());
        CHECK(validate_condition3(inst.system, model).clean());
    }
    const auto ex1 = fixtures::example1();
    CHECK(validate_condition4(ex1.system, ex1.model()).clean());
}

TEST_CASE("the eight-class instance fails 4.iii at five boundaries") {
    const auto inst = fixtures::example2();
    const auto report = validate_condition4(inst.system, inst.model());
    CHECK_FALSE(report.clean());
    std::vector<int> failing;
    for (const auto& v : report.violations) {
        CHECK(v.condition == "4.iii");
        failing.push_back(v.boundaries.at(0));
    }
    std::sort(failing.begin(), failing.end());
    CHECK(failing == std::vector<int>{1, 2, 4, 5, 6});
    // the boundary-1 witness is the upper action its own lower layer cannot outrank
    CHECK(report.violations.front().witnesses == std::vector<std::string>{"bU1,1"});
}

TEST_CASE("condition 2 spots shared and preference-linked layer actions") {
    auto inst = fixtures::example1();
    const auto model = inst.model();

    SUBCASE("duplicate by id across the layers of one boundary") {
        auto sys = inst.system;
        sys.boundaries[0].lower.push_back(pv("bU1,1", {9, 9, 9, 9, 9}));
        CHECK(validate_condition2(sys, model).has("2.disjoint"));
    }
    SUBCASE("duplicate by scores under a fresh id") {
        auto sys = inst.system;
        sys.boundaries[0].lower.push_back(pv("clone", {1, 1, 1, 1, 0.5}));
        CHECK(validate_condition2(sys, model).has("2.disjoint"));
    }
    SUBCASE("preference inside a lower layer") {
        auto sys = inst.system;
        // bL2,1 dominates this copy of the weakest upper action
        sys.boundaries[1].lower.push_back(pv("weak", {1, 1, 1, 1, 0.5}));
        const auto report = validate_condition2(sys, model);
        CHECK(report.has("2.iii"));
        CHECK_FALSE(report.has("2.iv"));
    }
    SUBCASE("preference inside an upper layer") {
        auto sys = inst.system;
        sys.boundaries[1].upper.push_back(pv("weak", {1, 1, 1, 1, 0.5}));
        const auto report = validate_condition2(sys, model);
        CHECK(report.has("2.iv"));
        CHECK_FALSE(report.has("2.iii"));
    }
}

TEST_CASE("condition 3 separability clauses") {
    const auto inst = fixtures::example1();
    const auto model = inst.model();

    SUBCASE("3.i fires when the layers of a boundary are swapped") {
        auto sys = inst.system;
        std::swap(sys.boundaries[0].upper, sys.boundaries[0].lower);
        CHECK(validate_condition3(sys, model).has("3.i"));
        CHECK(validate_condition4(sys, model).has("4.i"));
    }
    SUBCASE("3.ii fires when the boundary order is reversed") {
        auto sys = inst.system;
        std::reverse(sys.boundaries.begin(), sys.boundaries.end());
        CHECK(validate_condition3(sys, model).has("3.ii"));
        CHECK(validate_condition4(sys, model).has("4.ii"));
    }
    SUBCASE("empty layers: vacuous, violated and warned clauses") {
        const auto stripped = strip_upper_layers(inst.system);
        const auto report = validate_condition3(stripped, model);
        // lower layer of B_1 can no longer be outranked from above: hard violation
        CHECK(report.has("3.iv"));
        // clauses quantifying from an empty layer stay silent ...
        CHECK_FALSE(report.has("3.iii"));
        CHECK_FALSE(report.has("3.v"));
        // ... unless the target layer is empty too, which is warned about
        const bool warned = std::any_of(report.warnings.begin(), report.warnings.end(),
                                        [](const Violation& w) { return w.condition == "3.vi"; });
        CHECK(warned);
    }
}

TEST_CASE("validators ignore the ordering of actions within layers") {
    auto inst = fixtures::example1();
    const auto model = inst.model();
    auto shuffled = inst.system;
    std::reverse(shuffled.boundaries[1].lower.begin(), shuffled.boundaries[1].lower.end());
    CHECK(validate_condition2(shuffled, model).clean());
    CHECK(validate_condition3(shuffled, model).clean());
    CHECK(validate_condition4(shuffled, model).clean());
}

TEST_CASE("merging and splitting classes") {
    const auto inst = fixtures::example1();
    const auto model = inst.model();

    SUBCASE("merge fuses names and drops the boundary") {
        const auto merged = merge_classes(inst.system, 1);
        CHECK(merged.num_classes() == 2);
        CHECK(merged.class_names == std::vector<std::string>{"C1+C2", "C3"});
        CHECK(merged.boundaries == std::vector<Boundary<PerformanceVector>>{inst.system.boundaries[1]});
        CHECK_THROWS_AS(merge_classes(inst.system, 0), ParameterError);
        CHECK_THROWS_AS(merge_classes(inst.system, 3), ParameterError);
    }
    SUBCASE("split undoes a merge exactly") {
        const auto merged = merge_classes(inst.system, 1);
        const auto restored =
            split_class(merged, 1, inst.system.boundaries[0], model, 3, "C1", "C2");
        CHECK(restored == inst.system);
        const auto restored4 =
            split_class(merged, 1, inst.system.boundaries[0], model, 4, "C1", "C2");
        CHECK(restored4 == inst.system);
    }
    SUBCASE("split refuses to build an invalid system") {
        Boundary<PerformanceVector> upside_down;
        upside_down.upper = inst.system.boundaries[0].lower;
        upside_down.lower = inst.system.boundaries[0].upper;
        const auto merged = merge_classes(inst.system, 1);
        CHECK_THROWS_AS(split_class(merged, 1, upside_down, model, 3, "C1", "C2"),
                        ValidationError);
        try {
            split_class(merged, 1, upside_down, model, 3, "C1", "C2");
        } catch (const ValidationError& e) {
            CHECK(e.report.has("3.i"));
        }
        CHECK_THROWS_AS(split_class(merged, 0, upside_down, model, 3), ParameterError);
        CHECK_THROWS_AS(split_class(merged, 1, upside_down, model, 5), ParameterError);
    }
    SUBCASE("default split names mark the halves") {
        const auto merged = merge_classes(inst.system, 1);
        const auto restored = split_class(merged, 1, inst.system.boundaries[0], model);
        CHECK(restored.class_names ==
              std::vector<std::string>{"C1+C2 (lower)", "C1+C2 (upper)", "C3"});
    }
}

TEST_CASE("stripping upper layers keeps the lower profiles") {
    const auto inst = fixtures::example2();
    const auto stripped = strip_upper_layers(inst.system);
    CHECK(stripped.num_boundaries() == inst.system.num_boundaries());
    for (int k = 1; k <= stripped.num_boundaries(); ++k) {
        CHECK(stripped.boundary(k).upper.empty());
        CHECK(stripped.boundary(k).lower == inst.system.boundary(k).lower);
    }
}

TEST_CASE("generated random instances are valid by construction") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 10; ++i) {
        const auto inst = fixtures::random_valid_instance(rng);
        CHECK_NOTHROW(inst.params.validate());
        const auto model = inst.model();
        CHECK(validate_condition2(inst.system, model).clean());
        CHECK(validate_condition3(inst.system, model).clean());
        CHECK(validate_condition4(inst.system, model).clean());
    }
}
