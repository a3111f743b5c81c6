#include "layersort/properties.hpp"

namespace layersort {

PropertyResult check_transposition(const ElectreInstance& instance,
                                   const std::vector<PerformanceVector>& actions) {
    PropertyResult result;
    result.property = "transposition";
    const int M = instance.system.num_classes();
    const auto model = instance.model();
    const auto transposed = transpose_problem(instance);
    const auto tmodel = transposed.model();

    const auto involution = transpose_problem(transposed);
    if (!(involution == instance))
        result.fail("<system>", "double transposition does not restore the instance");

    struct Pair {
        Rule direct, corresponding;
    };
    static constexpr Pair pairs[] = {
        {Rule::SPrimal, Rule::SDual},
        {Rule::SDual, Rule::SPrimal},
        {Rule::PPrimal, Rule::PDual},
        {Rule::PDual, Rule::PPrimal},
    };
    for (const auto& a : actions) {
        const auto ta = transpose_action(a);
        for (const auto& [direct, corresponding] : pairs) {
            const int transposed_class =
                assign(tmodel, ta, transposed.system, direct).class_index;
            const int original_class =
                assign(model, a, instance.system, corresponding).class_index;
            if (transposed_class != M + 1 - original_class)
                result.fail(a.id + " under " + rule_name(direct),
                            "transposed class " + std::to_string(transposed_class) +
                                " does not mirror " + rule_name(corresponding) + " class " +
                                std::to_string(original_class));
        }
    }
    return result;
}

}  // namespace layersort
