#ifndef LAYERSORT_INSTANCE_IO_HPP
#define LAYERSORT_INSTANCE_IO_HPP

#include <string>
#include <vector>

#include "layersort/assignment.hpp"
#include "layersort/interval.hpp"

namespace layersort {

/// Malformed or unreadable input file.
struct IoError : Error {
    using Error::Error;
};

enum class ModelKind { Electre, IntervalValue };

struct IntervalInstance {
    IntervalValueModel value_model;
    BoundarySystem<IntervalVector> system;

    RelationalModel<IntervalVector> model() const { return make_interval_value_model(value_model); }
    friend bool operator==(const IntervalInstance&, const IntervalInstance&) = default;
};

/// A fully validated problem instance in canonical (preference-increasing)
/// form.  `minimized` records which criteria were negated at ingestion so
/// action tables can be normalized the same way.
struct LoadedInstance {
    ModelKind kind = ModelKind::Electre;
    std::vector<std::string> criterion_names;
    std::vector<bool> minimized;
    ElectreInstance electre;    // meaningful when kind == Electre
    IntervalInstance interval;  // meaningful when kind == IntervalValue

    std::size_t dimension() const { return criterion_names.size(); }
    friend bool operator==(const LoadedInstance&, const LoadedInstance&) = default;
};

LoadedInstance parse_model(const std::string& text);
LoadedInstance load_model(const std::string& path);

/// Canonical serialization: all criteria emitted as direction "max" with
/// negations already applied, so load(serialize(x)) == x.
std::string serialize_model(const LoadedInstance& instance);
void save_model(const LoadedInstance& instance, const std::string& path);

/// Delimiter-separated action table: id, then m scores in model order.
/// Minimizing criteria of the source model are negated on the way in.
std::vector<PerformanceVector> parse_actions(const std::string& text,
                                             const LoadedInstance& instance);
std::vector<PerformanceVector> load_actions(const std::string& path,
                                            const LoadedInstance& instance);

/// Interval variant; score cells are `lo:hi` or a plain (degenerate) number.
std::vector<IntervalVector> parse_interval_actions(const std::string& text,
                                                   const LoadedInstance& instance);
std::vector<IntervalVector> load_interval_actions(const std::string& path,
                                                  const LoadedInstance& instance);

}  // namespace layersort

#endif
