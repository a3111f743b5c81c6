// Command-line front end: model validation, batch assignment, relation
// matrices, the structural-property harness, and the transposition
// operation over model files.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layersort/instance_io.hpp"
#include "layersort/properties.hpp"

namespace {

using namespace layersort;

constexpr int kExitUsage = 2;
constexpr int kExitValidationFailure = 3;
constexpr int kExitPropertyFailure = 4;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct ReportSink {
    std::string path;
    std::ostringstream lines;

    void put(const std::string& key, const std::string& value) {
        if (!path.empty()) lines << key << "=" << value << "\n";
    }
    void flush() {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw IoError("cannot write report '" + path + "'");
        out << lines.str();
    }
};

// ---- audit-action sampling ------------------------------------------------

std::vector<PerformanceVector> sample_actions(const BoundarySystem<PerformanceVector>& system,
                                              int count, unsigned seed) {
    const auto all = system.all_actions();
    const std::size_t m = all.empty() ? 0 : all.front().scores.size();
    std::vector<double> lo(m, 0.0), hi(m, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        lo[j] = hi[j] = all.front().scores[j];
        for (const auto& a : all) {
            lo[j] = std::min(lo[j], a.scores[j]);
            hi[j] = std::max(hi[j], a.scores[j]);
        }
        const double pad = 0.25 * (hi[j] - lo[j]) + 0.5;
        lo[j] -= pad;
        hi[j] += pad;
    }
    std::mt19937 rng(seed);
    std::vector<PerformanceVector> actions;
    for (int i = 0; i < count; ++i) {
        PerformanceVector a;
        a.id = "audit" + std::to_string(i + 1);
        for (std::size_t j = 0; j < m; ++j)
            a.scores.push_back(std::uniform_real_distribution<>(lo[j], hi[j])(rng));
        actions.push_back(std::move(a));
    }
    return actions;
}

std::vector<IntervalVector> sample_actions(const BoundarySystem<IntervalVector>& system,
                                           int count, unsigned seed) {
    const auto all = system.all_actions();
    const std::size_t m = all.empty() ? 0 : all.front().scores.size();
    double lo = 0.0, hi = 1.0;
    for (const auto& a : all)
        for (const auto& s : a.scores) {
            lo = std::min(lo, s.lo);
            hi = std::max(hi, s.hi);
        }
    std::mt19937 rng(seed);
    std::vector<IntervalVector> actions;
    for (int i = 0; i < count; ++i) {
        IntervalVector a;
        a.id = "audit" + std::to_string(i + 1);
        for (std::size_t j = 0; j < m; ++j) {
            const double base = std::uniform_real_distribution<>(lo, hi)(rng);
            const double width = std::uniform_real_distribution<>(0.0, 0.2 * (hi - lo))(rng);
            a.scores.push_back({std::max(0.0, base), std::max(0.0, base) + width});
        }
        actions.push_back(std::move(a));
    }
    return actions;
}

// ---- subcommands ----------------------------------------------------------

template <class Action>
int run_validate(const RelationalModel<Action>& model, const BoundarySystem<Action>& system,
                 const std::vector<std::string>& conditions, ReportSink& sink) {
    bool ok = true;
    for (const auto& cond : conditions) {
        ViolationReport report;
        if (cond == "1")
            report = check_condition1(model, system.all_actions());
        else if (cond == "2")
            report = validate_condition2(system, model);
        else if (cond == "3")
            report = validate_condition3(system, model);
        else if (cond == "4")
            report = validate_condition4(system, model);
        else
            throw ParameterError("unknown condition '" + cond + "' (expected 1, 2, 3 or 4)");
        std::cout << "Condition " << cond << ":\n" << format_report(report);
        sink.put("condition" + cond, report.clean() ? "ok" : "violated");
        for (const auto& v : report.violations)
            sink.put("condition" + cond + ".violation", v.condition + " " + v.message);
        ok = ok && report.clean();
    }
    sink.flush();
    return ok ? 0 : kExitValidationFailure;
}

template <class Action>
void print_trace(const AssignmentOutcome& outcome) {
    for (const auto& [k, rel] : outcome.trace)
        std::cout << "    B_" << k << ": xSB=" << rel.x_s_b << " BSx=" << rel.b_s_x
                  << " xPB=" << rel.x_p_b << " BPx=" << rel.b_p_x << "\n";
}

template <class Action>
int run_assign(const RelationalModel<Action>& model, const BoundarySystem<Action>& system,
               const std::vector<Action>& actions, const std::string& rule, bool trace,
               ReportSink& sink) {
    const auto& names = system.class_names;
    for (const auto& a : actions) {
        if (rule == "s-conjoint" || rule == "p-conjoint") {
            const auto out =
                assign_conjoint(model, a, system, rule[0] == 's' ? Family::S : Family::P);
            if (out.lower() == out.upper()) {
                std::cout << a.id << ": " << names[out.lower() - 1] << "\n";
                sink.put(a.id, std::to_string(out.lower()));
            } else {
                std::cout << a.id << ": [" << names[out.lower() - 1] << ", "
                          << names[out.upper() - 1] << "]\n";
                sink.put(a.id, std::to_string(out.lower()) + ".." + std::to_string(out.upper()));
            }
        } else {
            Rule r;
            if (rule == "s-primal")
                r = Rule::SPrimal;
            else if (rule == "s-dual")
                r = Rule::SDual;
            else if (rule == "p-primal")
                r = Rule::PPrimal;
            else if (rule == "p-dual")
                r = Rule::PDual;
            else
                throw ParameterError("unknown rule '" + rule + "'");
            const auto out = assign(model, a, system, r);
            std::cout << a.id << ": " << names[out.class_index - 1] << "\n";
            if (trace) print_trace<Action>(out);
            sink.put(a.id, std::to_string(out.class_index));
        }
    }
    sink.flush();
    return 0;
}

template <class Action>
int run_relations(const RelationalModel<Action>& model, const BoundarySystem<Action>& system,
                  const std::vector<Action>& extra) {
    auto actions = system.all_actions();
    actions.insert(actions.end(), extra.begin(), extra.end());
    std::size_t width = 4;
    for (const auto& a : actions) width = std::max(width, a.id.size());
    width = std::max(width, std::string("D^-1,P^-1").size()) + 2;
    std::cout << std::setw(static_cast<int>(width)) << "";
    for (const auto& a : actions) std::cout << std::setw(static_cast<int>(width)) << a.id;
    std::cout << "\n";
    for (const auto& row : actions) {
        std::cout << std::setw(static_cast<int>(width)) << row.id;
        for (const auto& col : actions) {
            const auto kind = classify_pair(model, row, col);
            const std::string cell =
                (&row == &col) ? "S" : relation_symbol(kind);
            std::cout << std::setw(static_cast<int>(width)) << cell;
        }
        std::cout << "\n";
    }
    return 0;
}

template <class Action>
void run_generic_checks(const RelationalModel<Action>& model,
                        const BoundarySystem<Action>& system, const std::vector<Action>& audit,
                        const std::vector<std::string>& properties, PropertyReport& report) {
    const auto wants = [&](const std::string& p) {
        return std::find(properties.begin(), properties.end(), p) != properties.end();
    };
    if (wants("homogeneity")) report.results.push_back(check_homogeneity(model, system, audit));
    if (wants("monotonicity")) report.results.push_back(check_monotonicity(model, system, audit));
    if (wants("scan"))
        report.results.push_back(check_boundary_scan_monotonicity(model, system, audit));
    if (wants("stability"))
        for (int k = 1; k <= system.num_boundaries(); ++k)
            report.results.push_back(check_stability(model, system, audit, k));
    if (wants("conformity-s"))
        report.results.push_back(check_conformity(model, system, Family::S));
    if (wants("conformity-p"))
        report.results.push_back(check_conformity(model, system, Family::P));
    if (wants("trinb"))
        report.results.push_back(
            check_trinb_reduction(model, strip_upper_layers(system), audit));
    if (wants("condition1")) {
        PropertyResult r;
        r.property = "condition1";
        const auto violations = check_condition1(model, audit);
        for (const auto& v : violations.violations) r.fail(v.witnesses.empty() ? "" : v.witnesses.front(), v.message);
        report.results.push_back(std::move(r));
    }
    if (wants("proposition1")) {
        PropertyResult r;
        r.property = "proposition1";
        const auto violations = check_proposition1(model, audit);
        for (const auto& v : violations.violations) r.fail(v.witnesses.empty() ? "" : v.witnesses.front(), v.message);
        report.results.push_back(std::move(r));
    }
}

int run_check(const LoadedInstance& instance, const std::vector<std::string>& properties,
              int grid_samples, unsigned seed, ReportSink& sink) {
    PropertyReport report;
    report.seed = seed;
    if (instance.kind == ModelKind::Electre) {
        const auto model = instance.electre.model();
        auto audit = instance.electre.system.all_actions();
        const auto sampled = sample_actions(instance.electre.system, grid_samples, seed);
        audit.insert(audit.end(), sampled.begin(), sampled.end());
        run_generic_checks(model, instance.electre.system, audit, properties, report);
        if (std::find(properties.begin(), properties.end(), "transposition") != properties.end())
            report.results.push_back(check_transposition(instance.electre, audit));
    } else {
        const auto model = instance.interval.model();
        auto audit = instance.interval.system.all_actions();
        const auto sampled = sample_actions(instance.interval.system, grid_samples, seed);
        audit.insert(audit.end(), sampled.begin(), sampled.end());
        run_generic_checks(model, instance.interval.system, audit, properties, report);
    }
    std::cout << "seed: " << seed << "\n";
    sink.put("seed", std::to_string(seed));
    bool any_fail = false;
    for (const auto& r : report.results) {
        std::cout << std::left << std::setw(24) << r.property << status_name(r.status);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        for (const auto& w : r.witnesses) std::cout << "    witness: " << w << "\n";
        sink.put(r.property, status_name(r.status));
        any_fail = any_fail || r.status == PropertyStatus::Fail;
    }
    sink.flush();
    return any_fail ? kExitPropertyFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal classification with two-layer limiting boundaries"};
    app.require_subcommand(1);

    std::string model_path, actions_path, rule = "s-conjoint", conditions = "2,3,4";
    std::string properties =
        "homogeneity,monotonicity,scan,stability,transposition,conformity-s,conformity-p,"
        "trinb,condition1,proposition1";
    std::string report_path, out_path;
    bool trace = false;
    int grid_samples = 128;
    unsigned seed = 42;

    auto* validate = app.add_subcommand("validate", "Check boundary-validity conditions");
    validate->add_option("model", model_path)->required();
    validate->add_option("--conditions", conditions, "comma list from 1,2,3,4");
    validate->add_option("--report", report_path);

    auto* assign_cmd = app.add_subcommand("assign", "Assign actions to classes");
    assign_cmd->add_option("model", model_path)->required();
    assign_cmd->add_option("actions", actions_path)->required();
    assign_cmd->add_option("--rule", rule,
                           "s-primal|s-dual|p-primal|p-dual|s-conjoint|p-conjoint");
    assign_cmd->add_flag("--trace", trace, "print consulted boundaries");
    assign_cmd->add_option("--report", report_path);

    auto* relations = app.add_subcommand("relations", "Print the relation matrix");
    relations->add_option("model", model_path)->required();
    relations->add_option("actions", actions_path);

    auto* check = app.add_subcommand("check", "Run the structural-property harness");
    check->add_option("model", model_path)->required();
    check->add_option("--properties", properties);
    check->add_option("--grid-samples", grid_samples);
    check->add_option("--seed", seed);
    check->add_option("--report", report_path);

    auto* transpose = app.add_subcommand("transpose", "Write the transposed instance");
    transpose->add_option("model", model_path)->required();
    transpose->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const auto instance = load_model(model_path);
        ReportSink sink{report_path, {}};

        if (*validate) {
            const auto conds = split_list(conditions);
            if (instance.kind == ModelKind::Electre)
                return run_validate(instance.electre.model(), instance.electre.system, conds,
                                    sink);
            return run_validate(instance.interval.model(), instance.interval.system, conds, sink);
        }
        if (*assign_cmd) {
            if (instance.kind == ModelKind::Electre)
                return run_assign(instance.electre.model(), instance.electre.system,
                                  load_actions(actions_path, instance), rule, trace, sink);
            return run_assign(instance.interval.model(), instance.interval.system,
                              load_interval_actions(actions_path, instance), rule, trace, sink);
        }
        if (*relations) {
            if (instance.kind == ModelKind::Electre)
                return run_relations(instance.electre.model(), instance.electre.system,
                                     actions_path.empty()
                                         ? std::vector<PerformanceVector>{}
                                         : load_actions(actions_path, instance));
            return run_relations(instance.interval.model(), instance.interval.system,
                                 actions_path.empty()
                                     ? std::vector<IntervalVector>{}
                                     : load_interval_actions(actions_path, instance));
        }
        if (*check) return run_check(instance, split_list(properties), grid_samples, seed, sink);
        if (*transpose) {
            if (instance.kind != ModelKind::Electre)
                throw ParameterError("transpose supports ELECTRE instances only");
            LoadedInstance out = instance;
            out.electre = transpose_problem(instance.electre);
            out.minimized.assign(out.minimized.size(), false);
            save_model(out, out_path);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n" << format_report(e.report);
        return kExitValidationFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
