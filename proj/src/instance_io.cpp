#include "layersort/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace layersort {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

double number_field(const json& obj, const std::string& field, const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_number())
        throw IoError(where + ": missing or non-numeric field '" + field + "'");
    return obj[field].get<double>();
}

IntervalNumber interval_field(const json& value, const std::string& where) {
    if (value.is_number()) {
        const double v = value.get<double>();
        return {v, v};
    }
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        IntervalNumber iv{value[0].get<double>(), value[1].get<double>()};
        if (iv.lo > iv.hi) throw IoError(where + ": interval bounds must satisfy lo <= hi");
        return iv;
    }
    throw IoError(where + ": expected a number or a [lo, hi] pair");
}

template <class Action, class ScoreParser>
BoundarySystem<Action> parse_system(const json& doc, std::size_t m, ScoreParser parse_scores) {
    BoundarySystem<Action> system;
    if (!doc.contains("classes") || !doc["classes"].is_array() || doc["classes"].size() < 2)
        throw IoError("classes: at least two class names required");
    for (const auto& c : doc["classes"]) system.class_names.push_back(c.get<std::string>());
    if (!doc.contains("boundaries") || !doc["boundaries"].is_array())
        throw IoError("boundaries: missing array");
    if (doc["boundaries"].size() + 1 != system.class_names.size())
        throw IoError("boundaries: expected exactly " +
                      std::to_string(system.class_names.size() - 1) + " boundaries for " +
                      std::to_string(system.class_names.size()) + " classes");
    int k = 0;
    for (const auto& bj : doc["boundaries"]) {
        ++k;
        Boundary<Action> b;
        const auto& actions = bj.contains("actions") ? bj["actions"] : bj;
        if (!actions.is_array())
            throw IoError("boundary " + std::to_string(k) + ": expected an action array");
        for (const auto& aj : actions) {
            Action a;
            a.id = aj.value("id", "");
            if (a.id.empty())
                throw IoError("boundary " + std::to_string(k) + ": action without id");
            if (!aj.contains("performance") || !aj["performance"].is_array() ||
                aj["performance"].size() != m)
                throw IoError("action '" + a.id + "': performance must list " +
                              std::to_string(m) + " scores");
            parse_scores(aj["performance"], a);
            const std::string layer = aj.value("layer", "");
            if (layer == "upper")
                b.upper.push_back(std::move(a));
            else if (layer == "lower")
                b.lower.push_back(std::move(a));
            else
                throw IoError("action '" + a.id + "': layer must be \"upper\" or \"lower\"");
        }
        system.boundaries.push_back(std::move(b));
    }
    return system;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

// A cell that reads as a score: a plain number or a lo:hi interval.
bool score_like(const std::string& s) {
    double ignored;
    if (const auto colon = s.find(':'); colon != std::string::npos)
        return parse_double(s.substr(0, colon), ignored) &&
               parse_double(s.substr(colon + 1), ignored);
    return parse_double(s, ignored);
}

template <class Action, class CellParser>
std::vector<Action> parse_table(const std::string& text, std::size_t m, CellParser parse_cell) {
    std::vector<Action> actions;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_cells(line);
        if (first) {
            first = false;
            // header row: the first score cell fails to parse
            if (cells.size() > 1 && !score_like(cells[1])) continue;
        }
        if (cells.size() != m + 1)
            throw IoError("action row '" + (cells.empty() ? "" : cells[0]) + "': expected " +
                          std::to_string(m + 1) + " columns, got " + std::to_string(cells.size()));
        Action a;
        a.id = cells[0];
        for (const auto& existing : actions)
            if (existing.id == a.id) throw IoError("duplicate action id '" + a.id + "'");
        for (std::size_t j = 0; j < m; ++j) parse_cell(cells[j + 1], j, a);
        actions.push_back(std::move(a));
    }
    return actions;
}

}  // namespace

LoadedInstance parse_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("model parse error: ") + e.what());
    }
    LoadedInstance instance;
    const std::string kind = doc.value("kind", "");
    if (kind == "electre")
        instance.kind = ModelKind::Electre;
    else if (kind == "interval-value")
        instance.kind = ModelKind::IntervalValue;
    else
        throw IoError("kind: expected \"electre\" or \"interval-value\", got \"" + kind + "\"");

    if (!doc.contains("criteria") || !doc["criteria"].is_array() || doc["criteria"].empty())
        throw IoError("criteria: missing or empty array");
    const std::size_t m = doc["criteria"].size();

    for (const auto& cj : doc["criteria"]) {
        const std::string name = cj.value("name", "g" + std::to_string(instance.criterion_names.size() + 1));
        instance.criterion_names.push_back(name);
        const std::string direction = cj.value("direction", "max");
        if (direction != "max" && direction != "min")
            throw IoError("criterion '" + name + "': direction must be \"max\" or \"min\"");
        if (direction == "min" && instance.kind == ModelKind::IntervalValue)
            throw IoError("criterion '" + name +
                          "': minimizing criteria are not supported for interval-value models "
                          "(negation would break the nonnegative-score requirement)");
        instance.minimized.push_back(direction == "min");
    }

    if (instance.kind == ModelKind::Electre) {
        ElectreParameters params;
        for (std::size_t j = 0; j < m; ++j) {
            const auto& cj = doc["criteria"][j];
            Criterion c;
            c.name = instance.criterion_names[j];
            c.weight = number_field(cj, "weight", "criterion '" + c.name + "'");
            c.q = number_field(cj, "q", "criterion '" + c.name + "'");
            c.p = number_field(cj, "p", "criterion '" + c.name + "'");
            if (cj.contains("u")) c.u = number_field(cj, "u", "criterion '" + c.name + "'");
            if (cj.contains("v")) c.v = number_field(cj, "v", "criterion '" + c.name + "'");
            params.criteria.push_back(std::move(c));
        }
        params.lambda = number_field(doc, "lambda", "model");
        params.validate();
        instance.electre.params = std::move(params);
        instance.electre.system = parse_system<PerformanceVector>(
            doc, m, [&](const json& perf, PerformanceVector& a) {
                for (std::size_t j = 0; j < m; ++j) {
                    if (!perf[j].is_number())
                        throw IoError("action '" + a.id + "': non-numeric score");
                    const double v = perf[j].get<double>();
                    a.scores.push_back(instance.minimized[j] ? -v : v);
                }
            });
    } else {
        IntervalValueModel model;
        for (std::size_t j = 0; j < m; ++j) {
            const auto& cj = doc["criteria"][j];
            if (!cj.contains("weight"))
                throw IoError("criterion '" + instance.criterion_names[j] + "': missing weight");
            model.weights.push_back(
                interval_field(cj["weight"], "criterion '" + instance.criterion_names[j] + "'"));
        }
        model.alpha_d = number_field(doc, "alpha_d", "model");
        model.validate();
        instance.interval.value_model = std::move(model);
        instance.interval.system = parse_system<IntervalVector>(
            doc, m, [&](const json& perf, IntervalVector& a) {
                for (std::size_t j = 0; j < m; ++j) {
                    auto iv = interval_field(perf[j], "action '" + a.id + "'");
                    if (iv.lo < 0.0)
                        throw IoError("action '" + a.id + "': negative interval scores rejected");
                    a.scores.push_back(iv);
                }
            });
        // every utility must be well formed; evaluates the ingestion checks
        for (const auto& a : instance.interval.system.all_actions())
            (void)instance.interval.value_model.utility(a);
    }
    return instance;
}

LoadedInstance load_model(const std::string& path) { return parse_model(read_file(path)); }

std::string serialize_model(const LoadedInstance& instance) {
    json doc;
    json criteria = json::array();
    const std::size_t m = instance.dimension();
    for (std::size_t j = 0; j < m; ++j) {
        json cj;
        cj["name"] = instance.criterion_names[j];
        cj["direction"] = "max";  // canonical form
        if (instance.kind == ModelKind::Electre) {
            const auto& c = instance.electre.params.criteria[j];
            cj["weight"] = c.weight;
            cj["q"] = c.q;
            cj["p"] = c.p;
            if (c.u) cj["u"] = *c.u;
            if (c.v) cj["v"] = *c.v;
        } else {
            const auto& w = instance.interval.value_model.weights[j];
            cj["weight"] = json::array({w.lo, w.hi});
        }
        criteria.push_back(std::move(cj));
    }
    doc["kind"] = instance.kind == ModelKind::Electre ? "electre" : "interval-value";
    doc["criteria"] = std::move(criteria);
    if (instance.kind == ModelKind::Electre)
        doc["lambda"] = instance.electre.params.lambda;
    else
        doc["alpha_d"] = instance.interval.value_model.alpha_d;

    const auto emit_system = [&](const auto& system, auto score_to_json) {
        doc["classes"] = system.class_names;
        json boundaries = json::array();
        for (const auto& b : system.boundaries) {
            json actions = json::array();
            const auto emit = [&](const auto& layer, const char* name) {
                for (const auto& a : layer) {
                    json aj;
                    aj["layer"] = name;
                    aj["id"] = a.id;
                    json perf = json::array();
                    for (const auto& s : a.scores) perf.push_back(score_to_json(s));
                    aj["performance"] = std::move(perf);
                    actions.push_back(std::move(aj));
                }
            };
            emit(b.upper, "upper");
            emit(b.lower, "lower");
            boundaries.push_back(json{{"actions", std::move(actions)}});
        }
        doc["boundaries"] = std::move(boundaries);
    };
    if (instance.kind == ModelKind::Electre)
        emit_system(instance.electre.system, [](double s) { return json(s); });
    else
        emit_system(instance.interval.system,
                    [](const IntervalNumber& s) { return json::array({s.lo, s.hi}); });
    return doc.dump(2) + "\n";
}

void save_model(const LoadedInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << serialize_model(instance);
}

std::vector<PerformanceVector> parse_actions(const std::string& text,
                                             const LoadedInstance& instance) {
    const std::size_t m = instance.dimension();
    return parse_table<PerformanceVector>(
        text, m, [&](const std::string& cell, std::size_t j, PerformanceVector& a) {
            double v;
            if (!parse_double(cell, v))
                throw IoError("action '" + a.id + "': non-numeric score '" + cell + "'");
            a.scores.push_back(instance.minimized[j] ? -v : v);
        });
}

std::vector<PerformanceVector> load_actions(const std::string& path,
                                            const LoadedInstance& instance) {
    return parse_actions(read_file(path), instance);
}

std::vector<IntervalVector> parse_interval_actions(const std::string& text,
                                                   const LoadedInstance& instance) {
    const std::size_t m = instance.dimension();
    return parse_table<IntervalVector>(
        text, m, [&](const std::string& cell, std::size_t j, IntervalVector& a) {
            (void)j;
            double lo, hi;
            if (const auto colon = cell.find(':'); colon != std::string::npos) {
                if (!parse_double(cell.substr(0, colon), lo) ||
                    !parse_double(cell.substr(colon + 1), hi) || lo > hi)
                    throw IoError("action '" + a.id + "': bad interval cell '" + cell + "'");
            } else {
                if (!parse_double(cell, lo))
                    throw IoError("action '" + a.id + "': non-numeric score '" + cell + "'");
                hi = lo;
            }
            if (lo < 0.0)
                throw IoError("action '" + a.id + "': negative interval scores rejected");
            a.scores.push_back({lo, hi});
        });
}

std::vector<IntervalVector> load_interval_actions(const std::string& path,
                                                  const LoadedInstance& instance) {
    return parse_interval_actions(read_file(path), instance);
}

}  // namespace layersort
