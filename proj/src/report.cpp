#include "layersort/report.hpp"

#include <sstream>

namespace layersort {

namespace {

void format_entries(std::ostream& os, const char* tag, const std::vector<Violation>& entries) {
    for (const auto& e : entries) {
        os << "  [" << tag << "] " << e.condition;
        if (!e.boundaries.empty()) {
            os << " (B";
            for (std::size_t i = 0; i < e.boundaries.size(); ++i)
                os << (i ? ", B" : "") << e.boundaries[i];
            os << ")";
        }
        if (!e.witnesses.empty()) {
            os << " witness:";
            for (const auto& w : e.witnesses) os << " " << w;
        }
        os << " - " << e.message << "\n";
    }
}

}  // namespace

std::string format_report(const ViolationReport& report) {
    std::ostringstream os;
    if (report.clean() && report.warnings.empty()) {
        os << "  ok\n";
        return os.str();
    }
    format_entries(os, "violation", report.violations);
    format_entries(os, "warning", report.warnings);
    return os.str();
}

}  // namespace layersort
