#ifndef LAYERSORT_REPORT_HPP
#define LAYERSORT_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace layersort {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two actions with different criterion counts were compared.
struct DimensionError : Error {
    using Error::Error;
};

/// A model or system parameter violates its invariants.
struct ParameterError : Error {
    using Error::Error;
};

/// One violated condition clause, with enough context to replay it.
struct Violation {
    std::string condition;               // e.g. "1.ii", "2.iii", "3.i", "4.iv"
    std::vector<std::string> witnesses;  // action ids, in clause order
    std::vector<int> boundaries;         // boundary indices involved (1-based)
    std::string message;
};

struct ViolationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;

    bool clean() const { return violations.empty(); }

    void add(std::string condition, std::vector<std::string> witnesses,
             std::vector<int> boundaries, std::string message) {
        violations.push_back({std::move(condition), std::move(witnesses),
                              std::move(boundaries), std::move(message)});
    }
    void warn(std::string condition, std::vector<std::string> witnesses,
              std::vector<int> boundaries, std::string message) {
        warnings.push_back({std::move(condition), std::move(witnesses),
                            std::move(boundaries), std::move(message)});
    }
    void merge(const ViolationReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
        warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    }
    /// True if some violation has the given condition id.
    bool has(const std::string& condition) const {
        for (const auto& v : violations)
            if (v.condition == condition) return true;
        return false;
    }
};

/// Raised when an operation would produce an invalid system.
struct ValidationError : Error {
    ViolationReport report;
    explicit ValidationError(ViolationReport r)
        : Error("validation failed with " + std::to_string(r.violations.size()) + " violation(s)"),
          report(std::move(r)) {}
};

std::string format_report(const ViolationReport& report);

}  // namespace layersort

#endif
