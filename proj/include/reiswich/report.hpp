#ifndef REISWICH_REPORT_HPP
#define REISWICH_REPORT_HPP

#include <string>
#include <vector>

namespace reiswich {

/// One checked statement inside a verification suite.
struct CheckResult {
    std::string name;    ///< e.g. "orthogonality tau=1/2 m=3 n=7"
    bool passed = false;
    std::string detail;  ///< expected/actual rendering on failure, empty on success
};

/// Aggregate outcome of a verification suite run.
struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::size_t failed_count() const {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (!c.passed) ++k;
        return k;
    }

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace reiswich

#endif
