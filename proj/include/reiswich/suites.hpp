#ifndef REISWICH_SUITES_HPP
#define REISWICH_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "reiswich/rational.hpp"
#include "reiswich/report.hpp"

namespace reiswich {

/// Shared knobs for the verification suites.
struct SuiteOptions {
    int max_n = 8;
    std::vector<Rational> taus;  ///< empty selects the default test set
    std::uint64_t seed = 1;      ///< for randomized evaluation cross-checks
    std::string deg5_path;       ///< empty selects the shipped data file
};

/// {-1/2, 1/2, 0, 1, 7/3}, the parameter set the suites sweep by default.
const std::vector<Rational>& default_tau_set();

Report suite_orthogonality(const SuiteOptions& opts);
Report suite_recursion(const SuiteOptions& opts);
Report suite_ci(const SuiteOptions& opts);
Report suite_deg5(const SuiteOptions& opts);
Report suite_coeffs(const SuiteOptions& opts);
Report suite_key(const SuiteOptions& opts);
Report suite_jacobi(const SuiteOptions& opts);
Report suite_pm(const SuiteOptions& opts);

const std::vector<std::string>& suite_names();

/// Dispatches by name; "all" merges every suite. Throws domain_error on an
/// unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

} // namespace reiswich

#endif
