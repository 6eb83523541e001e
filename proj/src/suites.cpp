#include "reiswich/suites.hpp"

#include <random>
#include <sstream>

#include "reiswich/core.hpp"
#include "reiswich/errors.hpp"
#include "reiswich/factorials.hpp"
#include "reiswich/identities.hpp"
#include "reiswich/jacobi.hpp"

namespace reiswich {

const std::vector<Rational>& default_tau_set() {
    static const std::vector<Rational> taus{Rational(-1, 2), Rational(1, 2), Rational(0),
                                            Rational(1), Rational(7, 3)};
    return taus;
}

namespace {

const std::vector<Rational>& taus_of(const SuiteOptions& opts) {
    return opts.taus.empty() ? default_tau_set() : opts.taus;
}

void require_max_n(const SuiteOptions& opts) {
    if (opts.max_n < 0) throw domain_error("verify: max_n must be nonnegative");
}

std::string tagged(const std::string& suite, const Rational& tau, int n) {
    std::ostringstream id;
    id << suite << " tau=" << tau.str() << " n=" << n;
    return id.str();
}

std::string poly_str(const UniPoly& p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

} // namespace

Report suite_orthogonality(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "orthogonality";
    for (const Rational& tau : taus_of(opts))
        report.merge(verify_orthogonality(ReiswichParam(tau), opts.max_n));
    return report;
}

Report suite_recursion(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "recursion";
    for (const Rational& tau : taus_of(opts)) {
        ReiswichParam param{tau};
        for (int n = 0; n <= opts.max_n; ++n) {
            UniPoly closed = reiswich_closed(param, n);
            UniPoly recursive = reiswich_recursive(param, n);
            bool equal = closed == recursive;
            report.add(tagged("recursion", tau, n), equal,
                       equal ? "" : "closed " + poly_str(closed) + ", recursive " + poly_str(recursive));
        }
    }
    return report;
}

Report suite_ci(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "ci";
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> num_dist(-20, 20);
    std::uniform_int_distribution<long> den_dist(1, 20);
    for (int n = 0; n <= opts.max_n; ++n) {
        for (int u = 0; u <= n; ++u) {
            for (int v = 0; u + v <= n; ++v) {
                IdentityCheckResult symbolic = lemma_ci_check(n, u, v);

                // Seeded random-point probe folded into the same check: the
                // expansion evaluated at (x,y) must match the scalar-wise
                // falling-factorial sum.
                Rational x(num_dist(rng), den_dist(rng));
                Rational y(num_dist(rng), den_dist(rng));
                Rational scalar;
                for (int r = 0; r <= n; ++r) {
                    Rational term = binomial(n, r) * falling_factorial(x - Rational(r), u)
                                  * falling_factorial(y - Rational(r), v);
                    if (r % 2 != 0) term = -term;
                    scalar += term;
                }
                Rational expansion = lemma_ci_sum(n, u, v).eval({{"x", x}, {"y", y}});
                std::string witness = symbolic.detail;
                if (scalar != expansion) {
                    if (!witness.empty()) witness += "; ";
                    witness += "eval at (" + x.str() + ", " + y.str() + "): expansion "
                             + expansion.str() + ", scalar " + scalar.str();
                }
                CheckResult check = symbolic.to_check();
                check.passed = symbolic.passed && scalar == expansion;
                check.detail = witness;
                report.checks.push_back(std::move(check));
            }
        }
    }
    return report;
}

Report suite_deg5(const SuiteOptions& opts) {
    Report report;
    report.suite = "deg5";
    Degree5Identity identity = opts.deg5_path.empty() ? Degree5Identity::load_default()
                                                      : Degree5Identity::load(opts.deg5_path);
    report.checks.push_back(identity.check().to_check());

    struct Spot {
        long n, tau, r;
        long expected;
    };
    for (const Spot& spot : {Spot{1, 0, 1, 144}, Spot{0, 0, 0, 6}}) {
        auto [lhs, rhs] = identity.eval_sides(Rational(spot.n), Rational(spot.tau),
                                              Rational(spot.r));
        std::ostringstream id;
        id << "deg5 spot n=" << spot.n << " tau=" << spot.tau << " r=" << spot.r;
        bool ok = lhs == rhs && lhs == Rational(spot.expected);
        report.add(id.str(), ok,
                   ok ? "both sides " + lhs.str()
                      : "lhs " + lhs.str() + ", rhs " + rhs.str() + ", expected "
                            + std::to_string(spot.expected));
    }
    return report;
}

Report suite_coeffs(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "coeffs";
    for (const Rational& tau : taus_of(opts)) {
        ReiswichParam param{tau};
        for (int n = 1; n <= opts.max_n; ++n)
            for (int r = 1; r <= n; ++r)
                report.checks.push_back(scaled_coefficient_check(param, n, r).to_check());
    }
    return report;
}

Report suite_key(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "key";
    for (const Rational& tau : taus_of(opts)) {
        ReiswichParam param{tau};
        for (int n = 0; n <= opts.max_n; ++n) {
            for (int s = 0; s < n; ++s) {
                Rational value = key_identity_value(param, n, s);
                std::ostringstream id;
                id << "key tau=" << tau.str() << " n=" << n << " s=" << s;
                report.add(id.str(), value.is_zero(),
                           value.is_zero() ? "" : "expected 0, got " + value.str());
            }
        }
        // The identity must stop holding at s = n: a nonzero witness shows the
        // zero checks above are not vacuous.
        Rational witness = key_identity_value(param, opts.max_n, opts.max_n);
        std::ostringstream id;
        id << "key nonzero tau=" << tau.str() << " n=" << opts.max_n << " s=" << opts.max_n;
        report.add(id.str(), !witness.is_zero(),
                   !witness.is_zero() ? "value=" + witness.str() : "unexpected zero");
    }
    return report;
}

Report suite_jacobi(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "jacobi";
    for (const Rational& tau : taus_of(opts)) {
        ReiswichParam param{tau};
        for (int n = 0; n <= opts.max_n; ++n) {
            UniPoly plain = jacobi(JacobiParams(Rational(1), tau), n);
            Rational at_one = plain.eval(Rational(1));
            Rational expected_at_one = generalized_binomial(Rational(n) + 1, n);
            report.add(tagged("jacobi normalization", tau, n), at_one == expected_at_one,
                       at_one == expected_at_one
                           ? ""
                           : "P(1) = " + at_one.str() + ", expected " + expected_at_one.str());

            UniPoly shifted = jacobi_shifted(tau, n);
            Rational from_formula = Rational(factorial(n))
                                  / falling_factorial(Rational(2 * n) + tau + 1, n);
            Rational from_leading = shifted.leading().reciprocal();
            report.add(tagged("jacobi constant", tau, n), from_formula == from_leading,
                       from_formula == from_leading
                           ? "c=" + from_formula.str()
                           : "formula " + from_formula.str() + ", leading "
                                 + from_leading.str());

            UniPoly difference = reiswich_closed(param, n) - from_formula * shifted;
            report.add(tagged("jacobi proportional", tau, n), difference.is_zero(),
                       difference.is_zero() ? "" : "difference " + poly_str(difference));
        }
    }
    return report;
}

Report suite_pm(const SuiteOptions& opts) {
    require_max_n(opts);
    Report report;
    report.suite = "pm";
    // P_{2n+2} = R^{-1/2}_n and P_{2n+3} = R^{+1/2}_n, so sweeping m up to
    // 2 max_n + 3 exercises Reiswich degrees up to max_n on both branches.
    for (int m = 2; m <= 2 * opts.max_n + 3; ++m) {
        Rational tau = m % 2 == 0 ? Rational(-1, 2) : Rational(1, 2);
        int n = m / 2 - 1;
        UniPoly original = pm_original(m);
        UniPoly reiswich = reiswich_closed(ReiswichParam(tau), n);
        bool equal = original == reiswich;
        std::ostringstream id;
        id << "pm m=" << m;
        report.add(id.str(), equal,
                   equal ? "" : "P_m " + poly_str(original) + " != R " + poly_str(reiswich));
    }
    return report;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"orthogonality", "recursion", "ci",
                                                "deg5", "coeffs", "key",
                                                "jacobi", "pm", "all"};
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "orthogonality") return suite_orthogonality(opts);
    if (name == "recursion") return suite_recursion(opts);
    if (name == "ci") return suite_ci(opts);
    if (name == "deg5") return suite_deg5(opts);
    if (name == "coeffs") return suite_coeffs(opts);
    if (name == "key") return suite_key(opts);
    if (name == "jacobi") return suite_jacobi(opts);
    if (name == "pm") return suite_pm(opts);
    if (name == "all") {
        Report report;
        report.suite = "all";
        report.merge(suite_orthogonality(opts));
        report.merge(suite_recursion(opts));
        report.merge(suite_ci(opts));
        report.merge(suite_deg5(opts));
        report.merge(suite_coeffs(opts));
        report.merge(suite_key(opts));
        report.merge(suite_jacobi(opts));
        report.merge(suite_pm(opts));
        return report;
    }
    throw domain_error("unknown verify suite: " + name);
}

} // namespace reiswich
