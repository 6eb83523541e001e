#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reiswich/core.hpp"
#include "reiswich/decimal.hpp"
#include "reiswich/errors.hpp"
#include "reiswich/orbit.hpp"
#include "reiswich/roots.hpp"
#include "reiswich/serialization.hpp"
#include "reiswich/suites.hpp"

namespace {

using namespace reiswich;

int default_digits() {
    const char* env = std::getenv("REISWICH_DIGITS");
    if (env == nullptr || *env == '\0') return 30;
    std::string text(env);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw parse_error("REISWICH_DIGITS is not an integer: \"" + text + "\"");
    }
    if (used != text.size() || value < 1)
        throw parse_error("REISWICH_DIGITS must be a positive integer, got \"" + text + "\"");
    return value;
}

/// Joins "--opt" with a following negative value ("-1/2") into --opt=value so
/// the lexer does not mistake the value for a flag.
std::vector<std::string> reversed_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        const std::string& opt = args[i];
        const std::string& val = args[i + 1];
        if (opt.size() > 2 && opt.compare(0, 2, "--") == 0
            && opt.find('=') == std::string::npos && val.size() > 1 && val[0] == '-'
            && std::isdigit(static_cast<unsigned char>(val[1]))) {
            args[i] = opt + "=" + val;
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
    }
    return {args.rbegin(), args.rend()};
}

void print_polynomial(const UniPoly& p, const std::string& format) {
    if (format == "json")
        std::cout << unipoly_to_json(p).dump() << '\n';
    else if (format == "latex")
        std::cout << polynomial_latex(p) << '\n';
    else
        std::cout << polynomial_plain(p) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Exact constructors, identity verification, certified root "
                 "isolation, and minimal-orbit vectors for the Reiswich family "
                 "of orthogonal polynomials"};
    app.require_subcommand(1);

    std::string tau_text;
    int n = 0;
    int m = 2;
    int max_n = 8;
    int digits = default_digits();
    std::string method = "closed";
    bool cross_check = false;
    std::string format;  // per-subcommand default applied after parsing
    std::string suite;
    std::vector<std::string> suite_taus;
    std::uint64_t seed = 1;
    std::string deg5_path;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json, plain, or latex")
            ->check(CLI::IsMember(std::vector<std::string>{"json", "plain", "latex"}));
    };

    CLI::App* gen = app.add_subcommand("gen", "Construct one Reiswich polynomial");
    gen->add_option("--tau", tau_text, "Parameter tau as p/q, must be > -1")->required();
    gen->add_option("--n", n, "Degree")->required();
    gen->add_option("--method", method, "Construction route: closed or recursive")
        ->check(CLI::IsMember(std::vector<std::string>{"closed", "recursive"}))
        ->capture_default_str();
    gen->add_flag("--cross-check", cross_check,
                  "Also build via the other method and assert equality");
    add_format(gen);

    CLI::App* pm = app.add_subcommand("pm", "Construct P_m from the product-form definition");
    pm->add_option("--m", m, "Index m >= 2")->required();
    add_format(pm);

    CLI::App* roots = app.add_subcommand("roots", "Isolate all roots in (0,1)");
    roots->add_option("--tau", tau_text, "Parameter tau as p/q, must be > -1")->required();
    roots->add_option("--n", n, "Degree")->required();
    roots->add_option("--digits", digits, "Certified decimal digits of each midpoint")
        ->capture_default_str();
    add_format(roots);

    CLI::App* verify = app.add_subcommand("verify", "Run an exact verification suite");
    verify->add_option("--suite", suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "Sweep bound")->capture_default_str();
    verify->add_option("--tau", suite_taus,
                       "Parameter values to sweep (repeatable; default -1/2 1/2 0 1 7/3)");
    verify->add_option("--seed", seed, "Seed for randomized evaluation cross-checks")
        ->capture_default_str();
    verify->add_option("--deg5-data", deg5_path,
                       "Path to the degree-five identity transcription");
    add_format(verify);

    CLI::App* orbit = app.add_subcommand("orbit", "Compute the X_min coordinate vector for D_m");
    orbit->add_option("--m", m, "Dynkin index m >= 2")->required();
    orbit->add_option("--digits", digits, "Certified decimal digits per coefficient")
        ->capture_default_str();
    add_format(orbit);

    CLI::App* moments = app.add_subcommand("moments", "List the moments mu_0..mu_max_n");
    moments->add_option("--tau", tau_text, "Parameter tau as p/q, must be > -1")->required();
    moments->add_option("--max-n", max_n, "Largest moment index")->required();
    add_format(moments);

    try {
        app.parse(reversed_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (format.empty()) format = (*gen || *pm) ? "plain" : "json";

    if (*gen) {
        ReiswichParam param{Rational::parse(tau_text)};
        UniPoly closed = reiswich_closed(param, n);
        UniPoly recursive;
        if (method == "recursive" || cross_check) recursive = reiswich_recursive(param, n);
        if (cross_check && !(closed == recursive))
            throw theorem_violation("gen --cross-check: closed and recursive "
                                    "constructions disagree at tau=" + tau_text
                                    + " n=" + std::to_string(n));
        print_polynomial(method == "recursive" ? recursive : closed, format);
        return 0;
    }

    if (*pm) {
        print_polynomial(pm_original(m), format);
        return 0;
    }

    if (*roots) {
        ReiswichParam param{Rational::parse(tau_text)};
        if (digits < 1) throw domain_error("roots: digits must be at least 1");
        Rational width = pow(Rational(1, 10), static_cast<unsigned long>(digits) + 2);
        std::vector<RootEnclosure> enclosures = reiswich_roots(param, n, width);
        if (format == "plain") {
            for (const RootEnclosure& e : enclosures)
                std::cout << e.lo.str() << ' ' << e.hi.str() << ' '
                          << decimal_string(e.midpoint(), digits) << '\n';
        } else {
            nlohmann::json out = nlohmann::json::array();
            for (const RootEnclosure& e : enclosures)
                out.push_back(enclosure_to_json(e, decimal_string(e.midpoint(), digits)));
            std::cout << out.dump(2) << '\n';
        }
        return 0;
    }

    if (*verify) {
        SuiteOptions opts;
        opts.max_n = max_n;
        opts.seed = seed;
        opts.deg5_path = deg5_path;
        for (const std::string& t : suite_taus) opts.taus.push_back(Rational::parse(t));
        Report report = run_suite(suite, opts);
        if (format == "plain" || format == "latex")
            std::cout << report_plain(report);
        else
            std::cout << report_to_json(report).dump(2) << '\n';
        if (!report.all_passed()) {
            std::cerr << "verify: " << report.failed_count() << " of "
                      << report.checks.size() << " checks failed\n";
            return 1;
        }
        return 0;
    }

    if (*orbit) {
        if (digits < 1) throw domain_error("orbit: digits must be at least 1");
        OrbitVector vec = minimal_orbit_vector(m, PrecisionConfig{digits});
        if (format == "plain" || format == "latex") {
            for (const std::string& c : vec.coefficients) std::cout << c << '\n';
        } else {
            std::cout << orbit_to_json(vec).dump(2) << '\n';
        }
        return 0;
    }

    if (*moments) {
        ReiswichParam param{Rational::parse(tau_text)};
        if (max_n < 0) throw domain_error("moments: max_n must be nonnegative");
        MomentFunctional fn(param);
        if (format == "plain" || format == "latex") {
            for (int k = 0; k <= max_n; ++k) std::cout << fn.moment(k).str() << '\n';
        } else {
            nlohmann::json out = nlohmann::json::array();
            for (int k = 0; k <= max_n; ++k) out.push_back(fn.moment(k).str());
            std::cout << out.dump() << '\n';
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const reiswich::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const reiswich::theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << '\n';
        return 4;
    } catch (const reiswich::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const reiswich::certification_error& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
