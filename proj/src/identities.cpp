#include "reiswich/identities.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reiswich/errors.hpp"
#include "reiswich/factorials.hpp"
#include "reiswich/serialization.hpp"

#ifndef REISWICH_DEG5_JSON_DEFAULT
#define REISWICH_DEG5_JSON_DEFAULT "data/degree5_identity.json"
#endif

namespace reiswich {

CheckResult IdentityCheckResult::to_check() const {
    std::ostringstream name;
    name << identity_name;
    for (const auto& [key, value] : parameters) name << ' ' << key << '=' << value;
    return {name.str(), passed, detail};
}

MultiPoly lemma_ci_sum(int n, int u, int v) {
    if (n < 0 || u < 0 || v < 0)
        throw domain_error("lemma_ci_sum: negative parameter");
    MultiPoly x = MultiPoly::variable("x");
    MultiPoly y = MultiPoly::variable("y");
    MultiPoly acc;
    for (int r = 0; r <= n; ++r) {
        mpz_class coeff;
        mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(r));
        if (r % 2 != 0) coeff = -coeff;
        acc += coeff * (falling_factorial_sym(x - MultiPoly::constant(r), u)
                        * falling_factorial_sym(y - MultiPoly::constant(r), v));
    }
    return acc;
}

IdentityCheckResult lemma_ci_check(int n, int u, int v) {
    if (n < 0 || u < 0 || v < 0)
        throw domain_error("lemma_ci_check: negative parameter");
    if (u + v > n)
        throw domain_error("lemma_ci_check: u+v > n is outside the identity's hypothesis");
    IdentityCheckResult result;
    result.identity_name = "ci";
    result.parameters = {{"n", std::to_string(n)},
                         {"u", std::to_string(u)},
                         {"v", std::to_string(v)}};
    MultiPoly expected =
        (u + v == n) ? MultiPoly::constant(factorial(n)) : MultiPoly();
    result.difference = lemma_ci_sum(n, u, v) - expected;
    result.passed = result.difference.is_zero();
    if (!result.passed)
        result.detail = "difference " + result.difference.str();
    return result;
}

namespace {

std::vector<std::vector<MultiPoly>> parse_lines(const nlohmann::json& side,
                                                const char* which) {
    if (!side.is_array() || side.empty())
        throw parse_error(std::string("degree5 data: ") + which
                          + " must be a nonempty array of lines");
    std::vector<std::vector<MultiPoly>> lines;
    for (const auto& line : side) {
        if (!line.is_array() || line.empty())
            throw parse_error(std::string("degree5 data: each ") + which
                              + " line must be a nonempty array of factors");
        std::vector<MultiPoly> factors;
        for (const auto& factor : line) factors.push_back(multipoly_from_json(factor));
        lines.push_back(std::move(factors));
    }
    return lines;
}

MultiPoly expand_lines(const std::vector<std::vector<MultiPoly>>& lines) {
    MultiPoly acc;
    for (const auto& line : lines) {
        MultiPoly product = MultiPoly::constant(1);
        for (const auto& factor : line) product *= factor;
        acc += product;
    }
    return acc;
}

} // namespace

Degree5Identity Degree5Identity::load(const std::string& json_path) {
    std::ifstream in(json_path);
    if (!in) throw parse_error("cannot open degree5 data file: " + json_path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("degree5 data: invalid JSON: " + std::string(e.what()));
    }
    Degree5Identity identity;
    if (!doc.contains("variables") || !doc["variables"].is_array())
        throw parse_error("degree5 data: missing variables array");
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw parse_error("degree5 data: variable names must be strings");
        identity.variables_.push_back(v.get<std::string>());
    }
    if (!doc.contains("lhs") || !doc.contains("rhs"))
        throw parse_error("degree5 data: missing lhs or rhs");
    identity.lhs_lines_ = parse_lines(doc["lhs"], "lhs");
    identity.rhs_lines_ = parse_lines(doc["rhs"], "rhs");
    return identity;
}

Degree5Identity Degree5Identity::load_default() {
    return load(REISWICH_DEG5_JSON_DEFAULT);
}

MultiPoly Degree5Identity::expand_lhs() const { return expand_lines(lhs_lines_); }

MultiPoly Degree5Identity::expand_rhs() const { return expand_lines(rhs_lines_); }

IdentityCheckResult Degree5Identity::check() const {
    IdentityCheckResult result;
    result.identity_name = "deg5";
    result.parameters = {{"ring", "Z[n,tau,r]"}};
    result.difference = expand_lhs() - expand_rhs();
    result.passed = result.difference.is_zero();
    if (!result.passed)
        result.detail = "difference " + result.difference.str();
    return result;
}

std::pair<Rational, Rational> Degree5Identity::eval_sides(const Rational& n,
                                                          const Rational& tau,
                                                          const Rational& r) const {
    if (variables_.size() != 3)
        throw parse_error("degree5 data: expected exactly three variables");
    std::map<std::string, Rational> binding{{variables_[0], n},
                                            {variables_[1], tau},
                                            {variables_[2], r}};
    return {expand_lhs().eval(binding), expand_rhs().eval(binding)};
}

Rational lucky_factor(const ReiswichParam& param, int n, int r) {
    if (n < 1 || r < 1 || r > n)
        throw domain_error("lucky_factor: requires 1 <= r <= n, got n="
                           + std::to_string(n) + " r=" + std::to_string(r));
    const Rational& tau = param.tau();
    Rational c = Rational(r) * (Rational(2 * n) + tau + 1)
               * falling_factorial(Rational(2 * n) + tau + 3, r + 2)
               / (binomial(n, r - 1) * falling_factorial(Rational(n) + tau, r - 1));
    if (r % 2 != 0) c = -c;
    return c;
}

IdentityCheckResult scaled_coefficient_check(const ReiswichParam& param, int n, int r) {
    if (n < 1 || r < 1 || r > n)
        throw domain_error("scaled_coefficient_check: requires 1 <= r <= n, got n="
                           + std::to_string(n) + " r=" + std::to_string(r));
    const Rational& tau = param.tau();
    Rational c = lucky_factor(param, n, r);

    UniPoly r_next = reiswich_closed(param, n + 1);
    UniPoly r_cur = reiswich_closed(param, n);
    UniPoly r_prev = reiswich_closed(param, n - 1);

    Rational nn(n), rr(r);
    Rational base = Rational(2 * n) + tau;  // 2n + tau

    struct Line {
        const char* label;
        Rational actual;
        Rational expected;
    };
    // Coefficient of x^{n+1-r} in each of R_{n+1}, x R_n, R_n, R_{n-1},
    // scaled by the factor c; the right-hand sides are the closed forms the
    // recursion proof needs.
    Line lines[] = {
        {"R_{n+1}", c * r_next.coeff(n + 1 - r),
         (nn + 1) * (nn + tau + 1) * (base + 1) * (base - rr + 3) * (base - rr + 2)},
        {"x*R_n", c * r_cur.coeff(n - r),
         (nn - rr + 1) * (nn + tau - rr + 1) * (base + 3) * (base + 2) * (base + 1)},
        {"R_n", c * r_cur.coeff(n + 1 - r),
         -(rr * (base + 3) * (base + 2) * (base + 1) * (base - rr + 2))},
        {"R_{n-1}", c * r_prev.coeff(n + 1 - r),
         rr * (rr - 1) * (base + 3) * (base + 2) * (base + 1) * (base + 1) * base
             / (nn * (nn + tau))},
    };

    IdentityCheckResult result;
    result.identity_name = "coeffs";
    result.parameters = {{"tau", tau.str()},
                         {"n", std::to_string(n)},
                         {"r", std::to_string(r)}};
    result.passed = true;
    std::ostringstream detail;
    for (const Line& line : lines) {
        if (line.actual == line.expected) continue;
        if (!result.passed) detail << "; ";
        result.passed = false;
        detail << line.label << ": expected " << line.expected.str() << ", got "
               << line.actual.str();
    }
    result.detail = detail.str();
    return result;
}

} // namespace reiswich
