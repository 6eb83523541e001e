#include "reiswich/serialization.hpp"

#include <algorithm>
#include <sstream>

#include "reiswich/decimal.hpp"
#include "reiswich/errors.hpp"

namespace reiswich {

nlohmann::json unipoly_to_json(const UniPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

UniPoly unipoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("polynomial JSON must be an array of strings");
    std::vector<Rational> coeffs;
    for (const auto& entry : j) {
        if (!entry.is_string())
            throw parse_error("polynomial JSON must be an array of strings");
        coeffs.push_back(Rational::parse(entry.get<std::string>()));
    }
    return UniPoly(std::move(coeffs));
}

nlohmann::json multipoly_to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [monomial, coeff] : p.terms()) {
        nlohmann::json exponents = nlohmann::json::object();
        for (const auto& [name, exp] : monomial) exponents[name] = exp;
        terms.push_back(nlohmann::json::array({coeff.get_str(), exponents}));
    }
    return terms;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("multipoly JSON must be an array of terms");
    MultiPoly acc;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_string()
            || !term[1].is_object())
            throw parse_error("multipoly term must be [coefficient, {variable: exponent}]");
        mpz_class coeff;
        try {
            // base 10 explicitly: base 0 would read a leading zero as octal
            coeff = mpz_class(term[0].get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw parse_error("multipoly coefficient is not an integer: "
                              + term[0].get<std::string>());
        }
        MultiPoly monomial = MultiPoly::constant(coeff);
        for (const auto& [name, exp] : term[1].items()) {
            if (!exp.is_number_unsigned())
                throw parse_error("multipoly exponent must be a nonnegative integer");
            MultiPoly var = MultiPoly::variable(name);
            for (unsigned k = 0; k < exp.get<unsigned>(); ++k) monomial *= var;
        }
        acc += monomial;
    }
    return acc;
}

nlohmann::json enclosure_to_json(const RootEnclosure& e, const std::string& midpoint_decimal) {
    return {{"lo", e.lo.str()}, {"hi", e.hi.str()}, {"midpoint_decimal", midpoint_decimal}};
}

RootEnclosure enclosure_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("lo") || !j.contains("hi")
        || !j["lo"].is_string() || !j["hi"].is_string())
        throw parse_error("enclosure JSON must carry lo and hi strings");
    RootEnclosure e{Rational::parse(j["lo"].get<std::string>()),
                    Rational::parse(j["hi"].get<std::string>())};
    if (e.lo >= e.hi) throw parse_error("enclosure JSON has lo >= hi");
    return e;
}

nlohmann::json orbit_to_json(const OrbitVector& v) {
    nlohmann::json xi = nlohmann::json::array();
    for (const RootEnclosure& e : v.xi)
        xi.push_back(enclosure_to_json(e, decimal_string(e.midpoint(), v.digits)));
    nlohmann::json out{{"m", v.m},
                       {"tau", v.tau.str()},
                       {"xi", xi},
                       {"coefficients", v.coefficients},
                       {"units", "radians"},
                       {"basis", "E_1..E_m"}};
    if (v.middle_zero_index >= 1) out["middle_zero_index"] = v.middle_zero_index;
    return out;
}

namespace {

std::vector<CheckResult> sorted_checks(const Report& report) {
    std::vector<CheckResult> checks = report.checks;
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return checks;
}

} // namespace

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : sorted_checks(report))
        checks.push_back({{"id", c.name},
                          {"status", c.passed ? "pass" : "fail"},
                          {"witness", c.detail}});
    return {{"suite", report.suite},
            {"passed", report.all_passed()},
            {"total", report.checks.size()},
            {"failed", report.failed_count()},
            {"checks", checks}};
}

std::string report_plain(const Report& report) {
    std::ostringstream out;
    for (const CheckResult& c : sorted_checks(report)) {
        out << (c.passed ? "PASS" : "FAIL") << ' ' << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ')';
        out << '\n';
    }
    out << report.suite << ": " << (report.checks.size() - report.failed_count()) << '/'
        << report.checks.size() << " checks passed\n";
    return out.str();
}

std::string polynomial_plain(const UniPoly& p) {
    std::ostringstream out;
    out << p;
    return out.str();
}

namespace {

std::string latex_magnitude(const Rational& c) {
    Rational a = c.abs();
    if (a.is_integer()) return a.num().get_str();
    return "\\frac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
}

} // namespace

std::string polynomial_latex(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) out << '-';
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = c.abs() == Rational(1);
        if (!unit || k == 0) out << latex_magnitude(c);
        if (k > 0) {
            if (!unit) out << ' ';
            out << 'x';
            if (k > 1) out << "^{" << k << '}';
        }
    }
    return out.str();
}

} // namespace reiswich
