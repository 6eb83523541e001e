#include "reiswich/core.hpp"

#include <sstream>

#include "reiswich/errors.hpp"
#include "reiswich/factorials.hpp"

namespace reiswich {

ReiswichParam::ReiswichParam(Rational tau) : tau_(std::move(tau)) {
    if (tau_ <= Rational(-1))
        throw domain_error("tau must be greater than -1, got " + tau_.str());
}

Rational MomentFunctional::moment(int n) const {
    if (n < 0) throw domain_error("moment: negative index " + std::to_string(n));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    const Rational& tau = param_.tau();
    while (static_cast<int>(cache_.size()) <= n) {
        int k = static_cast<int>(cache_.size());
        cache_.push_back((tau + 2) * (tau + 1)
                         / ((Rational(k) + tau + 2) * (Rational(k) + tau + 1)));
    }
    return cache_[static_cast<std::size_t>(n)];
}

Rational MomentFunctional::apply(const UniPoly& p) const {
    Rational acc;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        acc += p.coeff(k) * moment(k);
    }
    return acc;
}

Rational MomentFunctional::inner_product(const UniPoly& p, const UniPoly& q) const {
    return apply(p * q);
}

UniPoly reiswich_closed(const ReiswichParam& param, int n) {
    if (n < 0) throw domain_error("reiswich_closed: negative degree " + std::to_string(n));
    const Rational& tau = param.tau();
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        Rational term = binomial(n, r)
                      * falling_factorial(Rational(n) + tau, r)
                      / falling_factorial(Rational(2 * n) + tau + 1, r);
        if (r % 2 != 0) term = -term;
        coeffs[static_cast<std::size_t>(n - r)] = term;
    }
    return UniPoly(std::move(coeffs));
}

std::pair<Rational, Rational> recursion_coefficients(const ReiswichParam& param, int n) {
    if (n < 0) throw domain_error("recursion_coefficients: negative index " + std::to_string(n));
    const Rational& tau = param.tau();
    Rational nn(n);
    Rational alpha = (Rational(2) * nn * nn + Rational(2) * (tau + 2) * nn + (tau + 1) * (tau + 1))
                   / ((Rational(2 * n) + tau + 3) * (Rational(2 * n) + tau + 1));
    if (n == 0) return {alpha, Rational(0)};
    Rational two_n_tau = Rational(2 * n) + tau;
    Rational beta = (nn + tau + 1) * (nn + tau) * (nn + 1) * nn
                  / ((two_n_tau + 2) * (two_n_tau + 1) * (two_n_tau + 1) * two_n_tau);
    return {alpha, beta};
}

UniPoly reiswich_recursive(const ReiswichParam& param, int n) {
    if (n < 0) throw domain_error("reiswich_recursive: negative degree " + std::to_string(n));
    UniPoly prev;                         // R_{-1} = 0
    UniPoly cur = UniPoly::constant(1);   // R_0
    for (int k = 0; k < n; ++k) {
        auto [alpha, beta] = recursion_coefficients(param, k);
        UniPoly x_minus_alpha{-alpha, Rational(1)};
        UniPoly next = x_minus_alpha * cur - beta * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly pm_original(int m) {
    if (m < 2) throw domain_error("pm_original: m must be at least 2, got " + std::to_string(m));
    int h = m / 2;  // degree is h - 1
    auto series_sum = [m](int from, int to) {
        long acc = 0;
        for (int mu = from; mu <= to; ++mu) acc += 1 + 2L * m - 4L * mu;
        return Rational(acc);
    };
    std::vector<Rational> coeffs(static_cast<std::size_t>(h));
    Rational product(1);
    for (int r = 0; r <= h - 1; ++r) {
        if (r > 0) product *= series_sum(r + 1, h) / series_sum(1, r);
        Rational term = product;
        if (r % 2 != 0) term = -term;
        coeffs[static_cast<std::size_t>(h - 1 - r)] = term;
    }
    return UniPoly(std::move(coeffs));
}

Rational norm_square_formula(const ReiswichParam& param, int n) {
    if (n < 0) throw domain_error("norm_square_formula: negative index " + std::to_string(n));
    const Rational& tau = param.tau();
    return Rational(factorial(n + 1)) * Rational(factorial(n))
         * falling_factorial(Rational(n) + tau + 1, n)
         * falling_factorial(Rational(n) + tau, n)
         / (falling_factorial(Rational(2 * n) + tau + 2, 2 * n)
            * falling_factorial(Rational(2 * n) + tau + 1, 2 * n));
}

Rational key_identity_value(const ReiswichParam& param, int n, int s) {
    if (n < 0) throw domain_error("key_identity_value: negative n " + std::to_string(n));
    if (s < 0) throw domain_error("key_identity_value: negative s " + std::to_string(s));
    const Rational& tau = param.tau();
    Rational acc;
    for (int r = 0; r <= n; ++r) {
        Rational shifted = Rational(n + s - r) + tau;
        Rational term = binomial(n, r)
                      * falling_factorial(Rational(n) + tau, r)
                      / falling_factorial(Rational(2 * n) + tau + 1, r)
                      / ((shifted + 2) * (shifted + 1));
        if (r % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

Report verify_orthogonality(const ReiswichParam& param, int max_n) {
    if (max_n < 0) throw domain_error("verify_orthogonality: negative max_n");
    Report report;
    report.suite = "orthogonality";
    MomentFunctional fn(param);
    std::vector<UniPoly> polys;
    polys.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) polys.push_back(reiswich_closed(param, n));

    std::string tau_str = param.tau().str();
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m < n; ++m) {
            Rational value = fn.inner_product(polys[static_cast<std::size_t>(n)],
                                              polys[static_cast<std::size_t>(m)]);
            std::ostringstream id;
            id << "orthogonality tau=" << tau_str << " m=" << m << " n=" << n;
            report.add(id.str(), value.is_zero(),
                       value.is_zero() ? "" : "expected 0, got " + value.str());
        }
        Rational actual = fn.inner_product(polys[static_cast<std::size_t>(n)],
                                           polys[static_cast<std::size_t>(n)]);
        Rational expected = norm_square_formula(param, n);
        std::ostringstream id;
        id << "orthogonality tau=" << tau_str << " norm n=" << n;
        report.add(id.str(), actual == expected,
                   actual == expected ? "value=" + actual.str()
                                      : "expected " + expected.str() + ", got " + actual.str());
    }
    return report;
}

} // namespace reiswich
