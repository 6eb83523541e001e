#include "reiswich/jacobi.hpp"

#include "reiswich/core.hpp"
#include "reiswich/errors.hpp"
#include "reiswich/factorials.hpp"

namespace reiswich {

JacobiParams::JacobiParams(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ <= Rational(-1))
        throw domain_error("jacobi: alpha must be greater than -1, got " + alpha_.str());
    if (beta_ <= Rational(-1))
        throw domain_error("jacobi: beta must be greater than -1, got " + beta_.str());
}

UniPoly jacobi(const JacobiParams& params, int n) {
    if (n < 0) throw domain_error("jacobi: negative degree " + std::to_string(n));
    UniPoly t_minus{Rational(-1, 2), Rational(1, 2)};  // (t-1)/2
    UniPoly t_plus{Rational(1, 2), Rational(1, 2)};    // (t+1)/2

    std::vector<UniPoly> minus_pow{UniPoly::constant(1)};
    std::vector<UniPoly> plus_pow{UniPoly::constant(1)};
    for (int k = 1; k <= n; ++k) {
        minus_pow.push_back(minus_pow.back() * t_minus);
        plus_pow.push_back(plus_pow.back() * t_plus);
    }

    UniPoly acc;
    for (int s = 0; s <= n; ++s) {
        Rational c = generalized_binomial(Rational(n) + params.alpha(), n - s)
                   * generalized_binomial(Rational(n) + params.beta(), s);
        acc = acc + c * (minus_pow[static_cast<std::size_t>(s)]
                         * plus_pow[static_cast<std::size_t>(n - s)]);
    }
    return acc;
}

UniPoly jacobi_shifted(const Rational& tau, int n) {
    JacobiParams params(Rational(1), tau);
    return jacobi(params, n).compose_affine(Rational(2), Rational(-1));
}

Rational proportionality_constant(const Rational& tau, int n) {
    if (n < 0) throw domain_error("proportionality_constant: negative degree");
    UniPoly shifted = jacobi_shifted(tau, n);
    Rational from_formula = Rational(factorial(n))
                          / falling_factorial(Rational(2 * n) + tau + 1, n);
    Rational from_leading = shifted.leading().reciprocal();
    if (from_formula != from_leading)
        throw theorem_violation("proportionality constant routes disagree at tau="
                                + tau.str() + " n=" + std::to_string(n) + ": formula "
                                + from_formula.str() + ", leading "
                                + from_leading.str());
    UniPoly reiswich = reiswich_closed(ReiswichParam(tau), n);
    if (!(reiswich - from_formula * shifted).is_zero())
        throw theorem_violation("Reiswich and shifted Jacobi polynomials are not "
                                "proportional at tau=" + tau.str() + " n="
                                + std::to_string(n));
    return from_formula;
}

} // namespace reiswich
