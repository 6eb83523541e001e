#ifndef REISWICH_JACOBI_HPP
#define REISWICH_JACOBI_HPP

#include "reiswich/rational.hpp"
#include "reiswich/unipoly.hpp"

namespace reiswich {

/// Jacobi parameter pair with alpha > -1 and beta > -1.
class JacobiParams {
public:
    JacobiParams(Rational alpha, Rational beta);
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

private:
    Rational alpha_;
    Rational beta_;
};

/// Classical Jacobi polynomial P^(alpha,beta)_n(t) in the normalization
/// P^(alpha,beta)_n(1) = generalized_binomial(n+alpha, n), built from the
/// explicit sum
///   sum_s C(n+alpha, n-s) C(n+beta, s) ((t-1)/2)^s ((t+1)/2)^(n-s).
UniPoly jacobi(const JacobiParams& params, int n);

/// P^(1,tau)_n(2x-1) as a polynomial in x.
UniPoly jacobi_shifted(const Rational& tau, int n);

/// The unique c_n with R^tau_n(x) = c_n P^(1,tau)_n(2x-1), computed two ways:
/// as the reciprocal of jacobi_shifted's leading coefficient and as
/// n!/fact[2n+tau+1,n]. Throws theorem_violation if the routes disagree or
/// the polynomials are not exactly proportional.
Rational proportionality_constant(const Rational& tau, int n);

} // namespace reiswich

#endif
