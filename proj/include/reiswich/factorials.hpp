#ifndef REISWICH_FACTORIALS_HPP
#define REISWICH_FACTORIALS_HPP

#include "reiswich/multipoly.hpp"
#include "reiswich/rational.hpp"

namespace reiswich {

/// z(z-1)...(z-r+1); 1 for r = 0; 0 for r < 0. Total on all integer r.
Rational falling_factorial(const Rational& z, long r);

/// Expanded base*(base-1)*...*(base-r+1); constant 1 for r = 0.
/// Rejects r < 0 so a silently symbolic zero can never mask an index bug.
MultiPoly falling_factorial_sym(const MultiPoly& base, long r);

mpz_class factorial(long n);

/// Standard binomial coefficient; 0 outside 0 <= r <= n. Rejects n < 0.
Rational binomial(long n, long r);

/// falling_factorial(z, r) / r!; rejects r < 0.
Rational generalized_binomial(const Rational& z, long r);

} // namespace reiswich

#endif
