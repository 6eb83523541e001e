#include "reiswich/factorials.hpp"

#include "reiswich/errors.hpp"

namespace reiswich {

Rational falling_factorial(const Rational& z, long r) {
    if (r < 0) return Rational(0);
    Rational acc(1);
    for (long k = 0; k < r; ++k) acc = acc * (z - Rational(k));
    return acc;
}

MultiPoly falling_factorial_sym(const MultiPoly& base, long r) {
    if (r < 0) throw domain_error("falling_factorial_sym: negative length " + std::to_string(r));
    MultiPoly acc = MultiPoly::constant(1);
    for (long k = 0; k < r; ++k) acc = acc * (base - MultiPoly::constant(k));
    return acc;
}

mpz_class factorial(long n) {
    if (n < 0) throw domain_error("factorial: negative argument " + std::to_string(n));
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational binomial(long n, long r) {
    if (n < 0) throw domain_error("binomial: negative upper index " + std::to_string(n));
    if (r < 0 || r > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return Rational(std::move(out));
}

Rational generalized_binomial(const Rational& z, long r) {
    if (r < 0) throw domain_error("generalized_binomial: negative lower index " + std::to_string(r));
    return falling_factorial(z, r) / Rational(factorial(r));
}

} // namespace reiswich
