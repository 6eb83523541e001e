#ifndef REISWICH_MULTIPOLY_HPP
#define REISWICH_MULTIPOLY_HPP

#include <iosfwd>
#include <map>
#include <string>

#include <gmpxx.h>

#include "reiswich/rational.hpp"

namespace reiswich {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over named indeterminates. Terms live in an ordered map
/// keyed by exponent vector (itself an ordered name->exponent map with no
/// zero entries), so equality is structural and printing is canonical.
class MultiPoly {
public:
    using Monomial = std::map<std::string, unsigned>;
    using TermMap = std::map<Monomial, mpz_class>;

    MultiPoly() = default;

    static MultiPoly constant(const mpz_class& c);
    static MultiPoly constant(long c) { return constant(mpz_class(c)); }
    static MultiPoly variable(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const mpz_class& s, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    /// Evaluates at a full assignment of the variables that occur.
    /// Throws domain_error when one is missing.
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const mpz_class& c);
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace reiswich

#endif
