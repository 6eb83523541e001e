#ifndef REISWICH_UNIPOLY_HPP
#define REISWICH_UNIPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "reiswich/rational.hpp"

namespace reiswich {

/// Dense univariate polynomial over Rational, coefficients indexed by degree
/// with trailing zeros trimmed. The zero polynomial is the empty coefficient
/// vector and reports degree -1. Exact arithmetic throughout.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> ascending_coeffs);
    UniPoly(std::initializer_list<Rational> ascending_coeffs);

    static UniPoly constant(const Rational& c);
    /// c * x^k
    static UniPoly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && leading() == Rational(1); }

    /// Coefficient of x^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    UniPoly derivative() const;
    /// p(a*x + b), exact affine substitution.
    UniPoly compose_affine(const Rational& a, const Rational& b) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: returns {quotient, remainder}, deg r < deg d.
    /// Throws domain_error when d is zero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& d);

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k
};

/// Monic gcd (1 for coprime inputs, 0 only for gcd(0,0)).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Scales by a positive rational so coefficients become coprime integers;
/// leading sign is preserved. Zero stays zero.
UniPoly make_primitive(const UniPoly& p);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

} // namespace reiswich

#endif
