#ifndef REISWICH_RATIONAL_HPP
#define REISWICH_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace reiswich {

/// Arbitrary-precision rational scalar. Always stored in lowest terms with
/// positive denominator, so operator== is structural equality. Immutable in
/// spirit: every operation returns a fresh value.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                 // NOLINT: implicit on purpose
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q);

    /// Parses "p/q" or "p" (optional leading sign, decimal digits only).
    /// Throws parse_error on anything else, domain_error on q = 0.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational reciprocal() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q" in lowest terms, "p" alone when q = 1.
    std::string str() const;

private:
    mpq_class q_;  // canonical: lowest terms, positive denominator
};

Rational pow(const Rational& base, unsigned long e);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace reiswich

#endif
