#include "reiswich/rational.hpp"

#include <cctype>
#include <ostream>

#include "reiswich/errors.hpp"

namespace reiswich {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
}

} // namespace

Rational::Rational(long num, long den) {
    require_nonzero_den(mpz_class(den));
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    require_nonzero_den(den);
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    require_nonzero_den(q_.get_den());
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '+' || num_digits[0] == '-'))
        num_digits.erase(0, 1);
    if (!digits_only(num_digits) || !digits_only(den))
        throw parse_error("expected rational \"p/q\" or \"p\", got \"" + text + "\"");

    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    // base 10 explicitly: the default base 0 would read leading zeros as octal
    mpz_class d(den, 10);
    if (d == 0) throw domain_error("rational with zero denominator: \"" + text + "\"");
    return Rational(mpz_class(num, 10), d);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.is_zero()) throw domain_error("rational division by zero");
    q_ /= r.q_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw domain_error("reciprocal of zero");
    return Rational(den(), num());
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational pow(const Rational& base, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(n, d);  // num/den coprime, so powers are too
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace reiswich
