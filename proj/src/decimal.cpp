#include "reiswich/decimal.hpp"

#include <cctype>

#include "reiswich/errors.hpp"

namespace reiswich {

namespace {

mpz_class pow10(int e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return out;
}

} // namespace

std::string decimal_string(const Rational& x, int digits) {
    if (digits < 0) throw domain_error("decimal_string: negative digit count");
    mpz_class scale = pow10(digits);
    mpz_class num = x.num() * scale;
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
    mpz_class twice_rem = 2 * rem;
    int c = cmp(twice_rem, x.den());
    if (c > 0 || (c == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;

    bool negative = quot < 0;
    mpz_class magnitude = abs(quot);
    mpz_class int_part = magnitude / scale;
    std::string out = negative ? "-" : "";
    out += int_part.get_str();
    if (digits > 0) {
        std::string frac = mpz_class(magnitude % scale).get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

Rational rational_from_decimal(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string int_digits, frac_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        int_digits += text[pos++];
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            frac_digits += text[pos++];
    }
    if (pos != text.size() || (int_digits.empty() && frac_digits.empty()))
        throw parse_error("not a decimal literal: \"" + text + "\"");
    // base 10 explicitly: the default base 0 would read leading zeros as octal
    mpz_class mantissa(int_digits.empty() ? "0" : int_digits, 10);
    mpz_class scale = pow10(static_cast<int>(frac_digits.size()));
    mantissa *= scale;
    if (!frac_digits.empty()) mantissa += mpz_class(frac_digits, 10);
    if (negative) mantissa = -mantissa;
    return Rational(mantissa, scale);
}

} // namespace reiswich
