#ifndef REISWICH_DECIMAL_HPP
#define REISWICH_DECIMAL_HPP

#include <string>

#include "reiswich/rational.hpp"

namespace reiswich {

/// Exact decimal rendering of a rational with `digits` fractional digits,
/// rounding half to even. No exponent notation; digits = 0 drops the point.
std::string decimal_string(const Rational& x, int digits);

/// Exact rational value of a plain decimal literal such as "-0.5853" or "12".
Rational rational_from_decimal(const std::string& text);

} // namespace reiswich

#endif
