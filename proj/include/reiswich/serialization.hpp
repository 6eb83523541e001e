#ifndef REISWICH_SERIALIZATION_HPP
#define REISWICH_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "reiswich/multipoly.hpp"
#include "reiswich/orbit.hpp"
#include "reiswich/report.hpp"
#include "reiswich/roots.hpp"
#include "reiswich/unipoly.hpp"

namespace reiswich {

/// JSON array of coefficient strings, degree-ascending ("p/q" in lowest
/// terms). The zero polynomial is the empty array.
nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

/// JSON array of terms [coefficient_string, {variable: exponent, ...}],
/// in canonical monomial order.
nlohmann::json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const nlohmann::json& j);

nlohmann::json enclosure_to_json(const RootEnclosure& e, const std::string& midpoint_decimal);
RootEnclosure enclosure_from_json(const nlohmann::json& j);

nlohmann::json orbit_to_json(const OrbitVector& v);

/// Checks sorted by id so output is deterministic however they were produced.
nlohmann::json report_to_json(const Report& report);
std::string report_plain(const Report& report);

std::string polynomial_plain(const UniPoly& p);
/// Descending-power rendering with \frac for non-integer coefficients.
std::string polynomial_latex(const UniPoly& p);

} // namespace reiswich

#endif
