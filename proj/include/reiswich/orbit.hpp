#ifndef REISWICH_ORBIT_HPP
#define REISWICH_ORBIT_HPP

#include <string>
#include <vector>

#include "reiswich/rational.hpp"
#include "reiswich/roots.hpp"

namespace reiswich {

/// Requested output precision for orbit coefficients.
struct PrecisionConfig {
    int decimal_digits = 30;
};

/// The X_min coordinate vector for Dynkin type D_m in the basis E_1..E_m.
/// coefficients[k] is the decimal rendering (radians) of the coefficient of
/// E_{k+1}; every printed digit is certified by interval evaluation.
struct OrbitVector {
    int m = 0;
    Rational tau;
    int n = 0;                          ///< floor(m/2) - 1, number of roots used
    int digits = 0;                     ///< decimal digits the coefficients carry
    std::vector<RootEnclosure> xi;      ///< 0 < xi_1 < ... < xi_n < 1
    std::vector<std::string> coefficients;
    int middle_zero_index = -1;         ///< 1-based middle position for odd m, else -1
};

/// -1/2 for even m, +1/2 for odd m. Requires m >= 2.
Rational tau_for_m(int m);

/// arccos(sqrt(xi))/2 for the root enclosed by e, as a decimal string whose
/// digits are all certified: the strictly decreasing map is applied to both
/// endpoints with directed rounding and the bounds must print identically.
/// Throws certification_error when the enclosure is too wide for that.
std::string arccos_sqrt_half(const RootEnclosure& e, int digits);

/// Assembles X_min for D_m: pi/4 on E_1 and E_m; for r = 1..n the value
/// pi/2 - arccos(sqrt(xi_r))/2 on E_{r+1} and arccos(sqrt(xi_r))/2 on
/// E_{m-r}; all remaining coefficients exactly 0. Requires m >= 2.
OrbitVector minimal_orbit_vector(int m, const PrecisionConfig& cfg);

} // namespace reiswich

#endif
