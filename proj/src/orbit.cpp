#include "reiswich/orbit.hpp"

#include <mpfr.h>

#include "reiswich/errors.hpp"

namespace reiswich {

namespace {

mpfr_prec_t prec_for(int digits) {
    // ~3.33 bits per decimal digit plus margin for the guard digits
    return static_cast<mpfr_prec_t>((digits + 25) * 10 / 3) + 16;
}

std::string render(mpfr_srcptr value, int digits) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*RNf", digits, value);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

/// Fills [theta_lo, theta_hi] enclosing arccos(sqrt(xi))/2 for xi in e,
/// using directed rounding through the strictly decreasing map.
void theta_bounds(const RootEnclosure& e, mpfr_ptr theta_lo, mpfr_ptr theta_hi) {
    mpfr_t x;
    mpfr_init2(x, mpfr_get_prec(theta_lo));

    mpfr_set_q(x, e.lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(theta_hi, x, MPFR_RNDD);
    mpfr_acos(theta_hi, theta_hi, MPFR_RNDU);
    mpfr_div_ui(theta_hi, theta_hi, 2, MPFR_RNDU);

    mpfr_set_q(x, e.hi.raw().get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(theta_lo, x, MPFR_RNDU);
    mpfr_acos(theta_lo, theta_lo, MPFR_RNDD);
    mpfr_div_ui(theta_lo, theta_lo, 2, MPFR_RNDD);

    mpfr_clear(x);
}

std::string certified_pi_over_4(int digits) {
    mpfr_prec_t base = prec_for(digits);
    for (mpfr_prec_t prec = base; prec <= base * 64; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(lo, MPFR_RNDD);
        mpfr_div_ui(lo, lo, 4, MPFR_RNDD);
        mpfr_const_pi(hi, MPFR_RNDU);
        mpfr_div_ui(hi, hi, 4, MPFR_RNDU);
        std::string a = render(lo, digits);
        std::string b = render(hi, digits);
        mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (a == b) return a;
    }
    // pi/4 never falls on a decimal rounding boundary, so widening the
    // working precision must eventually certify.
    throw theorem_violation("pi/4 certification did not converge");
}

struct CertifiedPair {
    std::string theta;       // arccos(sqrt(xi))/2
    std::string complement;  // pi/2 - theta
};

/// Certifies both coefficients derived from one root, refining the enclosure
/// and raising precision until the directed bounds print identically. The
/// two targets are irrational (never on a rounding boundary), so this
/// terminates.
CertifiedPair certify_root_coeffs(const UniPoly& p, RootEnclosure& e, int digits) {
    Rational width = e.width();
    for (int attempt = 0; attempt < 64; ++attempt) {
        mpfr_prec_t prec = prec_for(digits) + attempt * 64;
        mpfr_t theta_lo, theta_hi, comp_lo, comp_hi, half_pi;
        mpfr_inits2(prec, theta_lo, theta_hi, comp_lo, comp_hi, half_pi,
                    static_cast<mpfr_ptr>(nullptr));
        theta_bounds(e, theta_lo, theta_hi);

        mpfr_const_pi(half_pi, MPFR_RNDD);
        mpfr_div_ui(half_pi, half_pi, 2, MPFR_RNDD);
        mpfr_sub(comp_lo, half_pi, theta_hi, MPFR_RNDD);
        mpfr_const_pi(half_pi, MPFR_RNDU);
        mpfr_div_ui(half_pi, half_pi, 2, MPFR_RNDU);
        mpfr_sub(comp_hi, half_pi, theta_lo, MPFR_RNDU);

        std::string theta_a = render(theta_lo, digits);
        std::string theta_b = render(theta_hi, digits);
        std::string comp_a = render(comp_lo, digits);
        std::string comp_b = render(comp_hi, digits);
        mpfr_clears(theta_lo, theta_hi, comp_lo, comp_hi, half_pi,
                    static_cast<mpfr_ptr>(nullptr));
        if (theta_a == theta_b && comp_a == comp_b) return {theta_a, comp_a};

        width /= Rational(100000);
        e = refine(p, e, width);
    }
    throw theorem_violation("orbit coefficient certification did not converge");
}

} // namespace

Rational tau_for_m(int m) {
    if (m < 2) throw domain_error("tau_for_m: m must be at least 2, got " + std::to_string(m));
    return m % 2 == 0 ? Rational(-1, 2) : Rational(1, 2);
}

std::string arccos_sqrt_half(const RootEnclosure& e, int digits) {
    if (digits < 1) throw domain_error("arccos_sqrt_half: digits must be at least 1");
    if (e.lo >= e.hi) throw domain_error("arccos_sqrt_half: empty enclosure");
    if (e.lo.sign() < 0 || e.hi > Rational(1))
        throw domain_error("arccos_sqrt_half: enclosure must lie within [0,1]");
    mpfr_t theta_lo, theta_hi;
    mpfr_inits2(prec_for(digits), theta_lo, theta_hi, static_cast<mpfr_ptr>(nullptr));
    theta_bounds(e, theta_lo, theta_hi);
    std::string a = render(theta_lo, digits);
    std::string b = render(theta_hi, digits);
    mpfr_clears(theta_lo, theta_hi, static_cast<mpfr_ptr>(nullptr));
    if (a != b)
        throw certification_error("arccos_sqrt_half: enclosure too wide to certify "
                                  + std::to_string(digits) + " digits");
    return a;
}

OrbitVector minimal_orbit_vector(int m, const PrecisionConfig& cfg) {
    if (m < 2) throw domain_error("minimal_orbit_vector: m must be at least 2, got "
                                  + std::to_string(m));
    if (cfg.decimal_digits < 1)
        throw domain_error("minimal_orbit_vector: decimal_digits must be at least 1");

    OrbitVector out;
    out.m = m;
    out.tau = tau_for_m(m);
    out.n = m / 2 - 1;
    out.digits = cfg.decimal_digits;
    if (m % 2 != 0) out.middle_zero_index = (m + 1) / 2;

    int digits = cfg.decimal_digits;
    std::string quarter_pi = certified_pi_over_4(digits);
    out.coefficients.assign(static_cast<std::size_t>(m), "0");
    out.coefficients.front() = quarter_pi;
    out.coefficients.back() = quarter_pi;
    if (out.n == 0) return out;

    ReiswichParam param(out.tau);
    UniPoly p = reiswich_closed(param, out.n);
    out.xi = reiswich_roots(param, out.n, pow(Rational(1, 10),
                                              static_cast<unsigned long>(digits) + 15));
    for (int r = 1; r <= out.n; ++r) {
        CertifiedPair pair = certify_root_coeffs(p, out.xi[static_cast<std::size_t>(r - 1)],
                                                 digits);
        out.coefficients[static_cast<std::size_t>(r)] = pair.complement;         // E_{r+1}
        out.coefficients[static_cast<std::size_t>(m - r - 1)] = pair.theta;      // E_{m-r}
    }
    return out;
}

} // namespace reiswich
