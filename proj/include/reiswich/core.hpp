#ifndef REISWICH_CORE_HPP
#define REISWICH_CORE_HPP

#include <mutex>
#include <utility>
#include <vector>

#include "reiswich/rational.hpp"
#include "reiswich/report.hpp"
#include "reiswich/unipoly.hpp"

namespace reiswich {

/// Validated parameter tau > -1 for the Reiswich family.
class ReiswichParam {
public:
    explicit ReiswichParam(Rational tau);
    const Rational& tau() const { return tau_; }

private:
    Rational tau_;
};

/// Linear functional L with L(x^n) = mu_n = (tau+2)(tau+1)/((n+tau+2)(n+tau+1)),
/// the moment sequence of the measure (tau+2)(tau+1)(1-x)x^tau dx on [0,1].
/// Moments are memoized; the cache is safe under concurrent use.
class MomentFunctional {
public:
    explicit MomentFunctional(ReiswichParam param) : param_(std::move(param)) {}

    const Rational& tau() const { return param_.tau(); }

    /// mu_n, exact. mu_0 = 1 (probability measure).
    Rational moment(int n) const;

    /// L applied to a polynomial: sum of c_k * mu_k.
    Rational apply(const UniPoly& p) const;

    /// <p, q> = L(p*q).
    Rational inner_product(const UniPoly& p, const UniPoly& q) const;

private:
    ReiswichParam param_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<Rational> cache_;
};

/// Monic degree-n polynomial
///   sum_{r=0}^{n} (-1)^r C(n,r) fact[n+tau,r]/fact[2n+tau+1,r] x^{n-r}.
UniPoly reiswich_closed(const ReiswichParam& param, int n);

/// (alpha_n, beta_n) of the three-term recursion
/// R_{n+1} = (x - alpha_n) R_n - beta_n R_{n-1}.
/// beta_0 is literally 0; its general denominator is never evaluated at n = 0.
std::pair<Rational, Rational> recursion_coefficients(const ReiswichParam& param, int n);

/// R_n built by iterating the recursion from R_0 = 1 (R_{-1} taken as 0).
UniPoly reiswich_recursive(const ReiswichParam& param, int n);

/// The degree floor(m/2)-1 polynomial built from the product of
/// arithmetic-series ratios
///   sum_r (-1)^r prod_{d=1}^{r} [ sum_{mu=d+1}^{floor(m/2)} (1+2m-4mu) ]
///                             / [ sum_{mu=1}^{d}            (1+2m-4mu) ]
///   x^{floor(m/2)-1-r},
/// with the sums evaluated literally. Requires m >= 2.
UniPoly pm_original(int m);

/// Closed form for <R_n, R_n>:
/// (n+1)! n! fact[n+tau+1,n] fact[n+tau,n] / (fact[2n+tau+2,2n] fact[2n+tau+1,2n]).
Rational norm_square_formula(const ReiswichParam& param, int n);

/// sum_{r=0}^{n} (-1)^r C(n,r) fact[n+tau,r]/fact[2n+tau+1,r]
///               / ((n+tau+s-r+2)(n+tau+s-r+1)),
/// exactly zero whenever s < n. Requires n >= 0, s >= 0.
Rational key_identity_value(const ReiswichParam& param, int n, int s);

/// Checks <R_m, R_n> = 0 for all m < n <= max_n and <R_n, R_n> equal to
/// norm_square_formula, all with exact equality. Violations become failed
/// report entries, never exceptions.
Report verify_orthogonality(const ReiswichParam& param, int max_n);

} // namespace reiswich

#endif
