#ifndef REISWICH_ROOTS_HPP
#define REISWICH_ROOTS_HPP

#include <vector>

#include "reiswich/core.hpp"
#include "reiswich/rational.hpp"
#include "reiswich/unipoly.hpp"

namespace reiswich {

/// Rational interval certified to contain exactly one real root of the
/// polynomial it was produced for, with half-open semantics (lo, hi].
struct RootEnclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// Sturm chain over exact rationals: the polynomial, its derivative, then
/// negated remainders (content-normalized by a positive scalar) until the
/// remainder vanishes. Sign-variation differences count distinct real roots.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    const std::vector<UniPoly>& elements() const { return chain_; }
    const UniPoly& head() const { return chain_.front(); }

    /// True when gcd(p, p') is constant, i.e. the chain ends in a nonzero
    /// constant (or p itself is a nonzero constant).
    bool squarefree() const;

    /// Distinct real roots in (a, b]. Endpoint roots need no perturbation:
    /// signs are resolved infinitesimally to the right of each endpoint.
    int count_half_open(const Rational& a, const Rational& b) const;
    /// Distinct real roots in the open interval (a, b).
    int count_open(const Rational& a, const Rational& b) const;
    /// Distinct real roots in (-inf, x].
    int count_le(const Rational& x) const;
    /// Distinct real roots in [x, +inf).
    int count_ge(const Rational& x) const;
    /// All distinct real roots.
    int count_total() const;

private:
    int variations_right(const Rational& x) const;
    int variations_left(const Rational& x) const;
    int variations_pos_inf() const;
    int variations_neg_inf() const;

    std::vector<UniPoly> chain_;
};

SturmChain sturm_chain(const UniPoly& p);

/// Distinct real roots of the chain's polynomial in (a, b].
int count_roots(const SturmChain& chain, const Rational& a, const Rational& b);

/// Disjoint enclosures, one per distinct root of p in the open interval
/// (a, b), sorted by lo. Throws not_squarefree_error when gcd(p, p') is
/// nonconstant.
std::vector<RootEnclosure> isolate_roots(const UniPoly& p, const Rational& a,
                                         const Rational& b);

/// Shrinks an enclosure of a single simple root to width <= max_width by
/// exact bisection. Returns the input unchanged when it is already narrow
/// enough. Prefers endpoint-sign bisection, falling back to Sturm counts
/// while an endpoint value vanishes.
RootEnclosure refine(const UniPoly& p, const RootEnclosure& e, const Rational& max_width);

/// The n roots of the degree-n Reiswich polynomial, isolated in (0, 1) and
/// refined to width <= max_width with 0 < lo and hi < 1. Throws
/// theorem_violation if the count differs from n (never expected).
std::vector<RootEnclosure> reiswich_roots(const ReiswichParam& param, int n,
                                          const Rational& max_width);

} // namespace reiswich

#endif
