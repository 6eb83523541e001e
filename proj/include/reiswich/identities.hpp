#ifndef REISWICH_IDENTITIES_HPP
#define REISWICH_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "reiswich/core.hpp"
#include "reiswich/multipoly.hpp"
#include "reiswich/report.hpp"

namespace reiswich {

/// Outcome of one symbolic or exact-coefficient identity check.
struct IdentityCheckResult {
    std::string identity_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    MultiPoly difference;  ///< LHS - RHS for symbolic checks; zero when passed
    bool passed = false;
    std::string detail;    ///< witness on failure, empty otherwise

    CheckResult to_check() const;
};

/// sum_{r=0}^{n} (-1)^r C(n,r) fact_sym[x-r,u] fact_sym[y-r,v], expanded in Z[x,y].
MultiPoly lemma_ci_sum(int n, int u, int v);

/// Asserts lemma_ci_sum(n,u,v) equals the constant n! when u+v = n and 0 when
/// u+v < n. Rejects u+v > n (outside the identity's hypothesis).
IdentityCheckResult lemma_ci_check(int n, int u, int v);

/// The degree-five identity in Z[n,tau,r] used to prove the three-term
/// recursion, loaded from a versioned JSON transcription: each side is a sum
/// of lines, each line a product of factors, each factor a MultiPoly.
class Degree5Identity {
public:
    /// Parses the transcription file. Throws parse_error on malformed data.
    static Degree5Identity load(const std::string& json_path);
    /// Loads the copy shipped in the repository's data directory.
    static Degree5Identity load_default();

    const std::vector<std::string>& variables() const { return variables_; }
    MultiPoly expand_lhs() const;
    MultiPoly expand_rhs() const;

    /// Canonical expansion of LHS - RHS; passes iff it is the zero polynomial.
    IdentityCheckResult check() const;

    /// Both sides evaluated at integer/rational bindings of (n, tau, r).
    std::pair<Rational, Rational> eval_sides(const Rational& n, const Rational& tau,
                                             const Rational& r) const;

private:
    std::vector<std::string> variables_;
    std::vector<std::vector<MultiPoly>> lhs_lines_;
    std::vector<std::vector<MultiPoly>> rhs_lines_;
};

/// The scaling factor
///   C = (-1)^r r (2n+tau+1) fact[2n+tau+3,r+2] / (C(n,r-1) fact[n+tau,r-1])
/// that clears denominators of the x^{n+1-r} coefficients. Requires 1 <= r <= n.
Rational lucky_factor(const ReiswichParam& param, int n, int r);

/// Verifies the four closed forms for C-scaled coefficients of R_{n+1}, xR_n,
/// R_n, R_{n-1} at x^{n+1-r}, with coefficients taken from reiswich_closed.
/// Requires n >= 1 and 1 <= r <= n.
IdentityCheckResult scaled_coefficient_check(const ReiswichParam& param, int n, int r);

} // namespace reiswich

#endif
