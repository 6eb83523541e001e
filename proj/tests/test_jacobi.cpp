#include <doctest.h>

#include "reiswich/core.hpp"
#include "reiswich/errors.hpp"
#include "reiswich/factorials.hpp"
#include "reiswich/jacobi.hpp"
#include "reiswich/suites.hpp"

using namespace reiswich;

TEST_CASE("Jacobi parameters must exceed -1") {
    CHECK_NOTHROW(JacobiParams(Rational(1), Rational(-1, 2)));
    CHECK_THROWS_AS(JacobiParams(Rational(-1), Rational(0)), domain_error);
    CHECK_THROWS_AS(JacobiParams(Rational(0), Rational(-3, 2)), domain_error);
}

TEST_CASE("Jacobi low-degree values and normalization at t = 1") {
    JacobiParams p10{Rational(1), Rational(0)};
    CHECK(jacobi(p10, 0) == UniPoly{Rational(1)});
    CHECK(jacobi(p10, 1) == UniPoly{Rational(1, 2), Rational(3, 2)});  // (3t+1)/2

    for (const Rational& beta : {Rational(-1, 2), Rational(1, 2), Rational(0), Rational(1)}) {
        JacobiParams params{Rational(1), beta};
        for (int n = 0; n <= 8; ++n) {
            // P_n(1) = C(n+alpha, n), which is n+1 for alpha = 1
            CHECK(jacobi(params, n).eval(Rational(1)) == Rational(n + 1));
            CHECK(jacobi(params, n).degree() == n);
        }
    }
    CHECK_THROWS_AS(jacobi(p10, -1), domain_error);
}

TEST_CASE("Jacobi swap symmetry P(alpha,beta)(-t) = (-1)^n P(beta,alpha)(t)") {
    JacobiParams ab{Rational(1), Rational(1, 2)};
    JacobiParams ba{Rational(1, 2), Rational(1)};
    for (int n = 0; n <= 6; ++n) {
        UniPoly reflected = jacobi(ab, n).compose_affine(Rational(-1), Rational(0));
        UniPoly expected = jacobi(ba, n);
        if (n % 2 == 1) expected = -expected;
        CHECK(reflected == expected);
    }
}

TEST_CASE("Jacobi satisfies the classical three-term recurrence") {
    // 2n(n+a+b)(2n+a+b-2) P_n
    //   = (2n+a+b-1)[(2n+a+b)(2n+a+b-2) t + a^2-b^2] P_{n-1}
    //     - 2(n+a-1)(n+b-1)(2n+a+b) P_{n-2}
    using R = Rational;
    const std::pair<R, R> param_pairs[] = {{R(1), R(-1, 2)},
                                           {R(1), R(1, 2)},
                                           {R(1), R(0)},
                                           {R(3, 2), R(7, 3)}};
    for (const auto& [a, b] : param_pairs) {
        JacobiParams params{a, b};
        for (int n = 2; n <= 8; ++n) {
            R nn(n);
            R s = R(2) * nn + a + b;
            UniPoly lhs = (R(2) * nn * (nn + a + b) * (s - R(2))) * jacobi(params, n);
            UniPoly t_factor{a * a - b * b, s * (s - R(2))};
            UniPoly rhs = (s - R(1)) * (t_factor * jacobi(params, n - 1))
                - (R(2) * (nn + a - R(1)) * (nn + b - R(1)) * s) * jacobi(params, n - 2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("shifted Jacobi low-degree values") {
    CHECK(jacobi_shifted(Rational(0), 1) == UniPoly{Rational(-1), Rational(3)});  // 3x - 1
    CHECK(jacobi_shifted(Rational(0), 0) == UniPoly{Rational(1)});
    // P^(1,-1/2)_2(2x-1) has leading coefficient 63/8
    CHECK(jacobi_shifted(Rational(-1, 2), 2)
          == UniPoly{Rational(3, 8), Rational(-21, 4), Rational(63, 8)});
}

TEST_CASE("proportionality constant and exact correspondence") {
    CHECK(proportionality_constant(Rational(0), 1) == Rational(1, 3));
    CHECK(proportionality_constant(Rational(1, 2), 2) == Rational(8, 99));
    for (const Rational& tau : default_tau_set())
        CHECK(proportionality_constant(tau, 0) == Rational(1));

    for (const Rational& tau : default_tau_set()) {
        ReiswichParam param{tau};
        for (int n = 0; n <= 10; ++n) {
            Rational c = proportionality_constant(tau, n);
            // formula route
            CHECK(c == Rational(factorial(n), mpz_class(1))
                           / falling_factorial(Rational(2 * n) + tau + Rational(1), n));
            // exact proportionality of the polynomials themselves
            CHECK(reiswich_closed(param, n) == c * jacobi_shifted(tau, n));
        }
    }
    CHECK_THROWS_AS(proportionality_constant(Rational(0), -1), domain_error);
}
