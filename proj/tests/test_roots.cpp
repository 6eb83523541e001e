#include <doctest.h>

#include <vector>

#include "reiswich/core.hpp"
#include "reiswich/decimal.hpp"
#include "reiswich/errors.hpp"
#include "reiswich/roots.hpp"

using namespace reiswich;

namespace {

const char* const kRootOracle2Lo = "0.0813570179938485151903223091772";
const char* const kRootOracle2Hi = "0.585309648672818151476344357489";
const char* const kRootOracle25Min = "0.00093027943373748838629";

UniPoly linear(const Rational& root) { return UniPoly{-root, Rational(1)}; }

bool contains(const RootEnclosure& e, const Rational& v) {
    return e.lo < v && v <= e.hi;  // enclosures are half-open (lo, hi]
}

} // namespace

TEST_CASE("Sturm chain of a linear polynomial keeps the head unnormalized") {
    SturmChain chain(linear(Rational(1, 5)));
    REQUIRE(chain.elements().size() == 2);
    CHECK(chain.elements()[0] == UniPoly{Rational(-1, 5), Rational(1)});
    CHECK(chain.elements()[1] == UniPoly{Rational(1)});
    CHECK(chain.squarefree());
    CHECK(chain.count_total() == 1);
}

TEST_CASE("Sturm chain shape for a quadratic") {
    UniPoly p{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
    SturmChain chain(p);
    REQUIRE(chain.elements().size() == 3);
    CHECK(chain.elements()[0] == p);
    CHECK(chain.elements()[1] == UniPoly{Rational(0), Rational(2)});
    CHECK(chain.elements()[2] == UniPoly{Rational(1)});  // primitive positive constant
    CHECK(chain.count_total() == 2);
}

TEST_CASE("Sturm chain handles constants and rejects zero") {
    SturmChain constant(UniPoly{Rational(5)});
    CHECK(constant.elements().size() == 1);
    CHECK(constant.squarefree());
    CHECK(constant.count_total() == 0);
    CHECK_THROWS_AS(SturmChain(UniPoly{}), domain_error);
}

TEST_CASE("root counts respect half-open and open interval semantics") {
    UniPoly p{Rational(0), Rational(-1), Rational(1)};  // x(x-1)
    SturmChain chain(p);
    CHECK(chain.count_total() == 2);
    CHECK(chain.count_half_open(Rational(0), Rational(1)) == 1);   // only the root at 1
    CHECK(chain.count_open(Rational(0), Rational(1)) == 0);
    CHECK(chain.count_half_open(Rational(-1), Rational(0)) == 1);  // only the root at 0
    CHECK(chain.count_half_open(Rational(-2), Rational(-1)) == 0);
    CHECK(chain.count_le(Rational(0)) == 1);
    CHECK(chain.count_le(Rational(-1)) == 0);
    CHECK(chain.count_ge(Rational(1)) == 1);
    CHECK(chain.count_ge(Rational(2)) == 0);
    CHECK(count_roots(chain, Rational(-5), Rational(5)) == 2);
    CHECK_THROWS_AS(chain.count_half_open(Rational(1), Rational(0)), domain_error);
}

TEST_CASE("counts stay correct on repeated and complex roots") {
    UniPoly sq = linear(Rational(1, 2)) * linear(Rational(1, 2)) * linear(Rational(3));
    SturmChain chain(sq);
    CHECK(!chain.squarefree());
    CHECK(chain.count_total() == 2);  // distinct roots 1/2 and 3
    CHECK(chain.count_open(Rational(0), Rational(1)) == 1);

    UniPoly complex_pair{Rational(1), Rational(0), Rational(1)};  // x^2 + 1
    CHECK(SturmChain(complex_pair).count_total() == 0);
    CHECK(SturmChain(complex_pair * linear(Rational(1, 2))).count_total() == 1);
}

TEST_CASE("isolate_roots returns disjoint sorted enclosures in the open interval") {
    UniPoly p = linear(Rational(1, 4)) * linear(Rational(1, 2)) * linear(Rational(3, 4));
    std::vector<RootEnclosure> roots = isolate_roots(p, Rational(0), Rational(1));
    REQUIRE(roots.size() == 3);
    CHECK(contains(roots[0], Rational(1, 4)));
    CHECK(contains(roots[1], Rational(1, 2)));
    CHECK(contains(roots[2], Rational(3, 4)));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        CHECK(roots[i].hi <= roots[i + 1].lo);

    // endpoint roots are excluded by the open-interval contract
    UniPoly q = linear(Rational(0)) * linear(Rational(1)) * linear(Rational(1, 2));
    std::vector<RootEnclosure> inner = isolate_roots(q, Rational(0), Rational(1));
    REQUIRE(inner.size() == 1);
    CHECK(contains(inner[0], Rational(1, 2)));

    CHECK(isolate_roots(UniPoly{Rational(2)}, Rational(0), Rational(1)).empty());
    CHECK_THROWS_AS(isolate_roots(p, Rational(1), Rational(0)), domain_error);
}

TEST_CASE("isolate_roots rejects repeated roots") {
    UniPoly sq = linear(Rational(1, 2)) * linear(Rational(1, 2));
    CHECK_THROWS_AS(isolate_roots(sq, Rational(0), Rational(1)), not_squarefree_error);
}

TEST_CASE("refine shrinks enclosures and never widens them") {
    UniPoly p = linear(Rational(1, 5));
    RootEnclosure start{Rational(0), Rational(1)};
    RootEnclosure tight = refine(p, start, pow(Rational(1, 10), 30));
    CHECK(contains(tight, Rational(1, 5)));
    CHECK(tight.width() <= pow(Rational(1, 10), 30));
    CHECK(tight.lo >= start.lo);
    CHECK(tight.hi <= start.hi);

    RootEnclosure narrow{Rational(19, 100), Rational(21, 100)};
    RootEnclosure same = refine(p, narrow, Rational(1));
    CHECK(same.lo == narrow.lo);
    CHECK(same.hi == narrow.hi);

    CHECK_THROWS_AS(refine(p, RootEnclosure{Rational(1), Rational(0)}, Rational(1, 100)),
                    domain_error);
    CHECK_THROWS_AS(refine(p, start, Rational(0)), domain_error);
}

TEST_CASE("refine copes with an enclosure endpoint sitting on another root") {
    UniPoly p = linear(Rational(1, 4)) * linear(Rational(3, 4));
    RootEnclosure e{Rational(1, 4), Rational(1)};  // p(lo) = 0 forces the count fallback
    RootEnclosure tight = refine(p, e, Rational(1, 1000000));
    CHECK(contains(tight, Rational(3, 4)));
    CHECK(tight.width() <= Rational(1, 1000000));
    CHECK(tight.lo >= e.lo);
    CHECK(tight.hi <= e.hi);
}

TEST_CASE("family roots stay inside the open unit interval") {
    Rational width = pow(Rational(1, 10), 12);
    for (const Rational& tau : {Rational(-1, 2), Rational(1, 2)}) {
        ReiswichParam param{tau};
        CHECK(reiswich_roots(param, 0, width).empty());
        for (int n = 1; n <= 10; ++n) {
            std::vector<RootEnclosure> roots = reiswich_roots(param, n, width);
            REQUIRE(roots.size() == static_cast<std::size_t>(n));
            for (const RootEnclosure& e : roots) {
                CHECK(e.lo.sign() > 0);
                CHECK(e.hi < Rational(1));
                CHECK(e.width() <= width);
            }
            for (std::size_t i = 0; i + 1 < roots.size(); ++i)
                CHECK(roots[i].hi <= roots[i + 1].lo);
        }
    }
}

TEST_CASE("family polynomials are squarefree") {
    for (const Rational& tau : {Rational(-1, 2), Rational(1, 2)}) {
        ReiswichParam param{tau};
        for (int n = 1; n <= 12; ++n) {
            UniPoly p = reiswich_closed(param, n);
            CHECK(gcd(p, p.derivative()).degree() == 0);
        }
    }
}

TEST_CASE("roots of consecutive family members interlace") {
    Rational width = pow(Rational(1, 10), 30);
    for (const Rational& tau : {Rational(-1, 2), Rational(1, 2)}) {
        ReiswichParam param{tau};
        for (int n = 1; n <= 9; ++n) {
            std::vector<RootEnclosure> outer = reiswich_roots(param, n + 1, width);
            SturmChain inner_chain(reiswich_closed(param, n));
            // no root of R_n hides inside any enclosure of a root of R_{n+1}
            for (const RootEnclosure& e : outer)
                CHECK(inner_chain.count_half_open(e.lo, e.hi) == 0);
            // exactly one root of R_n between consecutive roots of R_{n+1}
            for (int i = 0; i < n; ++i) {
                std::size_t k = static_cast<std::size_t>(i);
                CHECK(inner_chain.count_half_open(outer[k].hi, outer[k + 1].lo) == 1);
            }
        }
    }
}

TEST_CASE("quadratic roots agree with the high-precision oracle") {
    ReiswichParam param{Rational(-1, 2)};
    std::vector<RootEnclosure> roots = reiswich_roots(param, 2, pow(Rational(1, 10), 32));
    REQUIRE(roots.size() == 2);
    Rational tol = pow(Rational(1, 10), 30);
    CHECK((roots[0].midpoint() - rational_from_decimal(kRootOracle2Lo)).abs() <= tol);
    CHECK((roots[1].midpoint() - rational_from_decimal(kRootOracle2Hi)).abs() <= tol);
}

TEST_CASE("linear member has its root exactly at 1/5") {
    ReiswichParam param{Rational(-1, 2)};
    UniPoly p = reiswich_closed(param, 1);
    CHECK(p.eval(Rational(1, 5)) == Rational(0));
    std::vector<RootEnclosure> roots = reiswich_roots(param, 1, pow(Rational(1, 10), 40));
    REQUIRE(roots.size() == 1);
    CHECK(contains(roots[0], Rational(1, 5)));
}

TEST_CASE("smallest root of the degree-25 member matches the frozen oracle") {
    ReiswichParam param{Rational(-1, 2)};
    std::vector<RootEnclosure> roots = reiswich_roots(param, 25, pow(Rational(1, 10), 22));
    REQUIRE(roots.size() == 25);
    Rational tol = pow(Rational(1, 10), 20);
    CHECK((roots[0].midpoint() - rational_from_decimal(kRootOracle25Min)).abs() <= tol);
}
