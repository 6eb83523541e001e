#include "reiswich/roots.hpp"

#include <algorithm>
#include <memory>

#include "reiswich/errors.hpp"

namespace reiswich {

namespace {

/// Sign of q infinitesimally to the right (or left) of x: the sign of the
/// first nonvanishing derivative at x, flipped on the left for odd orders.
int sign_beside(const UniPoly& q, const Rational& x, bool from_right) {
    UniPoly cur = q;
    for (int k = 0; !cur.is_zero(); ++k, cur = cur.derivative()) {
        Rational value = cur.eval(x);
        if (value.is_zero()) continue;
        int s = value.sign();
        if (!from_right && k % 2 != 0) s = -s;
        return s;
    }
    return 0;
}

int sign_at_pos_inf(const UniPoly& q) { return q.is_zero() ? 0 : q.leading().sign(); }

int sign_at_neg_inf(const UniPoly& q) {
    if (q.is_zero()) return 0;
    int s = q.leading().sign();
    return q.degree() % 2 != 0 ? -s : s;
}

template <typename SignOf>
int count_variations(const std::vector<UniPoly>& chain, SignOf sign_of) {
    int variations = 0;
    int prev = 0;
    for (const UniPoly& q : chain) {
        int s = sign_of(q);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("sturm_chain: zero polynomial");
    chain_.push_back(p);
    UniPoly deriv = p.derivative();
    if (!deriv.is_zero()) chain_.push_back(deriv);
    while (chain_.back().degree() > 0) {
        UniPoly rem = UniPoly::divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (rem.is_zero()) break;
        chain_.push_back(make_primitive(-rem));
    }
}

bool SturmChain::squarefree() const { return chain_.back().degree() <= 0; }

int SturmChain::variations_right(const Rational& x) const {
    return count_variations(chain_, [&](const UniPoly& q) { return sign_beside(q, x, true); });
}

int SturmChain::variations_left(const Rational& x) const {
    return count_variations(chain_, [&](const UniPoly& q) { return sign_beside(q, x, false); });
}

int SturmChain::variations_pos_inf() const {
    return count_variations(chain_, sign_at_pos_inf);
}

int SturmChain::variations_neg_inf() const {
    return count_variations(chain_, sign_at_neg_inf);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
    if (a > b) throw domain_error("count_half_open: interval endpoints out of order");
    if (a == b) return 0;
    return variations_right(a) - variations_right(b);
}

int SturmChain::count_open(const Rational& a, const Rational& b) const {
    if (a > b) throw domain_error("count_open: interval endpoints out of order");
    if (a == b) return 0;
    return variations_right(a) - variations_left(b);
}

int SturmChain::count_le(const Rational& x) const {
    return variations_neg_inf() - variations_right(x);
}

int SturmChain::count_ge(const Rational& x) const {
    return variations_left(x) - variations_pos_inf();
}

int SturmChain::count_total() const {
    return variations_neg_inf() - variations_pos_inf();
}

SturmChain sturm_chain(const UniPoly& p) { return SturmChain(p); }

int count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
    return chain.count_half_open(a, b);
}

namespace {

/// Largest delta from a halving sequence such that (point - delta, point]
/// contains only the root at point and point - delta is not itself a root.
Rational shrink_below(const SturmChain& chain, const UniPoly& p, const Rational& lo,
                      const Rational& point) {
    Rational delta = (point - lo) / 2;
    while (chain.count_half_open(point - delta, point) != 1
           || p.eval(point - delta).is_zero()) {
        delta /= 2;
    }
    return delta;
}

} // namespace

std::vector<RootEnclosure> isolate_roots(const UniPoly& p, const Rational& a,
                                         const Rational& b) {
    if (a >= b) throw domain_error("isolate_roots: interval endpoints out of order");
    SturmChain chain(p);
    if (!chain.squarefree())
        throw not_squarefree_error("isolate_roots: gcd(p, p') is nonconstant");

    // Screen a root sitting exactly at b so half-open counts below describe
    // the open target interval.
    Rational b_star = b;
    if (p.eval(b).is_zero()) {
        Rational delta = shrink_below(chain, p, a, b);
        b_star = b - delta;
    }

    std::vector<RootEnclosure> out;
    struct Segment {
        Rational lo, hi;
        int count;
    };
    std::vector<Segment> stack{{a, b_star, chain.count_half_open(a, b_star)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.count == 0) continue;
        if (seg.count == 1) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        Rational mid = (seg.lo + seg.hi) / 2;
        if (p.eval(mid).is_zero()) {
            Rational delta = shrink_below(chain, p, seg.lo, mid);
            out.push_back({mid - delta, mid});
            int left = chain.count_half_open(seg.lo, mid - delta);
            stack.push_back({seg.lo, mid - delta, left});
            stack.push_back({mid, seg.hi, seg.count - 1 - left});
        } else {
            int left = chain.count_half_open(seg.lo, mid);
            stack.push_back({seg.lo, mid, left});
            stack.push_back({mid, seg.hi, seg.count - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& x, const RootEnclosure& y) { return x.lo < y.lo; });
    return out;
}

RootEnclosure refine(const UniPoly& p, const RootEnclosure& e, const Rational& max_width) {
    if (max_width.sign() <= 0) throw domain_error("refine: max_width must be positive");
    if (e.lo >= e.hi) throw domain_error("refine: empty enclosure");
    Rational lo = e.lo;
    Rational hi = e.hi;
    if (hi - lo <= max_width) return e;

    // Built only if an endpoint value vanishes (the enclosed root's neighbour
    // root can sit exactly on lo).
    std::unique_ptr<SturmChain> chain;
    while (hi - lo > max_width) {
        Rational mid = (lo + hi) / 2;
        Rational pm = p.eval(mid);
        if (pm.is_zero()) {
            // The root is exactly mid; clamp to the requested width.
            Rational new_lo = mid - max_width;
            if (new_lo < lo) new_lo = lo;
            return {new_lo, mid};
        }
        Rational plo = p.eval(lo);
        if (!plo.is_zero()) {
            if (pm.sign() != plo.sign())
                hi = mid;
            else
                lo = mid;
        } else {
            if (!chain) chain = std::make_unique<SturmChain>(p);
            if (chain->count_half_open(lo, mid) == 1)
                hi = mid;
            else
                lo = mid;
        }
    }
    return {lo, hi};
}

std::vector<RootEnclosure> reiswich_roots(const ReiswichParam& param, int n,
                                          const Rational& max_width) {
    if (n < 0) throw domain_error("reiswich_roots: negative degree");
    if (n == 0) return {};
    UniPoly p = reiswich_closed(param, n);
    std::vector<RootEnclosure> enclosures = isolate_roots(p, Rational(0), Rational(1));
    if (static_cast<int>(enclosures.size()) != n)
        throw theorem_violation("reiswich_roots: expected " + std::to_string(n)
                                + " roots in (0,1), isolated "
                                + std::to_string(enclosures.size()));
    for (RootEnclosure& e : enclosures) {
        Rational width = max_width;
        e = refine(p, e, width);
        while (!(e.lo.sign() > 0 && e.hi < Rational(1))) {
            width /= 2;
            e = refine(p, e, width);
        }
    }
    return enclosures;
}

} // namespace reiswich
