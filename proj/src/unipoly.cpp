#include "reiswich/unipoly.hpp"

#include <ostream>

#include "reiswich/errors.hpp"

namespace reiswich {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> ascending_coeffs) : coeffs_(ascending_coeffs) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly({c});
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
    UniPoly inner({b, a});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * inner + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t k = 0; k < coeffs_.size(); ++k) v[k] = -coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t k = 0; k < v.size(); ++k) {
        if (k < a.coeffs_.size()) v[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) v[k] += b.coeffs_[k];
    }
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + (-b);
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> v(p.coeffs_.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = s * p.coeffs_[k];
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& d) {
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs_;
    int dn = static_cast<int>(rem.size()) - 1;
    int dd = d.degree();
    if (dn < dd) return {UniPoly(), num};
    std::vector<Rational> quot(static_cast<size_t>(dn - dd) + 1);
    const Rational lc_inv = d.leading().reciprocal();
    for (int k = dn; k >= dd; --k) {
        Rational c = rem[static_cast<size_t>(k)] * lc_inv;
        if (c.is_zero()) continue;
        quot[static_cast<size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k - dd + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.leading().reciprocal() * x;
}

UniPoly make_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(den_lcm, num_gcd) * p;  // num_gcd > 0, den_lcm > 0: sign kept
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (k == 0 || a != Rational(1)) {
            os << a.str();
            if (k > 0) os << " ";
        }
        if (k > 0) os << "x";
        if (k > 1) os << "^" << k;
    }
    return os;
}

} // namespace reiswich
