#include "reiswich/multipoly.hpp"

#include <ostream>
#include <sstream>

#include "reiswich/errors.hpp"

namespace reiswich {

MultiPoly MultiPoly::constant(const mpz_class& c) {
    MultiPoly p;
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.terms_[Monomial{{name, 1}}] = 1;
    return p;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
    return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly p;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MultiPoly::Monomial m = ma;
            for (const auto& [name, e] : mb) m[name] += e;
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

MultiPoly operator*(const mpz_class& s, const MultiPoly& p) {
    MultiPoly q;
    if (s == 0) return q;
    for (const auto& [m, c] : p.terms_) q.terms_[m] = s * c;
    return q;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational term{c};
        for (const auto& [name, e] : m) {
            auto it = assignment.find(name);
            if (it == assignment.end())
                throw domain_error("no value bound for indeterminate \"" + name + "\"");
            term *= pow(it->second, e);
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || m.empty()) os << a.get_str();
        bool leading_sym = (a == 1 && !m.empty());
        for (const auto& [name, e] : m) {
            if (!leading_sym) os << "*";
            leading_sym = false;
            os << name;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

} // namespace reiswich
