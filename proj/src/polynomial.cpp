#include "threefold/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace threefold {

void Polynomial::add_term(const Exponents& exp, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Exponents& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exp, coeff});
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    for (const auto& t : o.terms_) out.add_term(t.exp, t.coeff);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out(std::max(nvars_, o.nvars_));
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Exponents e{};
            for (int k = 0; k < kMaxVars; ++k) e[k] = s.exp[k] + t.exp[k];
            out.add_term(e, s.coeff * t.coeff);
        }
    }
    return out;
}

Rational Polynomial::coefficient(const Exponents& exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, const Exponents& e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Rational(0);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        } else {
            if (c.sign() < 0) { os << "-"; c = -c; }
            first = false;
        }
        bool unit = (c == Rational(1));
        bool constant = true;
        for (int k = 0; k < nvars_; ++k)
            if (t.exp[k] != 0) constant = false;
        if (!unit || constant) os << c.str();
        bool lead = unit && !constant;
        for (int k = 0; k < nvars_; ++k) {
            if (t.exp[k] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << "x" << (k + 1);
            if (t.exp[k] != 1) os << "^" << t.exp[k];
        }
    }
    return os.str();
}

Polynomial monomial(int nvars, const Exponents& exp, const Rational& coeff) {
    Polynomial p(nvars);
    p.add_term(exp, coeff);
    return p;
}

}  // namespace threefold
