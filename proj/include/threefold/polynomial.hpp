// polynomial.hpp -- sparse multivariate polynomials with exact rational
// coefficients in up to five variables x1..x5.

#ifndef THREEFOLD_POLYNOMIAL_HPP
#define THREEFOLD_POLYNOMIAL_HPP

#include <array>
#include <string>
#include <vector>

#include "threefold/rational.hpp"

namespace threefold {

constexpr int kMaxVars = 5;

using Exponents = std::array<long long, kMaxVars>;

struct Term {
    Exponents exp{};  // unused slots stay 0
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Adds coeff * x^exp and re-normalises (terms sorted, zero coefficients
    // dropped).
    void add_term(const Exponents& exp, const Rational& coeff);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Monomial with the given exponents, or zero coefficient when absent.
    Rational coefficient(const Exponents& exp) const;

    std::string str() const;

private:
    int nvars_ = 4;
    std::vector<Term> terms_;  // sorted by exponent vector
};

Polynomial monomial(int nvars, const Exponents& exp, const Rational& coeff = Rational(1));

}  // namespace threefold

#endif
