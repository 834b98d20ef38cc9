// germ.hpp -- cyclic-quotient germs: a hypersurface in C^4/(1/n)(w1..w4) or
// a codimension-two complete intersection in C^5/(1/n)(w1..w5), with
// semi-invariant defining equations.  Includes the text format parser:
//
//   quotient 1/2(1,1,1,0);
//   eq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;
//
// with an optional second `eq` for five-variable germs.

#ifndef THREEFOLD_GERM_HPP
#define THREEFOLD_GERM_HPP

#include <string>
#include <vector>

#include "threefold/polynomial.hpp"

namespace threefold {

struct QuotientGerm {
    int dim = 4;                          // 4 or 5; dim - equations = 3
    long long n = 1;                      // group order
    std::array<long long, 5> action{};    // weights of the 1/n action, mod n
    std::vector<Polynomial> equations;    // 1 (dim 4) or 2 (dim 5)

    friend bool operator==(const QuotientGerm&, const QuotientGerm&) = default;
};

// Weight class mod n shared by all monomials of eq (throws when monomials
// disagree, naming the offending monomial).
long long weight_class(const QuotientGerm& germ, const Polynomial& eq);

// Structural checks: dimension/equation count, n >= 1, semi-invariance of
// every equation, non-zero equations.
void validate_germ(const QuotientGerm& germ);

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

// Parses the mini-language above and validates the result.
QuotientGerm parse_germ(const std::string& text);

// Prints in the same format; print + parse round-trips to an equal germ.
std::string print_germ(const QuotientGerm& germ);

// Weight list "4,2,1,3" or "7/2,5/2,3/2,1".
std::vector<Rational> parse_weight_list(const std::string& text);

}  // namespace threefold

#endif
