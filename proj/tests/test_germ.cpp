#include <doctest.h>

#include "threefold/germ.hpp"

using namespace threefold;

TEST_CASE("parse a four-variable germ") {
    QuotientGerm g = parse_germ("quotient 1/2(1,1,1,0);\n"
                                "eq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;\n");
    CHECK(g.dim == 4);
    CHECK(g.n == 2);
    CHECK(g.action == std::array<long long, 5>{1, 1, 1, 0, 0});
    REQUIRE(g.equations.size() == 1);
    CHECK(g.equations[0].size() == 5);
    CHECK(g.equations[0].coefficient({0, 1, 3, 1, 0}) == Rational(1));
    CHECK(weight_class(g, g.equations[0]) == 0);
}

TEST_CASE("parse a five-variable two-equation germ") {
    QuotientGerm g = parse_germ("quotient 1/2(1,1,1,0,1);\n"
                                "eq x1^2 + x2*x5 + x4^9;\n"
                                "eq x2*x4 + x3^3 + x5;\n");
    CHECK(g.dim == 5);
    REQUIRE(g.equations.size() == 2);
    CHECK(weight_class(g, g.equations[0]) == 0);
    CHECK(weight_class(g, g.equations[1]) == 1);
}

TEST_CASE("rational coefficients and comments") {
    QuotientGerm g = parse_germ("# a single hypersurface\n"
                                "quotient 1/3(1,2,1,0);\n"
                                "eq 3/2*x1*x2 - x3^3 + 2*x4^2;\n");
    CHECK(g.equations[0].coefficient({1, 1, 0, 0, 0}) == Rational(3, 2));
    CHECK(g.equations[0].coefficient({0, 0, 3, 0, 0}) == Rational(-1));
    CHECK(g.equations[0].coefficient({0, 0, 0, 2, 0}) == Rational(2));
}

TEST_CASE("semi-invariance violations are named") {
    CHECK_THROWS_WITH_AS(parse_germ("quotient 1/2(1,1,1,0);\neq x1^2 + x3;\n"),
                         doctest::Contains("not semi-invariant"), ParseError);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_germ("quotient 1/2(1,1,1,0);\neq x1^^2;\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
    CHECK_THROWS_AS(parse_germ("quotient 2/2(1,1,1,0);\neq x1^2;\n"), ParseError);
    CHECK_THROWS_AS(parse_germ("quotient 1/2(1,1);\neq x1^2;\n"), ParseError);
    CHECK_THROWS_AS(parse_germ("quotient 1/2(1,1,1,0);\neq x7;\n"), ParseError);
    CHECK_THROWS_AS(parse_germ("quotient 1/2(1,1,1,0);\n"), ParseError);
}

TEST_CASE("print-parse round trip") {
    const char* sources[] = {
        "quotient 1/2(1,1,1,0);\neq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;\n",
        "quotient 1/2(1,1,1,0,0);\neq x1^2 + x4*x5 + x3^4;\neq x2^2 + x3^2 + x4^2 + x5;\n",
        "quotient 1/1(0,0,0,0);\neq x1^2 + x2^2*x4 + 5/3*x3^3 + x4^9;\n",
    };
    for (const char* src : sources) {
        QuotientGerm g = parse_germ(src);
        CHECK(parse_germ(print_germ(g)) == g);
    }
}

TEST_CASE("weight lists") {
    auto w = parse_weight_list("7/2, 5/2,3/2,1");
    REQUIRE(w.size() == 4);
    CHECK(w[0] == Rational(7, 2));
    CHECK(w[3] == Rational(1));
    CHECK_THROWS_AS(parse_weight_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight_list("1,,2"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial p = monomial(4, {1, 0, 0, 0, 0}) + monomial(4, {0, 1, 0, 0, 0});
    Polynomial q = monomial(4, {1, 0, 0, 0, 0}, Rational(1))
                   + monomial(4, {0, 1, 0, 0, 0}, Rational(-1));
    Polynomial prod = p * q;  // x1^2 - x2^2
    CHECK(prod.size() == 2);
    CHECK(prod.coefficient({2, 0, 0, 0, 0}) == Rational(1));
    CHECK(prod.coefficient({0, 2, 0, 0, 0}) == Rational(-1));
    CHECK((q * Polynomial()).is_zero());
    // cancellation drops terms entirely
    Polynomial diff = p;
    diff.add_term({1, 0, 0, 0, 0}, Rational(-1));
    CHECK(diff.size() == 1);
}
