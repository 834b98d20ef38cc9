#include <doctest.h>

#include <random>

#include "threefold/contrib.hpp"
#include "threefold/rational.hpp"

using namespace threefold;

TEST_CASE("rational basics") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(5, 1).is_integer());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("residue") {
    CHECK(residue(0, 7) == 0);
    CHECK(residue(-3, 7) == 4);
    CHECK(residue(13, 5) == 3);
    CHECK(residue(-14, 7) == 0);
    CHECK_THROWS_AS(residue(1, 0), std::domain_error);
    CHECK_THROWS_AS(residue(1, -3), std::domain_error);
}

TEST_CASE("b_term examples") {
    for (long long r : {1, 2, 5, 9})
        CHECK(b_term(r, 0) == Rational(0));
    CHECK(b_term(2, 1) == Rational(1, 4));
    CHECK(b_term(7, 3) == Rational(6, 7));
    CHECK_THROWS_AS(b_term(0, 1), std::domain_error);
}

TEST_CASE("a_term examples") {
    CHECK(a_term(7, 3, 0) == Rational(0));
    CHECK(a_term(5, 2, 0) == Rational(0));
    CHECK(a_term(7, 3, 1) == Rational(-4, 7));
    CHECK(a_term(7, 3, 2) == Rational(-2, 7));
    CHECK(a_term(7, 3, 9) == a_term(7, 3, 2));
    CHECK_THROWS_AS(a_term(6, 2, 1), std::domain_error);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(-1, 5) == 4);
    CHECK_THROWS_AS(mod_inverse(2, 4), std::domain_error);
    CHECK_THROWS_AS(mod_inverse(3, 1), std::domain_error);
}

TEST_CASE("difference and reflection identities on random inputs") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 1000) {
        long long r = 1 + static_cast<long long>(rng() % 40);
        long long b = static_cast<long long>(rng() % (2 * r + 1)) - r;
        if (gcd_ll(b, r) != 1) continue;
        long long k = static_cast<long long>(rng() % 200) - 100;
        // reflection: A(k) + A(-k) = -B(k b)
        CHECK(a_term(r, b, k) + a_term(r, b, -k) == -b_term(r, k * b));
        // difference within one period: A(k+1) - A(k) = -(r^2-1)/(12r) + B(k b)
        long long kk = residue(k, r);
        if (kk <= r - 2) {
            Rational lhs = a_term(r, b, kk + 1) - a_term(r, b, kk);
            Rational rhs = -Rational(r * r - 1, 12 * r) + b_term(r, kk * b);
            CHECK(lhs == rhs);
        }
        ++checked;
    }
}

TEST_CASE("b_term symmetry and bounds") {
    for (long long r = 1; r <= 24; ++r) {
        for (long long k = -r; k <= 2 * r; ++k) {
            CHECK(b_term(r, k) == b_term(r, r - k));
            CHECK(b_term(r, k) == b_term(r, k + r));
            CHECK(b_term(r, k) >= Rational(0));
            CHECK(b_term(r, k) <= Rational(r, 8));
        }
    }
}

TEST_CASE("a_term periodicity and b-flip invariance") {
    for (long long r : {2, 5, 8, 13}) {
        for (long long b = 1; b < r; ++b) {
            if (gcd_ll(b, r) != 1) continue;
            for (long long k = -r; k <= r; ++k) {
                CHECK(a_term(r, b, k) == a_term(r, b, k + r));
                CHECK(a_term(r, b, k) == a_term(r, r - b, k));
            }
        }
    }
}
