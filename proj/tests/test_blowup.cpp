#include <doctest.h>

#include <random>

#include "threefold/blowup.hpp"
#include "threefold/contrib.hpp"
#include "threefold/verifier.hpp"

using namespace threefold;

namespace {

QuotientGerm cE2_germ() {
    return parse_germ("quotient 1/2(1,1,1,0);\n"
                      "eq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;\n");
}

BlowupWeights wt(std::initializer_list<Rational> ws) { return BlowupWeights{ws}; }

}  // namespace

TEST_CASE("weighted order and leading form") {
    QuotientGerm g = cE2_germ();
    BlowupWeights w = wt({Rational(4), Rational(2), Rational(1), Rational(3)});
    CHECK(weighted_order(g.equations[0], w) == Rational(8));
    Polynomial lead = leading_form(g.equations[0], w);
    CHECK(lead.size() == 4);                                 // x4^3 has order 9
    CHECK(lead.coefficient({0, 0, 0, 3, 0}).is_zero());
    CHECK(lead.coefficient({2, 0, 0, 0, 0}) == Rational(1));

    Polynomial h = monomial(4, {1, 1, 0, 0, 0}) + monomial(4, {0, 0, 2, 0, 0});
    BlowupWeights ones = wt({Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(weighted_order(h, ones) == Rational(2));
    CHECK(leading_form(h, ones) == h);

    CHECK_THROWS_AS(weighted_order(Polynomial(4), w), std::domain_error);
}

TEST_CASE("weighted order is multiplicative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        BlowupWeights w;
        for (int k = 0; k < 4; ++k)
            w.w.push_back(Rational(1 + static_cast<long long>(rng() % 6),
                                   1 + static_cast<long long>(rng() % 3)));
        auto random_poly = [&] {
            Polynomial p(4);
            int terms = 1 + static_cast<int>(rng() % 4);
            for (int t = 0; t < terms; ++t) {
                Exponents e{};
                for (int k = 0; k < 4; ++k) e[k] = static_cast<long long>(rng() % 5);
                p.add_term(e, Rational(1 + static_cast<long long>(rng() % 9)));
            }
            return p;
        };
        Polynomial p = random_poly(), q = random_poly();
        // positive coefficients: no cancellation in the product
        CHECK(weighted_order(p * q, w) == weighted_order(p, w) + weighted_order(q, w));
    }
}

TEST_CASE("lattice membership and primitivity") {
    QuotientGerm g = cE2_germ();
    CHECK(in_lattice(g, wt({Rational(4), Rational(2), Rational(1), Rational(3)})));
    CHECK(is_primitive(g, wt({Rational(4), Rational(2), Rational(1), Rational(3)})));
    CHECK(in_lattice(g, wt({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1)})));
    CHECK_FALSE(in_lattice(g, wt({Rational(1, 2), Rational(1), Rational(1), Rational(1)})));
    CHECK_FALSE(is_primitive(g, wt({Rational(2), Rational(2), Rational(2), Rational(2)})));
    // (2,1,1/2,3/2) leaves the lattice, so twice it is primitive
    CHECK(is_primitive(g, wt({Rational(4), Rational(2), Rational(1), Rational(3)})));
    CHECK_THROWS_AS(is_primitive(g, wt({Rational(1, 2), Rational(1), Rational(1), Rational(1)})),
                    std::domain_error);
}

TEST_CASE("discrepancy and E^3 on the cE/2 example") {
    QuotientGerm g = cE2_germ();
    BlowupWeights w = wt({Rational(4), Rational(2), Rational(1), Rational(3)});
    CHECK(discrepancy(g, w) == Rational(1));
    CHECK(e_cubed(g, w) == Rational(1, 6));
}

TEST_CASE("terminal quotient criterion") {
    CHECK(terminal_quotient_check(5, {1, 4, 2}));
    CHECK_FALSE(terminal_quotient_check(4, {1, 1, 2}));
    CHECK(terminal_quotient_check(1, {0, 0, 0}));
    CHECK_FALSE(terminal_quotient_check(5, {1, 1, 3}));  // no pair sums to 0
    CHECK(terminal_quotient_check(7, {3, 4, 5}));
}

TEST_CASE("type equivalence up to generator choice") {
    CHECK(types_equivalent(6, {1, 5, 1, 2}, {5, 1, 5, 4}));
    CHECK_FALSE(types_equivalent(6, {1, 5, 1, 2}, {1, 5, 1, 3}));
    CHECK(types_equivalent(1, {0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("charts of the ordinary blow-up are trivial quotients") {
    QuotientGerm g = parse_germ("quotient 1/1(0,0,0,0);\neq x1*x2 + x3^2 + x4^5;\n");
    BlowupWeights w = wt({Rational(1), Rational(1), Rational(1), Rational(1)});
    for (int i = 1; i <= 4; ++i) {
        ChartReport ch = chart(g, w, i);
        CHECK(ch.cyclic);
        CHECK(ch.order == 1);
    }
    // charts 1 and 2 solve a coordinate off the linear term of x1 x2
    CHECK(chart(g, w, 1).strict_transform_smooth);
    CHECK(chart(g, w, 1).terminal_quotient);
    CHECK(chart(g, w, 2).strict_transform_smooth);
    // chart 3: x3^2 is a pure leading power, origin off the strict transform
    CHECK_FALSE(chart(g, w, 3).origin_on_strict_transform);
    // chart 4: the transform x1'x2' + x3'^2 + x4'^3 is singular at the
    // origin (a compound Du Val point, not a quotient point)
    ChartReport c4 = chart(g, w, 4);
    CHECK(c4.origin_on_strict_transform);
    CHECK_FALSE(c4.strict_transform_smooth);
    CHECK_FALSE(c4.verdict_meaningful);
}

TEST_CASE("closed-form charts of the x1 x2 + g family") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 25) {
        long long n = 2 + static_cast<long long>(rng() % 5);
        long long b = 1 + static_cast<long long>(rng() % (n - 1));
        if (gcd_ll(b, n) != 1) continue;
        long long a = 1 + static_cast<long long>(rng() % 6);
        long long r1 = 1 + static_cast<long long>(rng() % 12);
        if (residue(a - b * r1, n) != 0) continue;
        if (gcd_ll((a - b * r1) / n, r1) != 1) continue;
        long long k = 1 + static_cast<long long>(rng() % 2);
        long long r2 = k * a * n - r1;
        if (r2 < 1) continue;

        Polynomial g(4);
        g.add_term({0, 0, (r1 + r2) / a, 0, 0}, Rational(1));
        g.add_term({0, 0, 0, (r1 + r2) / n, 0}, Rational(1));
        QuotientGerm germ = cAn_germ(n, b, g);
        BlowupWeights w = wt({Rational(r1, n), Rational(r2, n), Rational(a, n), Rational(1)});
        REQUIRE(is_primitive(germ, w));

        long long bp = mod_inverse(b, n);
        ChartReport c1 = chart(germ, w, 1);
        ChartReport c2 = chart(germ, w, 2);
        ChartReport c3 = chart(germ, w, 3);
        ChartReport c4 = chart(germ, w, 4);
        REQUIRE(c1.cyclic);
        REQUIRE(c2.cyclic);
        REQUIRE(c3.cyclic);
        REQUIRE(c4.cyclic);
        CHECK(c1.order == r1);
        CHECK(types_equivalent(r1, c1.weights,
                               {residue(-1, r1), residue((r1 + r2) / n, r1),
                                residue((-b * r1 + a) / n, r1), 1}));
        CHECK(c2.order == r2);
        CHECK(types_equivalent(r2, c2.weights,
                               {residue((r1 + r2) / n, r2), residue(-1, r2),
                                residue((b * r2 + a) / n, r2), 1}));
        CHECK(c3.order == a);
        CHECK(types_equivalent(a, c3.weights,
                               {residue((-bp * a + r1) / n, a), residue((bp * a + r2) / n, a),
                                residue(-1, a), residue(1, a)}));
        CHECK(c4.order == n);
        // The chart keeping the x4 ray carries the original group: x4 is
        // invariant, so x3' = x3 x4^{-a/n} keeps the weight of x3, giving
        // 1/n(1,-1,b,0).  (This agrees with 1/n(1,-1,a,0) exactly when
        // r1 = +-1 mod n, since a = b r1.)
        CHECK(types_equivalent(n, c4.weights,
                               {1, residue(-1, n), residue(b, n), 0}));
        if (residue(r1 - 1, n) == 0 || residue(r1 + 1, n) == 0)
            CHECK(types_equivalent(n, c4.weights,
                                   {residue(r1, n), residue(-r1, n), residue(a, n), 0}));
        ++done;
    }
}

TEST_CASE("chart orders agree with the lattice index") {
    // independent route: [N : N_i] = |det(basis^{-1} rays)| by Gaussian
    // elimination over the rationals
    std::mt19937_64 rng(97);
    int done = 0;
    while (done < 20) {
        long long n = 1 + static_cast<long long>(rng() % 8);
        std::array<long long, 5> action{};
        for (int k = 0; k < 4; ++k) action[k] = static_cast<long long>(rng() % n);
        QuotientGerm g;
        g.dim = 4;
        g.n = n;
        g.action = action;
        Polynomial eq(4);
        eq.add_term({1, 1, 0, 0, 0}, Rational(1));
        long long c = residue(action[0] + action[1] - 2 * action[2], n);
        if (c != 0) continue;  // keep the equation semi-invariant
        eq.add_term({0, 0, 2, 0, 0}, Rational(1));
        g.equations = {eq};
        validate_germ(g);

        BlowupWeights w;
        for (int k = 0; k < 4; ++k)
            w.w.push_back(Rational(1 + static_cast<long long>(rng() % 5)));
        if (!in_lattice(g, w)) continue;
        if (!is_primitive(g, w)) continue;
        long long ga = n;
        for (int k = 0; k < 4; ++k) ga = gcd_ll(ga, action[k]);
        long long ord = n / ga;  // order of the action generator mod Z^4
        for (int i = 1; i <= 4; ++i) {
            ChartReport ch = chart(g, w, i);
            // det(rays)/det(lattice) = (n^3 * n w_i) / (n^4 / ord) = ord * w_i
            Rational expected = Rational(ord) * w.w[i - 1];
            REQUIRE(expected.is_integer());
            long long order = 1;
            if (ch.cyclic) {
                order = ch.order;
            } else {
                Integer prod = 1;
                for (const auto& d : ch.invariants) prod *= d;
                order = prod.get_si();
            }
            CHECK(Rational(order) == expected);
        }
        ++done;
    }
}

TEST_CASE("chart origin membership follows the leading form") {
    // chart 3 of the cE/2 example: x3^8 is a pure leading power, so the
    // origin is off the strict transform
    QuotientGerm g = cE2_germ();
    BlowupWeights w = wt({Rational(4), Rational(2), Rational(1), Rational(3)});
    ChartReport c3 = chart(g, w, 3);
    CHECK_FALSE(c3.origin_on_strict_transform);
    CHECK(c3.terminal_quotient);
    ChartReport c4 = chart(g, w, 4);
    CHECK(c4.origin_on_strict_transform);
    CHECK(c4.strict_transform_smooth);
    CHECK(c4.order == 6);
    CHECK(c4.verdict_meaningful);
    CHECK(c4.terminal_quotient);
}
