#include "threefold/classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace threefold {

Rational basket_deficiency(const RVBasket& J) {
    Rational acc;
    for (auto [r, v] : J) acc += Rational(v * (r - v), 2 * r);
    return acc;
}

Rational row_value(const RVBasket& J) {
    return Rational(2) * (Rational(1) - basket_deficiency(J));
}

namespace {

void extend(std::vector<EnumeratedBasket>& out, RVBasket& cur,
            const Rational& deficiency, long long r_max,
            std::pair<long long, long long> from) {
    // cur is admissible; record it, then try to append one more entry
    // lexicographically >= `from` (multisets are kept sorted).
    out.push_back({cur, Rational(2) * (Rational(1) - deficiency)});
    for (long long r = from.first; r <= r_max; ++r) {
        long long v0 = (r == from.first) ? from.second : 1;
        for (long long v = v0; 2 * v <= r; ++v) {
            Rational next = deficiency + Rational(v * (r - v), 2 * r);
            if (!(next < Rational(1))) continue;
            cur.emplace_back(r, v);
            extend(out, cur, next, r_max, {r, v});
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<EnumeratedBasket> enumerate_baskets(long long r_max) {
    if (r_max < 2) throw std::domain_error("enumerate_baskets: r_max must be >= 2");
    std::vector<EnumeratedBasket> out;
    RVBasket cur;
    extend(out, cur, Rational(0), r_max, {2, 1});
    std::sort(out.begin(), out.end(), [](const EnumeratedBasket& x, const EnumeratedBasket& y) {
        return x.entries < y.entries;
    });
    return out;
}

const std::vector<ClassificationRow>& table3() {
    static const std::vector<ClassificationRow> rows = {
        {1, {{6, 3}}, 0, 0, 0, "1/2"},
        {2, {{7, 3}}, 0, 0, 0, "2/7"},
        {3, {{8, 3}}, 0, 0, 0, "1/8"},
        {4, {{4, 2}}, 1, 1, 2, "1/r"},
        {5, {{2, 1}, {5, 2}}, 0, 0, 0, "3/10"},
        {6, {{3, 1}, {5, 2}}, 0, 0, 0, "2/15"},
        {7, {{4, 1}, {5, 2}}, 0, 0, 0, "1/20"},
        {8, {{2, 1}, {6, 2}}, 0, 0, 0, "1/6"},
        {9, {{2, 1}, {7, 2}}, 0, 0, 0, "1/14"},
        {10, {{2, 1}, {2, 1}}, 1, 1, 2, "1/r"},
        {11, {{2, 1}, {3, 1}, {3, 1}}, 0, 0, 0, "1/6"},
        {12, {{2, 1}, {3, 1}, {4, 1}}, 0, 0, 0, "1/12"},
        {13, {{2, 1}, {3, 1}, {5, 1}}, 0, 0, 0, "1/30"},
        {14, {}, 1, 2, 4, "4/r"},
        {15, {}, 2, 1, 2, "1/r1 + 1/r2"},
        {16, {}, 1, 1, 2, "1 + 1/r"},
        {17, {}, 0, 0, 0, "2"},
    };
    return rows;
}

int match_type(const RVBasket& J_in) {
    RVBasket J = J_in;
    std::sort(J.begin(), J.end());
    const auto bad = [] { return std::domain_error("not a classification basket"); };

    switch (J.size()) {
        case 0:
            return 17;
        case 1: {
            auto [r, v] = J[0];
            if (v == 1) return 16;
            if (v == 2 && r >= 4) return 14;
            if (v == 3) {
                if (r == 6) return 1;
                if (r == 7) return 2;
                if (r == 8) return 3;
            }
            throw bad();
        }
        case 2: {
            auto [r1, v1] = J[0];
            auto [r2, v2] = J[1];
            if (v1 == 1 && v2 == 1) return 15;
            // sorted order puts the v=2 entry second unless r coincide
            long long rv2 = 0, rv1 = 0;  // (index of v=2 entry, companion)
            if (v1 == 2 && v2 == 1) { rv2 = r1; rv1 = r2; }
            else if (v1 == 1 && v2 == 2) { rv2 = r2; rv1 = r1; }
            else throw bad();
            if (rv2 == 4) return 4;
            if (rv2 == 5 && rv1 == 2) return 5;
            if (rv2 == 5 && rv1 == 3) return 6;
            if (rv2 == 5 && rv1 == 4) return 7;
            if (rv2 == 6 && rv1 == 2) return 8;
            if (rv2 == 7 && rv1 == 2) return 9;
            throw bad();
        }
        case 3: {
            if (J[0].second != 1 || J[1].second != 1 || J[2].second != 1) throw bad();
            long long r1 = J[0].first, r2 = J[1].first, r3 = J[2].first;
            if (r1 == 2 && r2 == 2) return 10;
            if (r1 == 2 && r2 == 3 && r3 == 3) return 11;
            if (r1 == 2 && r2 == 3 && r3 == 4) return 12;
            if (r1 == 2 && r2 == 3 && r3 == 5) return 13;
            throw bad();
        }
        default:
            throw bad();
    }
}

bool integrality_filter(const RVBasket& J, long long a, long long n) {
    Rational e3 = Rational(n, a) * row_value(J);
    long long R = 1, Rstar = 1;
    for (auto [r, v] : J) {
        R = lcm_ll(R, r);
        Rstar = lcm_ll(Rstar, r / gcd_ll(r, v));
    }
    Rational c1 = Rational(Rstar) * e3;
    Rational c2 = Rational(a, n) * Rational(a, n) * Rational(R) * e3;
    return c1.is_integer() && c2.is_integer();
}

bool min_discrepancy_feasible(long long a, long long n, long long r, long long e) {
    if (a < 1 || n < 1 || r < 1 || e < 1)
        throw std::domain_error("min_discrepancy_feasible: inputs must be positive");
    for (long long nm = 1; a * nm < r; ++nm) {
        long long rest = r - a * nm;
        if (rest % n != 0) continue;
        long long na = rest / n;
        if (na < 1) continue;
        if (residue(nm + e * na, r) == 0) return true;
    }
    return false;
}

std::optional<ContractionProfile> instantiate_profile(const RVBasket& J) {
    long long R = 1;
    for (auto [r, v] : J) R = lcm_ll(R, r);
    Rational value = row_value(J);
    for (long long n = 1; n <= 2 * R; ++n) {
        for (long long a = 1; a <= 2 * R; ++a) {
            std::vector<BasketEntry> basket;
            bool ok = true;
            for (auto [r, v] : J) {
                bool found = false;
                for (long long b = 1; b < r && !found; ++b) {
                    if (gcd_ll(b, r) != 1) continue;
                    try {
                        basket.push_back(make_entry(r, b, v, a, n));
                        found = true;
                    } catch (const std::domain_error&) {
                    }
                }
                if (!found) { ok = false; break; }
            }
            if (!ok) continue;
            Rational e3 = Rational(n, a) * value;
            if (!(e3 > Rational(0))) continue;
            return solve_Ec2(a, n, std::move(basket), e3);
        }
    }
    return std::nullopt;
}

}  // namespace threefold
