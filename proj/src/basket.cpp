#include "threefold/basket.hpp"

#include <stdexcept>

namespace threefold {

void validate_entry(const BasketEntry& entry) {
    if (entry.r < 2) throw std::domain_error("basket entry: index r must be >= 2");
    if (entry.b < 1 || entry.b >= entry.r || gcd_ll(entry.b, entry.r) != 1)
        throw std::domain_error("basket entry: b must lie in [1, r) and be coprime to r");
    if (entry.e < 1 || entry.e > entry.r)
        throw std::domain_error("basket entry: e must lie in [1, r]");
    long long eb = residue(entry.e * entry.b, entry.r);
    long long v = std::min(eb, entry.r - eb);
    if (entry.v != v) throw std::domain_error("basket entry: v does not match e*b mod r");
    if (entry.v == 0) throw std::domain_error("basket entry: v = 0 entries are excluded");
}

BasketEntry normalize_entry(BasketEntry entry) {
    if (entry.r < 2 || gcd_ll(entry.b, entry.r) != 1)
        throw std::domain_error("normalize_entry: invalid (r, b)");
    long long eb = residue(entry.e * entry.b, entry.r);
    if (2 * eb > entry.r) {
        entry.b = entry.r - entry.b;
        eb = entry.r - eb;
    }
    entry.v = eb;
    return entry;
}

long long derive_e(long long r, long long b, long long a, long long n) {
    if (r < 1) throw std::domain_error("derive_e: r must be positive");
    if (gcd_ll(b, r) != 1) throw std::domain_error("derive_e: b must be coprime to r");
    for (long long e = 1; e <= r; ++e)
        if (residue(n - a * e, r) == 0) return e;
    throw std::domain_error("derive_e: inconsistent local data (no e with n = a e mod r)");
}

BasketEntry make_entry(long long r, long long b, long long v, long long a, long long n) {
    if (gcd_ll(b, r) != 1) throw std::domain_error("make_entry: b must be coprime to r");
    std::vector<long long> candidates;
    for (long long e = 1; e <= r; ++e) {
        if (residue(n - a * e, r) != 0) continue;
        long long eb = residue(e * b, r);
        if (std::min(eb, r - eb) == v) candidates.push_back(e);
    }
    if (candidates.empty())
        throw std::domain_error("make_entry: no e realises the requested v");
    long long e = candidates.front();
    if (candidates.size() > 1 && a % 2 == 0 && n % 2 == 0) {
        // degree-2 cover totally ramified at this point: (n/2 - e a/2) mod r = r/2
        for (long long c : candidates)
            if (residue(n / 2 - c * (a / 2), r) == r / 2) { e = c; break; }
    }
    BasketEntry entry{r, b, v, e};
    entry = normalize_entry(entry);
    validate_entry(entry);
    return entry;
}

ContractionProfile solve_Ec2(long long a, long long n,
                             std::vector<BasketEntry> basket,
                             const Rational& e_cubed) {
    if (a < 1 || n < 1) throw std::domain_error("profile: a and n must be positive");
    if (!(e_cubed > Rational(0))) throw std::domain_error("profile: E^3 must be positive");
    for (auto& entry : basket) {
        entry = normalize_entry(entry);
        validate_entry(entry);
        if (residue(n - a * entry.e, entry.r) != 0)
            throw std::domain_error("profile: n = a e mod r fails for a basket entry");
    }
    ContractionProfile p;
    p.a = a;
    p.n = n;
    p.basket = std::move(basket);
    p.e_cubed = e_cubed;
    p.e_c2 = Rational(0);
    // d(0,0) = poly(0,0) E^3 + ec2 + A_{0,0} - A_{0,-1} must equal 1.
    Rational d00 = d(p, 0, 0);
    p.e_c2 = Rational(1) - d00;
    return p;
}

Rational contribution_A(const ContractionProfile& p, long long i, long long j) {
    Rational acc;
    for (const auto& entry : p.basket)
        acc += a_term(entry.r, entry.b, i + j * entry.e);
    return acc;
}

Rational contribution_B(const ContractionProfile& p, long long i, long long j) {
    Rational acc;
    for (const auto& entry : p.basket)
        acc += b_term(entry.r, i * entry.b + j * entry.v);
    return acc;
}

Rational d(const ContractionProfile& p, long long i, long long j) {
    Rational q(p.a, p.n);
    Rational t = q * Rational(i) + Rational(j);
    Rational poly = (Rational(6) * t * t - Rational(6) * (q + 1) * t + (q + 1) * (q + 2))
                    / Rational(12);
    return poly * p.e_cubed + p.e_c2 + contribution_A(p, i, j) - contribution_A(p, i, j - 1);
}

Rational d_difference(const ContractionProfile& p, long long i, long long j) {
    Rational q(p.a, p.n);
    return (q * Rational(i) + Rational(j) - Rational(1, 2)) * q * p.e_cubed
           + contribution_B(p, i, j) - contribution_B(p, i, j - 1);
}

}  // namespace threefold
