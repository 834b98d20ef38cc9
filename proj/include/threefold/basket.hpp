// basket.hpp -- baskets of fictitious singularities and the singular
// Riemann-Roch evaluator d(i,j) for a divisorial contraction with
// discrepancy a/n and exceptional divisor E, E^3 > 0.
//
// d(i,j) is the Euler characteristic of the graded piece attached to the
// divisor i K + j E.  It is computed as
//
//   d(i,j) = (1/12)(6 t^2 - 6 (q+1) t + (q+1)(q+2)) E^3 + ec2
//            + A_{i,j} - A_{i,j-1},          t = q i + j,  q = a/n,
//
// where A_{i,j} = sum over basket entries of A_{r,b}((i + j e) mod r), and
// the constant ec2 (the (1/12) E.c2 term) is never an input: it is fixed by
// the normalisation d(0,0) = 1.

#ifndef THREEFOLD_BASKET_HPP
#define THREEFOLD_BASKET_HPP

#include <string>
#include <vector>

#include "threefold/contrib.hpp"
#include "threefold/rational.hpp"

namespace threefold {

// One fictitious singularity of type 1/r(1,-1,b) at which E ~ e K.
// v = min((e b) mod r, r - (e b) mod r); entries with v = 0 carry no
// contribution and are not stored.
struct BasketEntry {
    long long r = 1;  // local index
    long long b = 1;  // quotient type 1/r(1,-1,b), gcd(b, r) = 1
    long long v = 0;  // normalised residue of e*b, in [1, r/2]
    long long e = 1;  // E ~ e K locally, e in [1, r]

    friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
};

// Throws std::domain_error unless gcd(b,r)=1, e in [1,r], and v matches
// min((eb) mod r, r - (eb) mod r).
void validate_entry(const BasketEntry& entry);

// Replaces b by r-b if necessary so that (e*b) mod r = v <= r/2, and sets v.
BasketEntry normalize_entry(BasketEntry entry);

// Smallest positive e <= r with n = a e mod r.  Throws "inconsistent local
// data" when no solution exists.
long long derive_e(long long r, long long b, long long a, long long n);

// Finds e in [1, r] with a e = n (mod r) realising the requested v, i.e.
// min((e b) mod r, r - (e b) mod r) = v; when gcd(a, n) is even prefers the
// solution with (n/2 - e a/2) mod r = r/2 (the totally ramified branch of a
// degree-2 cover).  Returns the normalised entry.
BasketEntry make_entry(long long r, long long b, long long v, long long a, long long n);

struct ContractionProfile {
    long long a = 1;
    long long n = 1;
    std::vector<BasketEntry> basket;  // normalised entries, v >= 1
    Rational e_cubed;                 // E^3 > 0
    Rational e_c2;                    // derived: makes d(0,0) = 1

    Rational discrepancy() const { return Rational(a, n); }
};

// Validates entries against (a, n) (n = a e mod r per entry), normalises
// them, and solves for e_c2 from d(0,0) = 1.
ContractionProfile solve_Ec2(long long a, long long n,
                             std::vector<BasketEntry> basket,
                             const Rational& e_cubed);

// Sum of A_{r,b}(i + j e) over the basket.
Rational contribution_A(const ContractionProfile& p, long long i, long long j);

// Sum of B_r(i b + j v) over the basket.
Rational contribution_B(const ContractionProfile& p, long long i, long long j);

// chi of the graded piece attached to i K + j E; an integer for
// geometrically consistent profiles (non-integers are reported by callers,
// never fatal here).
Rational d(const ContractionProfile& p, long long i, long long j);

// Right-hand side of the first-difference identity:
//   d(i+1,j) - d(i,j) = ((a/n) i + j - 1/2)(a/n) E^3 + B_{i,j} - B_{i,j-1}.
Rational d_difference(const ContractionProfile& p, long long i, long long j);

}  // namespace threefold

#endif
