// contrib.hpp -- residues and the two scalar contribution terms of the
// singular Riemann-Roch formula on a terminal three-fold.
//
// For a cyclic quotient point of type 1/r(1,-1,b):
//
//   B_r(k) = kbar * (r-k)bar / (2r)
//   A_{r,b}(k) = -k (r^2-1)/(12 r) + sum_{l=1}^{k-1} (lb)bar (r - (lb)bar)/(2r)
//
// where kbar denotes the residue k - floor(k/r) r in [0, r), and A is
// evaluated on the residue of k, so both terms are r-periodic in k.

#ifndef THREEFOLD_CONTRIB_HPP
#define THREEFOLD_CONTRIB_HPP

#include "threefold/rational.hpp"

namespace threefold {

// k - floor(k/r) r, in [0, r).  Requires r >= 1.
long long residue(long long k, long long r);

// B_r(k).  Requires r >= 1.  Symmetric under k -> -k, r-periodic,
// 0 <= B_r(k) <= r/8.
Rational b_term(long long r, long long k);

// A_{r,b}(k) evaluated at the residue of k.  Requires gcd(b, r) = 1.
Rational a_term(long long r, long long b, long long k);

// u in [1, r) with u*a = 1 mod r.  Requires gcd(a, r) = 1 and r >= 2.
long long mod_inverse(long long a, long long r);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace threefold

#endif
