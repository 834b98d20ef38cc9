#include "threefold/contrib.hpp"

#include <numeric>
#include <stdexcept>

namespace threefold {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * (b < 0 ? -b : b);
}

long long residue(long long k, long long r) {
    if (r <= 0) throw std::domain_error("residue: modulus must be positive");
    long long m = k % r;
    return m < 0 ? m + r : m;
}

Rational b_term(long long r, long long k) {
    if (r <= 0) throw std::domain_error("b_term: index must be positive");
    long long kk = residue(k, r);
    long long rk = residue(r - k, r);
    return Rational(kk * rk, 2 * r);
}

Rational a_term(long long r, long long b, long long k) {
    if (r <= 0) throw std::domain_error("a_term: index must be positive");
    if (gcd_ll(b, r) != 1) throw std::domain_error("a_term: b must be coprime to r");
    long long kk = residue(k, r);
    Rational acc = Rational(-kk) * Rational(r * r - 1, 12 * r);
    long long lb = 0;
    for (long long l = 1; l < kk; ++l) {
        lb = residue(lb + b, r);
        acc += Rational(lb * (r - lb), 2 * r);
    }
    return acc;
}

long long mod_inverse(long long a, long long r) {
    if (r < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
    long long a0 = residue(a, r);
    // extended Euclid on (a0, r)
    long long old_r = a0, cur_r = r;
    long long old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        long long q = old_r / cur_r;
        long long t = old_r - q * cur_r; old_r = cur_r; cur_r = t;
        t = old_s - q * cur_s; old_s = cur_s; cur_s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return residue(old_s, r);
}

}  // namespace threefold
