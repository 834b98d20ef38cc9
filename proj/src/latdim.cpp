#include "threefold/latdim.hpp"

#include <stdexcept>

#include "threefold/contrib.hpp"

namespace threefold {

namespace {

// entry (r, b = (a+r)/2 mod r, v = 1) with e solving a e = 2 mod r; when
// several e qualify, prefer the one keeping b unflipped ((e b) mod r = 1).
BasketEntry dim_entry(long long a, long long r) {
    if ((a + r) % 2 != 0) throw std::domain_error("dim params: a + r must be even");
    long long b = residue((a + r) / 2, r);
    if (gcd_ll(b, r) != 1)
        throw std::domain_error("dim params: (a+r)/2 not coprime to r");
    long long e_keep = 0, e_flip = 0;
    for (long long e = 1; e <= r; ++e) {
        if (residue(2 - a * e, r) != 0) continue;
        long long eb = residue(e * b, r);
        if (eb == 1 && e_keep == 0) e_keep = e;
        if (eb == r - 1 && e_flip == 0) e_flip = e;
    }
    long long e = e_keep != 0 ? e_keep : e_flip;
    if (e == 0) throw std::domain_error("dim params: no e with a e = 2 mod r and v = 1");
    BasketEntry entry{r, b, 1, e};
    entry = normalize_entry(entry);
    validate_entry(entry);
    return entry;
}

}  // namespace

std::optional<std::string> admissibility_failure(const DimParams& p) {
    if (!(p.a >= 1 && p.a < p.r1 && p.r1 < p.r2)) return "need 1 <= a < r1 < r2";
    long long k = p.r2 - p.r1;
    if (k == 2) {
        if (p.a % 2 == 0) return "r2 = r1 + 2 needs a odd";
        if ((2 * p.r1 + 2) % p.a != 0) return "r2 = r1 + 2 needs a | 2 r1 + 2";
    } else if (k == 4) {
        if ((p.r1 + 2) % p.a != 0) return "r2 = r1 + 4 needs a | r1 + 2";
        if ((p.a - p.r1) % 2 != 0) return "r2 = r1 + 4 needs a = r1 mod 2";
    } else {
        return "need r2 - r1 in {2, 4}";
    }
    try {
        (void)dim_entry(p.a, p.r1);
        (void)dim_entry(p.a, p.r2);
    } catch (const std::domain_error& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::vector<DimParams> enumerate_admissible(long long r2_max) {
    std::vector<DimParams> out;
    for (long long r1 = 2; r1 < r2_max; ++r1) {
        for (long long k : {2, 4}) {
            long long r2 = r1 + k;
            if (r2 > r2_max) continue;
            for (long long a = 1; a < r1; ++a) {
                DimParams p{a, r1, r2};
                if (!admissibility_failure(p)) out.push_back(p);
            }
        }
    }
    return out;
}

long long count_N(const DimParams& p, long long k, long long i2, int j) {
    if (k != p.r2 - p.r1) throw std::domain_error("count_N: k must equal r2 - r1");
    // doubled form: r2 l1 + r1 l2 + a l3 + 2 l4 = i2, l1 l2 = 0, parity j
    if (i2 < 0) return 0;
    long long total = 0;
    // the running index is l1 on the l2 = 0 branch and l2 on the l1 = 0,
    // l2 >= 1 branch; parity is (running + l3) either way
    auto scan = [&](long long weight, bool allow_zero) {
        for (long long l = allow_zero ? 0 : 1; weight * l <= i2; ++l) {
            for (long long l3 = 0; weight * l + p.a * l3 <= i2; ++l3) {
                long long rest = i2 - weight * l - p.a * l3;
                if (rest % 2 != 0) continue;
                if ((l + l3) % 2 != j % 2) continue;
                ++total;
            }
        }
    };
    scan(p.r2, true);
    scan(p.r1, false);
    return total;
}

long long count_N_total(const DimParams& p, long long k, long long i2) {
    return count_N(p, k, i2, 0) + count_N(p, k, i2, 1);
}

long long count_N_tilde(const DimParams& p, long long i2) {
    // doubled: (r1 + 2) l1 + r1 l2 + a l3 + 2 l4 = i2, all l >= 0
    if (i2 < 0) return 0;
    long long total = 0;
    for (long long l1 = 0; (p.r1 + 2) * l1 <= i2; ++l1)
        for (long long l2 = 0; (p.r1 + 2) * l1 + p.r1 * l2 <= i2; ++l2)
            for (long long l3 = 0; (p.r1 + 2) * l1 + p.r1 * l2 + p.a * l3 <= i2; ++l3) {
                long long rest = i2 - (p.r1 + 2) * l1 - p.r1 * l2 - p.a * l3;
                if (rest % 2 == 0) ++total;
            }
    return total;
}

DimCalc::DimCalc(const DimParams& p) : p_(p) {
    std::vector<BasketEntry> basket = {dim_entry(p.a, p.r1), dim_entry(p.a, p.r2)};
    Rational e3 = Rational(2, p.a) * (Rational(1, p.r1) + Rational(1, p.r2));
    profile_ = solve_Ec2(p.a, 2, std::move(basket), e3);
}

long long DimCalc::recursion(long long i2, int j) {
    if (i2 < 0) return 0;
    if (residue(i2 + j * p_.a, 2) != 0) return 0;  // i + j a/2 must be integral
    auto key = std::make_pair(i2, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // dim(i, j) = dim(i - a/2, 1 - j) + 1 - j + sum_k floor(i/r_k + j/2)
    long long val = recursion(i2 - p_.a, 1 - j) + 1 - j;
    for (long long r : {p_.r1, p_.r2}) {
        Rational f = Rational(i2, 2 * r) + Rational(j, 2);
        val += f.floor().get_si();
    }
    memo_[key] = val;
    return val;
}

Rational DimCalc::riemann_roch(long long i2, int j) const {
    if (residue(i2 + j * p_.a, 2) != 0) return Rational(0);
    // d(j, -i - j a/2); the second argument is the integer -(i2 + j a)/2
    long long second = -(i2 + j * p_.a) / 2;
    return d(profile_, j, second);
}

DimCheck check_lemma_dim(const DimParams& p, long long i_max, bool allow_inadmissible) {
    if (!allow_inadmissible) {
        if (auto why = admissibility_failure(p))
            throw std::domain_error("check_lemma_dim: inadmissible parameters: " + *why);
    }
    DimCalc calc(p);
    DimCheck result;
    result.ok = true;
    for (long long i2 = 0; i2 <= 2 * i_max; ++i2) {
        for (int j = 0; j <= 1; ++j) {
            if (residue(i2 + j * p.a, 2) != 0) continue;
            long long cnt = count_N(p, p.k(), i2, j);
            long long rec = calc.recursion(i2, j);
            Rational rr = calc.riemann_roch(i2, j);
            if (cnt != rec || rr != Rational(cnt)) {
                result.ok = false;
                result.counterexample = DimCounterexample{i2, j, cnt, rec, rr};
                return result;
            }
        }
    }
    return result;
}

}  // namespace threefold
