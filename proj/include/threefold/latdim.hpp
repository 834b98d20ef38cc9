// latdim.hpp -- the three-way dimension count for the graded pieces of a
// contraction with two basket points (r1, 1), (r2, 1), b_k = (a + r_k)/2,
// index n = 2:
//
//   count:      #{ l in Z^4_{>=0} : (r2/2) l1 + (r1/2) l2 + (a/2) l3 + l4 = i,
//                  l1 l2 = 0, l1+l2+l3 = j mod 2 }
//   recursion:  dim(i, j) = dim(i - a/2, 1-j) + 1 - j
//                           + sum_k floor(i/r_k + j/2),  dim = 0 for i < 0
//   Riemann-Roch: d(j, -i - j a/2) on the attached profile.
//
// i ranges over half-integers; the three values agree on the admissible
// grid.  Half-integers are carried as twice their value (i2 = 2i).

#ifndef THREEFOLD_LATDIM_HPP
#define THREEFOLD_LATDIM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "threefold/basket.hpp"
#include "threefold/rational.hpp"

namespace threefold {

struct DimParams {
    long long a = 1;
    long long r1 = 3;
    long long r2 = 5;  // r2 - r1 in {2, 4}; index fixed at 2

    long long k() const { return r2 - r1; }
};

// Admissibility: a < r1 < r2 and either r2 = r1+2 with a odd, a | 2 r1 + 2,
// or r2 = r1+4 with a | r1 + 2 and a = r1 mod 2; plus constructibility of
// the basket (b_k = (a+r_k)/2 coprime to r_k with a consistent e).
// Returns an explanation when inadmissible.
std::optional<std::string> admissibility_failure(const DimParams& p);

// All admissible parameter triples with r2 <= r2_max.
std::vector<DimParams> enumerate_admissible(long long r2_max);

// #N_k^{[j]}(i) by exhaustive scan; i passed as i2 = 2i.  k = r2 - r1.
long long count_N(const DimParams& p, long long k, long long i2, int j);

// #N_k(i) without the parity split.
long long count_N_total(const DimParams& p, long long k, long long i2);

// #{ l in Z^4_{>=0} : (r1/2+1) l1 + (r1/2) l2 + (a/2) l3 + l4 = i } --
// no l1 l2 = 0 constraint; the auxiliary count of the exact-sequence
// identity  #N_4(i) = #Ntilde_2(i) + #Ntilde_2(i - r2/2)
//                     - #Ntilde_2(i + 1 - r2/2)  for i < (r1+r2)/2.
long long count_N_tilde(const DimParams& p, long long i2);

// Memoising evaluator for the recursion and the Riemann-Roch route.
class DimCalc {
public:
    explicit DimCalc(const DimParams& p);

    const DimParams& params() const { return p_; }
    const ContractionProfile& profile() const { return profile_; }

    long long recursion(long long i2, int j);
    Rational riemann_roch(long long i2, int j) const;

private:
    DimParams p_;
    ContractionProfile profile_;
    std::map<std::pair<long long, int>, long long> memo_;
};

struct DimCounterexample {
    long long i2 = 0;
    int j = 0;
    long long count = 0;
    long long recursion = 0;
    Rational riemann_roch;
};

struct DimCheck {
    bool ok = false;
    std::optional<DimCounterexample> counterexample;
};

// Three-way equality count = recursion = Riemann-Roch over all half-integer
// i <= i_max, j in {0, 1}.  `allow_inadmissible` skips the admissibility
// gate and simply reports.
DimCheck check_lemma_dim(const DimParams& p, long long i_max, bool allow_inadmissible = false);

}  // namespace threefold

#endif
