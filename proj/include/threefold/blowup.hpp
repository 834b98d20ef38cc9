// blowup.hpp -- weighted blow-up of a cyclic-quotient germ along a
// primitive weight vector: weighted orders, chart quotient types computed
// by lattice reduction, discrepancy and E^3.
//
// The germ C^dim/(1/n)(a1..a_dim) is the toric variety of the positive
// orthant in the lattice N = Z^dim + Z (a1/n, ..., a_dim/n); the blow-up
// inserts the ray through the weight vector w in N, and chart i is the
// abelian quotient presented by the sublattice spanned by w and the e_j
// for j != i.

#ifndef THREEFOLD_BLOWUP_HPP
#define THREEFOLD_BLOWUP_HPP

#include <array>
#include <optional>
#include <vector>

#include "threefold/germ.hpp"
#include "threefold/lattice.hpp"
#include "threefold/polynomial.hpp"
#include "threefold/rational.hpp"

namespace threefold {

struct BlowupWeights {
    std::vector<Rational> w;  // one positive weight per variable
};

// Minimum of sum l_k w_k over the monomials of p; throws "undefined order"
// on the zero polynomial.
Rational weighted_order(const Polynomial& p, const BlowupWeights& w);

// Sub-polynomial of the monomials attaining the weighted order.
Polynomial leading_form(const Polynomial& p, const BlowupWeights& w);

// Membership of w in N.
bool in_lattice(const QuotientGerm& germ, const BlowupWeights& w);

// True iff w/k leaves N for every integer k >= 2 dividing all n w_i.
// Throws when w is not in N.
bool is_primitive(const QuotientGerm& germ, const BlowupWeights& w);

// sum_i w_i - 1 - sum_j weighted_order(eq_j).
Rational discrepancy(const QuotientGerm& germ, const BlowupWeights& w);

// (prod_j weighted_order(eq_j)) / (prod_i w_i) / n.
Rational e_cubed(const QuotientGerm& germ, const BlowupWeights& w);

// Strict transform of eq on the cover of chart i: monomial exponents keep
// l_k for k != i and slot i becomes wt(l) - weighted_order(eq), an integer
// by semi-invariance.
Polynomial chart_strict_transform(const QuotientGerm& germ, const BlowupWeights& w,
                                  const Polynomial& eq, int chart_index);

struct ChartReport {
    int chart_index = 0;         // 1-based
    bool cyclic = true;
    long long order = 1;         // quotient group order
    std::vector<long long> weights;          // action on chart coordinates, mod order
    std::vector<Integer> invariants;         // when not cyclic
    bool origin_on_strict_transform = false;
    bool strict_transform_smooth = false;    // linear parts of full rank at the origin
    std::vector<int> solved_coordinates;     // 0-based, removed by the implicit function
    std::array<long long, 3> residual_weights{};  // quotient type of the 3-fold point
    bool verdict_meaningful = false;
    bool terminal_quotient = false;
};

// Chart i (1-based) of the blow-up.  Requires primitive weights.
ChartReport chart(const QuotientGerm& germ, const BlowupWeights& w, int chart_index);

// Terminality of the 3-fold cyclic quotient 1/r(w1,w2,w3): r = 1, or all
// weights coprime to r with some pair summing to 0 mod r.
bool terminal_quotient_check(long long r, const std::array<long long, 3>& weights);

// Equality of quotient types up to choice of the group generator: some unit
// u mod r takes one weight vector to the other componentwise.
bool types_equivalent(long long r, const std::vector<long long>& alpha,
                      const std::vector<long long>& beta);

// Hypotheses of the blow-up description that are not decided
// algorithmically; reports carry them as standing assumptions.
const std::vector<std::string>& unchecked_hypotheses();

}  // namespace threefold

#endif
