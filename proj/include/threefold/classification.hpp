// classification.hpp -- enumeration of the baskets J = {(r, v)} solving
//
//   -1 = -(1/2) (a/n) E^3 - sum_{(r,v) in J} v(r-v)/(2r),
//
// the 17-row canonical table of their shapes, and the two arithmetic
// filters (integrality of R* E^3 and (a/n)^2 R E^3, and existence of
// positive (n_m, n_a) with a n_m + n n_a = r, n_m + e n_a = 0 mod r) used
// to prune (a, n) possibilities.

#ifndef THREEFOLD_CLASSIFICATION_HPP
#define THREEFOLD_CLASSIFICATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "threefold/basket.hpp"
#include "threefold/rational.hpp"

namespace threefold {

// A basket as bare (r, v) data, sorted ascending; the classification only
// sees these pairs.
using RVBasket = std::vector<std::pair<long long, long long>>;

struct EnumeratedBasket {
    RVBasket entries;  // sorted lexicographically
    Rational value;    // (a/n) E^3 = 2 (1 - sum v(r-v)/(2r))
};

// v(r-v)/(2r) summed over the basket.
Rational basket_deficiency(const RVBasket& J);

// All multisets {(r, v)} with 2 <= r <= r_max, 1 <= v <= r/2 and
// deficiency < 1, each paired with its value; deterministic lexicographic
// order.  Every term is >= 1/4, so baskets have at most 3 entries.
std::vector<EnumeratedBasket> enumerate_baskets(long long r_max);

// Canonical table row.  Parametric rows (4, 10, 14, 15, 16) keep r
// symbolic; `entries` stores the fixed part and `param_slots` how many
// trailing (r, v) slots are parametric.
struct ClassificationRow {
    int no = 0;
    RVBasket fixed;              // concrete (r, v) pairs of the shape
    int param_entries = 0;       // number of parametric (r, 1) / (r, 2) slots
    long long param_v = 0;       // v of the parametric slots (1 or 2)
    long long min_param_r = 0;   // smallest admissible parametric r
    std::string value_formula;   // printable value, e.g. "1/2" or "1/r"
};

// The 17 canonical rows.
const std::vector<ClassificationRow>& table3();

// The unique row number (1..17) whose shape J instantiates.
// Throws std::domain_error("not a classification basket") when none does.
int match_type(const RVBasket& J);

// Value of the row through a concrete J (equals 2(1 - deficiency)).
Rational row_value(const RVBasket& J);

// Lemma filter: with E^3 = (n/a) * row_value(J), R = lcm r, R* = lcm
// r/gcd(r,v) (empty lcm = 1), true iff R* E^3 and (a/n)^2 R E^3 are both
// integers.
bool integrality_filter(const RVBasket& J, long long a, long long n);

// True iff positive integers (n_m, n_a) exist with a n_m + n n_a = r and
// n_m + e n_a = 0 mod r.  In particular false whenever a + n > r.
bool min_discrepancy_feasible(long long a, long long n, long long r, long long e);

// Searches a consistent instantiation of J: (a, n) with per-entry (b, e)
// such that n = a e mod r and min((eb) mod r, r-(eb) mod r) = v, with
// E^3 = (n/a) row_value(J).  Used by the identity tests.
std::optional<ContractionProfile> instantiate_profile(const RVBasket& J);

}  // namespace threefold

#endif
