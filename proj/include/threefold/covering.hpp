// covering.hpp -- transformation of baskets under the cyclic cover of
// degree p defined by (n/p) K when p divides gcd(a, n), and the arithmetic
// exclusion machinery built on it.
//
// At an entry of local index r the cover is controlled by
//   d = (n/p - e a/p) mod r,      p d = 0 mod r,
// etale exactly when d = 0.  An etale entry splits into p copies of (r, v);
// a ramified one becomes the single entry (r/p, min(v mod r/p, -v mod r/p)),
// and the value (a/n) E^3 scales by p.

#ifndef THREEFOLD_COVERING_HPP
#define THREEFOLD_COVERING_HPP

#include <optional>
#include <string>
#include <vector>

#include "threefold/basket.hpp"
#include "threefold/classification.hpp"
#include "threefold/rational.hpp"

namespace threefold {

// (n/p - e a/p) mod r.  Requires p | a and p | n.
long long d_cover(const BasketEntry& entry, long long a, long long n, long long p);

// Entry transformation under a degree-p cover; entries whose transformed v
// is 0 are dropped.  For composite p the prime factors are applied in turn
// (ramified case only; requires p | r).
std::vector<std::pair<long long, long long>> variation(long long r, long long v,
                                                       long long p, bool ramified);

// One admissible prime-degree cover of a classification basket.
struct CoverRow {
    int source_no = 0;       // classification row of the source
    RVBasket source;         // concrete source basket
    long long p = 0;         // prime degree
    unsigned ramified = 0;   // bitmask over source entries
    RVBasket target;         // transformed basket
    int target_no = 0;       // classification row of the target
    Rational source_value;   // (a/n) E^3
    Rational target_value;   // p * source_value
};

// All (source row, p, ramification assignment) with concrete r <= r_max
// whose transformed basket again matches a classification row with value
// scaled by p.  Deterministic order.
std::vector<CoverRow> enumerate_prime_covers(long long r_max);

// -A(-e) - A(d) + A(d - e) for d = d_cover(entry, a, n, p); the summands of
// the identity  1 = sum_Q (-A_Q(-e) - A_Q(d) + A_Q(d-e))  that holds for a
// genuine degree-p cover.
Rational c_term(const BasketEntry& entry, long long a, long long n, long long p);

// sum_Q (B_r(d b) - B_r(d b - v) + B_r(-v)) for d = d_cover(entry, a, n, g);
// equals 1 for geometrically consistent profiles with g | gcd(a, n), g >= 2.
Rational eq16_lhs(const ContractionProfile& p, long long g);

// The degree-2 residue tuples attached to covers of rows 4, 8, 10, 12: for
// each admissible ramification assignment, d_i = r_i/2 at ramified entries
// and 0 at etale ones.  `entrywise_realizable` asks for a consistent
// (b, e, a, n) at every entry separately; `globally_realizable` insists on
// one even pair (a, n) serving all entries at once (the stronger reading
// that eliminates some tuples outright).
struct CoverResidueRow {
    int source_no = 0;
    RVBasket source;
    long long p = 2;
    std::vector<long long> d;  // one per source entry
    bool entrywise_realizable = false;
    bool globally_realizable = false;
};

// Rows for a concrete parametric r (rows 10 need r even; rows 4 take any
// companion r >= 2).
std::vector<CoverResidueRow> cover_residue_rows(long long param_r);

// All values of -A(-e) - A(d) + A(d - e) over entries (r, b, v, e) with
// gcd(b, r) = 1, (e b) mod r = v, and some even (a, n) giving residue d;
// sorted ascending.
std::vector<Rational> c_values_for(long long r, long long v, long long d);

// Candidate (a, n) pairs with gcd(a, n) = 2 for rows 14 and 15 with equal
// indices ({(r,1),(r,1)}).  Stage selects the raw integrality-filtered set
// or the set additionally pruned by requiring d(2,0) - d(1,0) integral for
// some admissible (r, b, e).
enum class CandidateStage { integrality, pruned };
std::vector<std::pair<long long, long long>> coprime_candidates(int type_no,
                                                                CandidateStage stage);

}  // namespace threefold

#endif
