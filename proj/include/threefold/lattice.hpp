// lattice.hpp -- small integer-lattice computations behind the toric chart
// descriptions: Hermite-style column reduction to extract a basis from
// generators, and Smith reduction of a finite-index sublattice to present
// the quotient group with an explicit generator.

#ifndef THREEFOLD_LATTICE_HPP
#define THREEFOLD_LATTICE_HPP

#include <vector>

#include "threefold/rational.hpp"

namespace threefold {

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;  // row-major, rows x cols

IMat identity_matrix(int n);

// Basis (columns of the returned square matrix) of the full-rank lattice
// spanned by the given generator columns.  Throws when the span has lower
// rank.
IMat column_basis(const IMat& generators);

// Solves B x = c exactly; throws when singular.
std::vector<Rational> solve_linear(const IMat& B, const IVec& c);

// Finite abelian quotient L / L', where L has basis columns `basis` and L'
// is spanned by the columns of `sub` (must satisfy L' <= L with finite
// index).  Reports the cyclic invariant factors > 1 and, when the group is
// cyclic (at most one nontrivial factor), a lattice vector generating it.
struct QuotientGroup {
    Integer order = 1;
    std::vector<Integer> invariants;  // nontrivial invariant factors, divisibility chain
    bool cyclic = true;
    IVec generator;                   // member of L generating L/L' when cyclic
};

QuotientGroup quotient_group(const IMat& basis, const IMat& sub);

}  // namespace threefold

#endif
