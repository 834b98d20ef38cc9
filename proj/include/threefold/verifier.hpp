// verifier.hpp -- condition checkers for the weighted-blow-up descriptions
// and an executable corpus of worked examples, each carrying the germ, the
// blow-up weights, and the claimed invariants (discrepancy, basket J with
// quotient types, classification row).

#ifndef THREEFOLD_VERIFIER_HPP
#define THREEFOLD_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "threefold/basket.hpp"
#include "threefold/blowup.hpp"
#include "threefold/classification.hpp"
#include "threefold/germ.hpp"

namespace threefold {

// Conditions on the general x1 x2 + g(x3^n, x4) germ with weights
// (r1/n, r2/n, a/n, 1):
//   (a) a = b r1 mod n and r1 + r2 = 0 mod a n
//   (b) (a - b r1)/n coprime to r1
//   (c) g has weighted order (r1+r2)/n for wt(x3, x4) = (a/n, 1)
//   (d) the monomial x3^{(r1+r2)/a} appears in g
struct CAnReport {
    bool cond_a = false;
    bool cond_b = false;
    bool cond_c = false;
    bool cond_d = false;
    std::string detail;
    bool pass() const { return cond_a && cond_b && cond_c && cond_d; }
};

// g_poly uses variable slots x3, x4 and must be a polynomial in (x3^n, x4).
// Requires gcd(b, n) = 1.
CAnReport check_cAn(long long n, long long b, long long a, long long r1, long long r2,
                    const Polynomial& g_poly);

// Co-primeness consequences of the conditions above together with
// b b' = 1 mod n: (a + b r2)/n coprime to r2, and (r1 - b' a)/n,
// (r2 + b' a)/n coprime to a.
struct Lemma67Report {
    bool hypotheses_met = false;
    bool conclusion_r2 = false;
    bool conclusion_r1_side = false;
    bool conclusion_r2_side = false;
    bool pass() const {
        return hypotheses_met && conclusion_r2 && conclusion_r1_side && conclusion_r2_side;
    }
};

Lemma67Report lemma67(long long n, long long b, long long bprime, long long a,
                      long long r1, long long r2);

struct ExampleRecord {
    std::string id;       // instance id, e.g. "5.5(r'=3)"
    std::string base_id;  // example id, e.g. "5.5"
    QuotientGerm germ;
    BlowupWeights weights;
    Rational claimed_discrepancy;
    int claimed_type_no = 0;
    RVBasket claimed_J;                 // (r, v) pairs
    std::vector<long long> claimed_b;   // quotient-type b per J entry
    long long a = 1;                    // discrepancy a/n in lowest terms times n
    long long n = 1;
    bool is_cAn = false;                // x1 x2 + g(x3^n, x4) records
    long long can_b = 0;                // the b of the 1/n(1,-1,b,0) action
    // skeleton monomials of the normal form, (equation index, exponents);
    // their presence with non-zero coefficient is verified
    std::vector<std::pair<int, Exponents>> required;
};

// Germ x1 x2 + g(x3^n, x4) over 1/n(1, n-1, b, 0); g uses slots x3, x4.
QuotientGerm cAn_germ(long long n, long long b, const Polynomial& g);

// Record for the germ above with weights (r1/n, r2/n, a/n, 1) and basket
// J = {(r1, 1), (r2, 1)} (entries with r = 1 dropped).
ExampleRecord make_cAn_record(long long n, long long b, long long a, long long r1,
                              long long r2, const Polynomial& g);

// The ten worked examples; parametric ones instantiated at three parameter
// values each.
const std::vector<ExampleRecord>& corpus();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string id;
    std::vector<CheckResult> checks;
    bool verdict = false;
};

// Runs, exactly: weights in the lattice and primitive; discrepancy;
// (a/n) e_cubed against the classification value of claimed_J; claimed_J
// against the claimed row shape; basket consistency with (a, n); the
// multiplicity-two normal-form check; cA/n conditions when applicable; and
// chart terminality wherever the chart origin is a quotient point of the
// blown-up threefold.
VerifyReport verify_example(const ExampleRecord& record);

// Riemann-Roch profile attached to a record (claimed basket with its b
// data, E^3 from the blow-up).
ContractionProfile profile_of(const ExampleRecord& record);

// A single-site mutation: one exponent of one monomial, or one weight,
// moved by +-1 (weights by +-1/n).
struct Mutation {
    bool on_weight = false;
    int equation = 0;
    int term = 0;
    int variable = 0;
    int delta = 1;
};

// All legal mutations of a record (exponent stays >= 0, weight stays > 0).
std::vector<Mutation> legal_mutations(const ExampleRecord& record);

// Applies the mutation; the result may be invalid (that is the point).
ExampleRecord apply_mutation(const ExampleRecord& record, const Mutation& m);

// True when the mutated record still passes verification (an escapee);
// throws nothing: construction or verification errors count as caught.
bool mutation_escapes(const ExampleRecord& record, const Mutation& m);

}  // namespace threefold

#endif
