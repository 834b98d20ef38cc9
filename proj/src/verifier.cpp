#include "threefold/verifier.hpp"

#include <sstream>
#include <stdexcept>

#include "threefold/contrib.hpp"

namespace threefold {

CAnReport check_cAn(long long n, long long b, long long a, long long r1, long long r2,
                    const Polynomial& g_poly) {
    if (n < 1 || a < 1 || r1 < 1 || r2 < 1)
        throw std::domain_error("check_cAn: n, a, r1, r2 must be positive");
    if (gcd_ll(b, n) != 1) throw std::domain_error("check_cAn: b must be coprime to n");
    if (g_poly.is_zero()) throw std::domain_error("check_cAn: g must be non-zero");
    for (const auto& t : g_poly.terms()) {
        if (t.exp[0] != 0 || t.exp[1] != 0 || t.exp[4] != 0)
            throw std::domain_error("check_cAn: g must involve x3 and x4 only");
        if (t.exp[2] % n != 0)
            throw std::domain_error("check_cAn: g must be a polynomial in x3^n and x4");
    }

    CAnReport rep;
    std::ostringstream os;
    rep.cond_a = residue(a - b * r1, n) == 0 && residue(r1 + r2, a * n) == 0;
    if (!rep.cond_a) os << "(a) fails: a-b*r1=" << (a - b * r1) << " mod " << n
                        << ", r1+r2=" << (r1 + r2) << " mod " << (a * n) << "; ";
    if (residue(a - b * r1, n) == 0) {
        long long q = (a - b * r1) / n;
        rep.cond_b = gcd_ll(q, r1) == 1;
        if (!rep.cond_b) os << "(b) fails: gcd(" << q << "," << r1 << ")="
                            << gcd_ll(q, r1) << "; ";
    }
    BlowupWeights w34{{Rational(1), Rational(1), Rational(a, n), Rational(1)}};
    Rational ord = weighted_order(g_poly, w34);
    rep.cond_c = ord == Rational(r1 + r2, n);
    if (!rep.cond_c) os << "(c) fails: w-ord g = " << ord.str() << " != "
                        << Rational(r1 + r2, n).str() << "; ";
    if ((r1 + r2) % a == 0) {
        Exponents pure{};
        pure[2] = (r1 + r2) / a;
        rep.cond_d = !g_poly.coefficient(pure).is_zero();
        if (!rep.cond_d) os << "(d) fails: x3^" << (r1 + r2) / a << " absent; ";
    }
    rep.detail = os.str();
    return rep;
}

Lemma67Report lemma67(long long n, long long b, long long bprime, long long a,
                      long long r1, long long r2) {
    Lemma67Report rep;
    if (n < 1 || a < 1 || r1 < 1 || r2 < 1) return rep;
    bool hyp = residue(b * bprime - 1, n) == 0;
    hyp = hyp && residue(a - b * r1, n) == 0;
    hyp = hyp && residue(r1 + r2, a * n) == 0;
    if (hyp) hyp = gcd_ll((a - b * r1) / n, r1) == 1;
    rep.hypotheses_met = hyp;
    if (!hyp) return rep;
    rep.conclusion_r2 = gcd_ll((a + b * r2) / n, r2) == 1;
    rep.conclusion_r1_side = gcd_ll((r1 - bprime * a) / n, a) == 1;
    rep.conclusion_r2_side = gcd_ll((r2 + bprime * a) / n, a) == 1;
    return rep;
}

namespace {

Polynomial from_terms(int nvars, std::initializer_list<std::pair<Exponents, long long>> ts) {
    Polynomial p(nvars);
    for (const auto& [e, c] : ts) p.add_term(e, Rational(c));
    return p;
}

ExampleRecord record_cE2() {
    ExampleRecord rec;
    rec.id = rec.base_id = "5.4";
    rec.germ.dim = 4;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    rec.germ.equations = {from_terms(4, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 0, 0, 3, 0}, 1},
                                         {{0, 1, 3, 1, 0}, 1},
                                         {{0, 4, 0, 0, 0}, 1},
                                         {{0, 0, 8, 0, 0}, 1}})};
    rec.weights.w = {Rational(4), Rational(2), Rational(1), Rational(3)};
    rec.claimed_discrepancy = Rational(1);
    rec.claimed_type_no = 8;
    rec.claimed_J = {{6, 2}, {2, 1}};
    rec.claimed_b = {5, 1};
    rec.a = 2;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}}, {0, {0, 0, 0, 3, 0}}};
    return rec;
}

// five-variable germ over 1/2(1,1,1,0,0), discrepancy 1, row 14, r' odd
ExampleRecord record_cD2_14_disc1(long long rp) {
    ExampleRecord rec;
    rec.base_id = "5.5";
    rec.id = "5.5(r'=" + std::to_string(rp) + ")";
    rec.germ.dim = 5;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    rec.germ.equations = {from_terms(5, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 0, 0, 1, 1}, 1},
                                         {{0, 0, rp + 1, 0, 0}, 1}}),
                          from_terms(5, {{{0, 2, 0, 0, 0}, 1},
                                         {{0, 0, rp - 1, 0, 0}, 1},
                                         {{0, 0, 0, rp - 1, 0}, 1},
                                         {{0, 0, 0, 0, 1}, 1}})};
    rec.weights.w = {Rational(rp + 1, 2), Rational(rp - 1, 2), Rational(1), Rational(1),
                     Rational(rp)};
    rec.claimed_discrepancy = Rational(1);
    rec.claimed_type_no = 14;
    rec.claimed_J = {{2 * rp, 2}};
    rec.claimed_b = {rp + 2};
    rec.a = 2;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 0, 0, 1, 1}},
                    {1, {0, 2, 0, 0, 0}},
                    {1, {0, 0, 0, 0, 1}}};
    return rec;
}

ExampleRecord record_cD2_15a_quartic() {
    ExampleRecord rec;
    rec.id = rec.base_id = "5.6-1";
    rec.germ.dim = 4;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    rec.germ.equations = {from_terms(4, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 1, 1, 1, 0}, 1},
                                         {{0, 4, 0, 0, 0}, 1},
                                         {{0, 0, 4, 0, 0}, 1},
                                         {{0, 0, 0, 4, 0}, 1}})};
    rec.weights.w = {Rational(2), Rational(2), Rational(1), Rational(1)};
    rec.claimed_discrepancy = Rational(1);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{4, 1}, {4, 1}};
    rec.claimed_b = {3, 3};
    rec.a = 2;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}}};
    return rec;
}

// r' even
ExampleRecord record_cD2_15a_even(long long rp) {
    ExampleRecord rec;
    rec.base_id = "5.6-2";
    rec.id = "5.6-2(r'=" + std::to_string(rp) + ")";
    rec.germ.dim = 4;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    rec.germ.equations = {from_terms(4, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 2, 0, 1, 0}, 1},
                                         {{0, 0, 2 * rp, 0, 0}, 1},
                                         {{0, 0, 0, 2 * rp, 0}, 1}})};
    rec.weights.w = {Rational(rp), Rational(rp), Rational(1), Rational(1)};
    rec.claimed_discrepancy = Rational(1);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{2 * rp, 1}, {2 * rp, 1}};
    rec.claimed_b = {rp + 1, rp + 1};
    rec.a = 2;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}}, {0, {0, 2, 0, 1, 0}}};
    return rec;
}

// discrepancy 2, row 14; variant 1 needs r' = 1 mod 8, variant 2 needs
// r' = 7 mod 8
ExampleRecord record_cD2_14_disc2(long long rp, int variant) {
    ExampleRecord rec;
    rec.base_id = variant == 1 ? "5.7-1" : "5.7-2";
    rec.id = rec.base_id + "(r'=" + std::to_string(rp) + ")";
    rec.germ.dim = 5;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    if (variant == 1) {
        rec.germ.equations = {from_terms(5, {{{2, 0, 0, 0, 0}, 1},
                                             {{0, 0, 0, 1, 1}, 1},
                                             {{0, 1, (rp + 3) / 4, 0, 0}, 1}}),
                              from_terms(5, {{{0, 2, 0, 0, 0}, 1},
                                             {{0, 0, (rp - 1) / 2, 0, 0}, 1},
                                             {{0, 0, 0, rp - 1, 0}, 1},
                                             {{0, 0, 0, 0, 1}, 1}})};
    } else {
        rec.germ.equations = {from_terms(5, {{{2, 0, 0, 0, 0}, 1},
                                             {{0, 0, 0, 1, 1}, 1},
                                             {{0, 0, (rp + 1) / 2, 0, 0}, 1}}),
                              from_terms(5, {{{0, 2, 0, 0, 0}, 1},
                                             {{1, 0, (rp - 3) / 4, 0, 0}, 1},
                                             {{0, 0, 0, rp - 1, 0}, 1},
                                             {{0, 0, 0, 0, 1}, 1}})};
    }
    rec.weights.w = {Rational(rp + 1, 2), Rational(rp - 1, 2), Rational(2), Rational(1),
                     Rational(rp)};
    rec.claimed_discrepancy = Rational(2);
    rec.claimed_type_no = 14;
    rec.claimed_J = {{2 * rp, 2}};
    rec.claimed_b = {rp + 4};
    rec.a = 4;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 0, 0, 1, 1}},
                    {1, {0, 2, 0, 0, 0}},
                    {1, {0, 0, 0, 0, 1}}};
    return rec;
}

// hypersurface over 1/2(1,1,1,0), discrepancy a/2, row 15; a | r+1, a and r odd
ExampleRecord record_cD2_15pp_hyper(long long a, long long r) {
    ExampleRecord rec;
    rec.base_id = "7.1-1";
    rec.id = "7.1-1(a=" + std::to_string(a) + ",r=" + std::to_string(r) + ")";
    rec.germ.dim = 4;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 0};
    rec.germ.equations = {from_terms(4, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 2, 0, 1, 0}, 1},
                                         {{0, 0, 2 * (r + 1) / a, 0, 0}, 1},
                                         {{0, 0, 0, r + 1, 0}, 1}})};
    rec.weights.w = {Rational(r + 2, 2), Rational(r, 2), Rational(a, 2), Rational(1)};
    rec.claimed_discrepancy = Rational(a, 2);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{r, 1}, {r + 2, 1}};
    rec.claimed_b = {residue((a + r) / 2, r), residue((a + r + 2) / 2, r + 2)};
    rec.a = a;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 2, 0, 1, 0}},
                    {0, {0, 0, 2 * (r + 1) / a, 0, 0}}};
    return rec;
}

// complete intersection over 1/2(1,1,1,0,1); a | r+2 with (r+2)/a odd
ExampleRecord record_cD2_15pp_ci(long long a, long long r) {
    ExampleRecord rec;
    rec.base_id = "7.1-2";
    rec.id = "7.1-2(a=" + std::to_string(a) + ",r=" + std::to_string(r) + ")";
    rec.germ.dim = 5;
    rec.germ.n = 2;
    rec.germ.action = {1, 1, 1, 0, 1};
    rec.germ.equations = {from_terms(5, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 1, 0, 0, 1}, 1},
                                         {{0, 0, 0, r + 2, 0}, 1}}),
                          from_terms(5, {{{0, 1, 0, 1, 0}, 1},
                                         {{0, 0, (r + 2) / a, 0, 0}, 1},
                                         {{0, 0, 0, 0, 1}, 1}})};
    rec.weights.w = {Rational(r + 2, 2), Rational(r, 2), Rational(a, 2), Rational(1),
                     Rational(r + 4, 2)};
    rec.claimed_discrepancy = Rational(a, 2);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{r, 1}, {r + 4, 1}};
    rec.claimed_b = {residue((a + r) / 2, r), residue((a + r + 4) / 2, r + 4)};
    rec.a = a;
    rec.n = 2;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 1, 0, 0, 1}},
                    {1, {0, 1, 0, 1, 0}},
                    {1, {0, 0, (r + 2) / a, 0, 0}},
                    {1, {0, 0, 0, 0, 1}}};
    return rec;
}

// Gorenstein hypersurface (n = 1), discrepancy a; a | 2r+1
ExampleRecord record_cD_hyper(long long a, long long r) {
    ExampleRecord rec;
    rec.base_id = "e-1";
    rec.id = "e-1(a=" + std::to_string(a) + ",r=" + std::to_string(r) + ")";
    rec.germ.dim = 4;
    rec.germ.n = 1;
    rec.germ.action = {0, 0, 0, 0, 0};
    rec.germ.equations = {from_terms(4, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 2, 0, 1, 0}, 1},
                                         {{0, 0, (2 * r + 1) / a, 0, 0}, 1},
                                         {{0, 0, 0, 2 * r + 1, 0}, 1}})};
    rec.weights.w = {Rational(r + 1), Rational(r), Rational(a), Rational(1)};
    rec.claimed_discrepancy = Rational(a);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{r, 1}, {r + 1, 1}};
    rec.claimed_b = {residue(a, r), residue(a, r + 1)};
    rec.a = a;
    rec.n = 1;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 2, 0, 1, 0}},
                    {0, {0, 0, (2 * r + 1) / a, 0, 0}}};
    return rec;
}

// Gorenstein complete intersection (n = 1), discrepancy a; a | r+1
ExampleRecord record_cD_ci(long long a, long long r) {
    ExampleRecord rec;
    rec.base_id = "e-2";
    rec.id = "e-2(a=" + std::to_string(a) + ",r=" + std::to_string(r) + ")";
    rec.germ.dim = 5;
    rec.germ.n = 1;
    rec.germ.action = {0, 0, 0, 0, 0};
    rec.germ.equations = {from_terms(5, {{{2, 0, 0, 0, 0}, 1},
                                         {{0, 1, 0, 0, 1}, 1},
                                         {{0, 0, 0, 2 * r + 2, 0}, 1}}),
                          from_terms(5, {{{0, 1, 0, 1, 0}, 1},
                                         {{0, 0, (r + 1) / a, 0, 0}, 1},
                                         {{0, 0, 0, 0, 1}, 1}})};
    rec.weights.w = {Rational(r + 1), Rational(r), Rational(a), Rational(1), Rational(r + 2)};
    rec.claimed_discrepancy = Rational(a);
    rec.claimed_type_no = 15;
    rec.claimed_J = {{r, 1}, {r + 2, 1}};
    rec.claimed_b = {residue(a, r), residue(a, r + 2)};
    rec.a = a;
    rec.n = 1;
    rec.required = {{0, {2, 0, 0, 0, 0}},
                    {0, {0, 1, 0, 0, 1}},
                    {1, {0, 1, 0, 1, 0}},
                    {1, {0, 0, (r + 1) / a, 0, 0}},
                    {1, {0, 0, 0, 0, 1}}};
    return rec;
}

}  // namespace

QuotientGerm cAn_germ(long long n, long long b, const Polynomial& g) {
    QuotientGerm germ;
    germ.dim = 4;
    germ.n = n;
    germ.action = {residue(1, n), residue(n - 1, n), residue(b, n), 0, 0};
    Polynomial eq(4);
    eq.add_term(Exponents{1, 1, 0, 0, 0}, Rational(1));
    for (const auto& t : g.terms()) eq.add_term(t.exp, t.coeff);
    germ.equations = {eq};
    validate_germ(germ);
    return germ;
}

ExampleRecord make_cAn_record(long long n, long long b, long long a, long long r1,
                              long long r2, const Polynomial& g) {
    ExampleRecord rec;
    rec.base_id = "cAn";
    rec.id = "cAn(n=" + std::to_string(n) + ",b=" + std::to_string(b) + ",a="
             + std::to_string(a) + ",r1=" + std::to_string(r1) + ",r2=" + std::to_string(r2)
             + ")";
    rec.germ = cAn_germ(n, b, g);
    rec.weights.w = {Rational(r1, n), Rational(r2, n), Rational(a, n), Rational(1)};
    rec.claimed_discrepancy = Rational(a, n);
    for (long long r : {r1, r2}) {
        if (r < 2) continue;
        rec.claimed_J.emplace_back(r, 1);
        // any b' with e b' = 1 mod r for an e solving a e = n mod r
        long long chosen = 0;
        for (long long e = 1; e <= r && chosen == 0; ++e)
            if (residue(n - a * e, r) == 0 && gcd_ll(e, r) == 1) chosen = mod_inverse(e, r);
        if (chosen == 0)
            throw std::domain_error("make_cAn_record: no basket data for r=" + std::to_string(r));
        rec.claimed_b.push_back(chosen);
    }
    rec.claimed_type_no = match_type(rec.claimed_J);
    rec.a = a;
    rec.n = n;
    rec.is_cAn = true;
    rec.can_b = b;
    rec.required = {{0, {1, 1, 0, 0, 0}}};
    return rec;
}

const std::vector<ExampleRecord>& corpus() {
    static const std::vector<ExampleRecord> records = [] {
        std::vector<ExampleRecord> rs;
        rs.push_back(record_cE2());
        for (long long rp : {3, 5, 7}) rs.push_back(record_cD2_14_disc1(rp));
        rs.push_back(record_cD2_15a_quartic());
        for (long long rp : {2, 4, 6}) rs.push_back(record_cD2_15a_even(rp));
        for (long long rp : {9, 17, 25}) rs.push_back(record_cD2_14_disc2(rp, 1));
        for (long long rp : {7, 15, 23}) rs.push_back(record_cD2_14_disc2(rp, 2));
        rs.push_back(record_cD2_15pp_hyper(1, 3));
        rs.push_back(record_cD2_15pp_hyper(3, 5));
        rs.push_back(record_cD2_15pp_hyper(5, 9));
        rs.push_back(record_cD2_15pp_ci(3, 7));
        rs.push_back(record_cD2_15pp_ci(5, 13));
        rs.push_back(record_cD2_15pp_ci(3, 13));
        rs.push_back(record_cD_hyper(3, 4));
        rs.push_back(record_cD_hyper(3, 7));
        rs.push_back(record_cD_hyper(5, 7));
        rs.push_back(record_cD_ci(2, 3));
        rs.push_back(record_cD_ci(3, 5));
        rs.push_back(record_cD_ci(2, 7));
        // corpus equations are transcriptions: every monomial is data
        for (auto& rec : rs) {
            rec.required.clear();
            for (int eq = 0; eq < static_cast<int>(rec.germ.equations.size()); ++eq)
                for (const auto& t : rec.germ.equations[eq].terms())
                    rec.required.emplace_back(eq, t.exp);
        }
        return rs;
    }();
    return records;
}

ContractionProfile profile_of(const ExampleRecord& record) {
    std::vector<BasketEntry> basket;
    for (size_t k = 0; k < record.claimed_J.size(); ++k) {
        auto [r, v] = record.claimed_J[k];
        basket.push_back(make_entry(r, record.claimed_b[k], v, record.a, record.n));
    }
    Rational e3 = e_cubed(record.germ, record.weights);
    return solve_Ec2(record.a, record.n, std::move(basket), e3);
}

VerifyReport verify_example(const ExampleRecord& record) {
    VerifyReport rep;
    rep.id = record.id;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    try {
        validate_germ(record.germ);
        add("germ-valid", true, "");
    } catch (const std::exception& e) {
        add("germ-valid", false, e.what());
        rep.verdict = false;
        return rep;
    }

    try {
        bool prim = is_primitive(record.germ, record.weights);
        add("weights-primitive", prim, prim ? "" : "weight vector divisible in the lattice");
    } catch (const std::exception& e) {
        add("weights-primitive", false, e.what());
    }

    try {
        Rational disc = discrepancy(record.germ, record.weights);
        bool ok = disc == record.claimed_discrepancy;
        add("discrepancy", ok,
            "computed " + disc.str() + ", claimed " + record.claimed_discrepancy.str());
    } catch (const std::exception& e) {
        add("discrepancy", false, e.what());
    }

    try {
        Rational bridge = Rational(record.a, record.n) * e_cubed(record.germ, record.weights);
        Rational expected = row_value(record.claimed_J);
        bool ok = bridge == expected;
        add("e3-bridge", ok, "(a/n)E^3 = " + bridge.str() + ", row value " + expected.str());
    } catch (const std::exception& e) {
        add("e3-bridge", false, e.what());
    }

    try {
        int no = match_type(record.claimed_J);
        bool ok = no == record.claimed_type_no;
        add("type-shape", ok, "J matches row " + std::to_string(no));
    } catch (const std::exception& e) {
        add("type-shape", false, e.what());
    }

    try {
        (void)profile_of(record);
        add("basket-consistent", true, "");
    } catch (const std::exception& e) {
        add("basket-consistent", false, e.what());
    }

    {
        // terminal three-fold normal forms are hypersurface or complete
        // intersection germs of multiplicity at most two equation-wise
        bool ok = true;
        for (const auto& eq : record.germ.equations) {
            long long lowest = -1;
            for (const auto& t : eq.terms()) {
                long long deg = 0;
                for (int k = 0; k < record.germ.dim; ++k) deg += t.exp[k];
                if (lowest < 0 || deg < lowest) lowest = deg;
            }
            if (lowest > 2) ok = false;
        }
        add("multiplicity", ok, ok ? "" : "an equation has multiplicity > 2");
    }

    {
        bool ok = true;
        std::string detail;
        for (const auto& [eq, exp] : record.required) {
            if (eq >= static_cast<int>(record.germ.equations.size())
                || record.germ.equations[eq].coefficient(exp).is_zero()) {
                ok = false;
                detail += "missing " + monomial(record.germ.dim, exp).str() + "; ";
            }
        }
        add("required-monomials", ok, detail);
    }

    if (record.is_cAn) {
        try {
            Polynomial g(4);
            for (const auto& t : record.germ.equations[0].terms())
                if (t.exp != Exponents{1, 1, 0, 0, 0}) g.add_term(t.exp, t.coeff);
            long long r1 = (Rational(record.n) * record.weights.w[0]).num().get_si();
            long long r2 = (Rational(record.n) * record.weights.w[1]).num().get_si();
            CAnReport can = check_cAn(record.n, record.can_b, record.a, r1, r2, g);
            add("can-conditions", can.pass(), can.detail);
        } catch (const std::exception& e) {
            add("can-conditions", false, e.what());
        }
    }

    try {
        bool all_ok = true;
        std::string detail;
        for (int i = 1; i <= record.germ.dim; ++i) {
            ChartReport ch = chart(record.germ, record.weights, i);
            if (ch.verdict_meaningful && !ch.terminal_quotient) {
                all_ok = false;
                detail += "chart " + std::to_string(i) + " origin not terminal; ";
            }
        }
        add("chart-terminality", all_ok, detail);
    } catch (const std::exception& e) {
        add("chart-terminality", false, e.what());
    }

    rep.verdict = true;
    for (const auto& c : rep.checks) rep.verdict = rep.verdict && c.pass;
    return rep;
}

std::vector<Mutation> legal_mutations(const ExampleRecord& record) {
    std::vector<Mutation> out;
    for (int ei = 0; ei < static_cast<int>(record.germ.equations.size()); ++ei) {
        const auto& eq = record.germ.equations[ei];
        for (int ti = 0; ti < static_cast<int>(eq.size()); ++ti) {
            for (int vi = 0; vi < record.germ.dim; ++vi) {
                for (int delta : {+1, -1}) {
                    if (delta < 0 && eq.terms()[ti].exp[vi] == 0) continue;
                    out.push_back({false, ei, ti, vi, delta});
                }
            }
        }
    }
    for (int vi = 0; vi < record.germ.dim; ++vi) {
        for (int delta : {+1, -1}) {
            Rational moved = record.weights.w[vi] + Rational(delta, record.germ.n);
            if (!(moved > Rational(0))) continue;
            out.push_back({true, 0, 0, vi, delta});
        }
    }
    return out;
}

ExampleRecord apply_mutation(const ExampleRecord& record, const Mutation& m) {
    ExampleRecord out = record;
    if (m.on_weight) {
        out.weights.w[m.variable] += Rational(m.delta, record.germ.n);
        return out;
    }
    const auto& eq = record.germ.equations[m.equation];
    Polynomial mutated(eq.nvars());
    for (int ti = 0; ti < static_cast<int>(eq.size()); ++ti) {
        Term t = eq.terms()[ti];
        if (ti == m.term) t.exp[m.variable] += m.delta;
        mutated.add_term(t.exp, t.coeff);
    }
    out.germ.equations[m.equation] = mutated;
    return out;
}

bool mutation_escapes(const ExampleRecord& record, const Mutation& m) {
    try {
        ExampleRecord mutated = apply_mutation(record, m);
        return verify_example(mutated).verdict;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace threefold
