#include <doctest.h>

#include <algorithm>
#include <set>

#include "threefold/covering.hpp"

using namespace threefold;

TEST_CASE("d_cover") {
    // (4,2) entry with e = 2 under (a,n) = (2,8): residue 4 - 2 = 2
    CHECK(d_cover({4, 1, 2, 2}, 2, 8, 2) == 2);
    // etale companion (5,1) with e = 4: residue 4 - 4 = 0
    CHECK(d_cover({5, 1, 1, 4}, 2, 8, 2) == 0);
    // (6,2) entry of the degree-2 cover: residue 1 - 4 = 3
    CHECK(d_cover({6, 5, 2, 4}, 2, 2, 2) == 3);
    CHECK_THROWS_AS(d_cover({4, 1, 2, 2}, 3, 2, 2), std::domain_error);
    // p d = 0 mod r holds whenever n = a e mod r does
    for (long long e = 1; e <= 6; ++e) {
        if (residue(4 - 2 * e, 6) != 0) continue;
        long long dq = d_cover({6, 1, std::min(residue(e, 6), 6 - residue(e, 6)), e}, 2, 4, 2);
        CHECK(residue(2 * dq, 6) == 0);
    }
}

TEST_CASE("variation") {
    CHECK(variation(6, 3, 3, true) == std::vector<std::pair<long long, long long>>{{2, 1}});
    CHECK(variation(2, 1, 2, false)
          == std::vector<std::pair<long long, long long>>{{2, 1}, {2, 1}});
    for (long long rp : {5, 6, 9})
        CHECK(variation(2 * rp, 2, 2, true)
              == std::vector<std::pair<long long, long long>>{{rp, 2}});
    CHECK(variation(4, 2, 2, true) == std::vector<std::pair<long long, long long>>{{2, 0}});
    CHECK_THROWS_AS(variation(5, 2, 2, true), std::domain_error);
}

TEST_CASE("variation composition") {
    // a degree-pq cover acts like a p-cover followed by a q-cover
    for (long long r : {8, 12, 16, 24}) {
        for (long long v : {1, 2}) {
            auto once = variation(r, v, 4, true);
            auto mid = variation(r, v, 2, true);
            auto twice = variation(mid[0].first, mid[0].second, 2, true);
            CHECK(once == twice);
        }
    }
    // etale composition: p*q copies
    auto e6 = variation(3, 1, 6, false);
    CHECK(e6.size() == 6);
}

namespace {

struct PatternKey {
    int source_no;
    long long p;
    RVBasket target;
    bool operator<(const PatternKey& o) const {
        return std::tie(source_no, p, target) < std::tie(o.source_no, o.p, o.target);
    }
};

}  // namespace

TEST_CASE("prime covers over small indices") {
    auto rows = enumerate_prime_covers(8);
    std::set<PatternKey> keys;
    for (const auto& row : rows) {
        CHECK(Rational(row.p) * row.source_value == row.target_value);
        CHECK(row.target_value == row_value(row.target));
        keys.insert({row.source_no, row.p, row.target});
    }
    CHECK(keys.count({1, 3, {{2, 1}}}) == 1);
    CHECK(keys.count({2, 7, {}}) == 1);
    CHECK(keys.count({8, 2, {{2, 1}, {2, 1}, {3, 1}}}) == 1);
    CHECK(keys.count({8, 3, {{2, 1}, {2, 1}, {2, 1}}}) == 1);
    CHECK(keys.count({11, 3, {{2, 1}, {2, 1}, {2, 1}}}) == 1);
    CHECK(keys.count({12, 2, {{2, 1}, {3, 1}, {3, 1}}}) == 1);
    // the degree-2 cover of {(6,3)} scales the value to 1, matching no row
    for (const auto& row : rows) CHECK(!(row.source_no == 1 && row.p == 2));
    // only rows 1, 2, 4, 8, 10, 11, 12, 14, 15 carry covers
    std::set<int> sources;
    for (const auto& row : rows) sources.insert(row.source_no);
    CHECK(sources == std::set<int>{1, 2, 4, 8, 10, 11, 12, 14, 15});
}

TEST_CASE("c terms per entry") {
    // (4,2) with residue 2: only value 1/2
    CHECK(c_values_for(4, 2, 2) == std::vector<Rational>{Rational(1, 2)});
    // (2,1) with residue 1: 1/4
    CHECK(c_values_for(2, 1, 1) == std::vector<Rational>{Rational(1, 4)});
    // etale entries contribute 0
    CHECK(c_values_for(3, 1, 0) == std::vector<Rational>{Rational(0)});
    CHECK(c_values_for(7, 1, 0) == std::vector<Rational>{Rational(0)});
    // (4,1) with residue 2: 0 for b = 1, 1/2 for b = 3
    CHECK(c_values_for(4, 1, 2) == std::vector<Rational>{Rational(0), Rational(1, 2)});
    // direct evaluation through an entry
    CHECK(c_term({4, 1, 2, 2}, 2, 8, 2) == Rational(1, 2));
    CHECK(c_term({4, 3, 2, 2}, 2, 8, 2) == Rational(1, 2));
}

TEST_CASE("residue tuples of the degree-2 covers") {
    auto rows8 = cover_residue_rows(8);
    REQUIRE(rows8.size() == 5);
    CHECK(rows8[0].source_no == 4);
    CHECK(rows8[0].d == std::vector<long long>{2, 0});
    CHECK(rows8[0].globally_realizable);
    CHECK(rows8[1].source_no == 8);
    CHECK(rows8[1].d == std::vector<long long>{3, 0});
    CHECK(rows8[1].globally_realizable);
    CHECK(rows8[2].d == std::vector<long long>{0, 1, 4});
    CHECK(rows8[2].entrywise_realizable);
    CHECK_FALSE(rows8[2].globally_realizable);  // equal entries force d1 = d2
    CHECK(rows8[3].d == std::vector<long long>{1, 1, 0});
    CHECK(rows8[4].source_no == 12);
    CHECK(rows8[4].d == std::vector<long long>{1, 0, 2});
    CHECK(rows8[4].entrywise_realizable);

    // odd companion index: only the d1 = d2 = 1 assignment remains and a
    // global (a, n) exists for it
    auto rows3 = cover_residue_rows(3);
    bool found = false;
    for (const auto& row : rows3)
        if (row.source_no == 10) {
            CHECK(row.d == std::vector<long long>{1, 1, 0});
            CHECK(row.globally_realizable);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("eq16 sum") {
    // (2r',2) entry with b = r'+2, e = r'+1 under (a,n) = (2,2): value 1
    for (long long rp : {3, 5, 7, 9}) {
        auto p = solve_Ec2(2, 2, {make_entry(2 * rp, rp + 2, 2, 2, 2)},
                           Rational(2, rp));
        long long dq = d_cover(p.basket[0], 2, 2, 2);
        CHECK(dq == rp);  // totally ramified
        CHECK(eq16_lhs(p, 2) == Rational(1));
        // closed form sum v (r - (d b) mod r) / r
        Rational closed(0);
        for (const auto& entry : p.basket) {
            long long db = residue(dq * entry.b, entry.r);
            closed += Rational(entry.v * (entry.r - db), entry.r);
        }
        CHECK(eq16_lhs(p, 2) == closed);
    }
    // two (2r',1) entries with b = r'+1: also 1
    for (long long rp : {2, 4, 6}) {
        auto entry = make_entry(2 * rp, rp + 1, 1, 2, 2);
        auto p = solve_Ec2(2, 2, {entry, entry}, Rational(1, rp));
        CHECK(eq16_lhs(p, 2) == Rational(1));
    }
    auto podd = solve_Ec2(1, 1, {make_entry(9, 1, 1, 1, 1)}, Rational(10, 9));
    CHECK_THROWS_AS(eq16_lhs(podd, 2), std::domain_error);
}

TEST_CASE("coprime candidate pairs") {
    using P = std::vector<std::pair<long long, long long>>;
    CHECK(coprime_candidates(14, CandidateStage::integrality)
          == P{{2, 2}, {2, 4}, {2, 8}, {4, 2}});
    CHECK(coprime_candidates(15, CandidateStage::integrality) == P{{2, 2}, {2, 4}, {4, 2}});
    CHECK(coprime_candidates(14, CandidateStage::pruned) == P{{2, 2}, {4, 2}});
    CHECK(coprime_candidates(15, CandidateStage::pruned) == P{{2, 2}, {4, 2}});
    CHECK_THROWS_AS(coprime_candidates(9, CandidateStage::pruned), std::domain_error);
}
