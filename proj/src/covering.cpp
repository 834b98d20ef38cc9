#include "threefold/covering.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace threefold {

long long d_cover(const BasketEntry& entry, long long a, long long n, long long p) {
    if (p < 2 || a % p != 0 || n % p != 0)
        throw std::domain_error("d_cover: p must divide both a and n");
    return residue(n / p - entry.e * (a / p), entry.r);
}

std::vector<std::pair<long long, long long>> variation(long long r, long long v,
                                                       long long p, bool ramified) {
    if (r < 1 || v < 0 || 2 * v > r)
        throw std::domain_error("variation: need 0 <= v <= r/2");
    if (p < 2) throw std::domain_error("variation: p must be >= 2");
    if (!ramified)
        return std::vector<std::pair<long long, long long>>(p, {r, v});
    if (r % p != 0) throw std::domain_error("variation: ramified case needs p | r");
    long long rp = r / p;
    long long vr = residue(v, rp);
    return {{rp, std::min(vr, rp - vr)}};
}

namespace {

std::vector<long long> primes_up_to(long long m) {
    std::vector<long long> ps;
    for (long long k = 2; k <= m; ++k) {
        bool prime = true;
        for (long long q = 2; q * q <= k; ++q)
            if (k % q == 0) { prime = false; break; }
        if (prime) ps.push_back(k);
    }
    return ps;
}

// Transformed basket for a ramification bitmask; entries with v = 0 or
// r = 1 disappear.
RVBasket apply_cover(const RVBasket& J, long long p, unsigned mask) {
    RVBasket out;
    for (size_t k = 0; k < J.size(); ++k) {
        auto [r, v] = J[k];
        for (auto [r2, v2] : variation(r, v, p, (mask >> k) & 1u))
            if (r2 >= 2 && v2 >= 1) out.emplace_back(r2, v2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<CoverRow> enumerate_prime_covers(long long r_max) {
    auto sources = enumerate_baskets(r_max);
    auto primes = primes_up_to(r_max);
    std::vector<CoverRow> rows;
    for (const auto& src : sources) {
        int src_no = match_type(src.entries);
        for (long long p : primes) {
            std::set<RVBasket> seen;
            unsigned nmask = 1u << src.entries.size();
            for (unsigned mask = 0; mask < nmask; ++mask) {
                bool feasible = true;
                for (size_t k = 0; k < src.entries.size(); ++k)
                    if (((mask >> k) & 1u) && src.entries[k].first % p != 0) {
                        feasible = false;
                        break;
                    }
                if (!feasible) continue;
                RVBasket target = apply_cover(src.entries, p, mask);
                if (target.size() > 3) continue;
                int tgt_no;
                try {
                    tgt_no = match_type(target);
                } catch (const std::domain_error&) {
                    continue;
                }
                Rational scaled = Rational(p) * src.value;
                if (scaled != row_value(target)) continue;
                if (!seen.insert(target).second) continue;  // symmetric assignment
                rows.push_back({src_no, src.entries, p, mask, target, tgt_no,
                                src.value, scaled});
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const CoverRow& x, const CoverRow& y) {
        return std::tie(x.source_no, x.source, x.p, x.target)
             < std::tie(y.source_no, y.source, y.p, y.target);
    });
    return rows;
}

Rational c_term(const BasketEntry& entry, long long a, long long n, long long p) {
    long long dq = d_cover(entry, a, n, p);
    return -a_term(entry.r, entry.b, -entry.e) - a_term(entry.r, entry.b, dq)
           + a_term(entry.r, entry.b, dq - entry.e);
}

Rational eq16_lhs(const ContractionProfile& p, long long g) {
    if (g < 2) throw std::domain_error("eq16_lhs: g must be >= 2");
    if (p.a % g != 0 || p.n % g != 0)
        throw std::domain_error("eq16_lhs: g must divide both a and n");
    Rational acc;
    for (const auto& entry : p.basket) {
        long long dq = d_cover(entry, p.a, p.n, g);
        acc += b_term(entry.r, dq * entry.b) - b_term(entry.r, dq * entry.b - entry.v)
               + b_term(entry.r, -entry.v);
    }
    return acc;
}

namespace {

// (b, e) with gcd(b, r) = 1, (e b) mod r = v, n = a e mod r and
// (n/2 - e a/2) mod r = d for one even pair (a, n)?
bool entry_realizable(long long r, long long v, long long d,
                      long long half_a, long long half_n) {
    long long a = 2 * half_a, n = 2 * half_n;
    for (long long b = 1; b < r; ++b) {
        if (gcd_ll(b, r) != 1) continue;
        for (long long e = 1; e <= r; ++e) {
            if (residue(n - a * e, r) != 0) continue;
            if (residue(e * b, r) != v) continue;  // normalised form
            if (residue(half_n - e * half_a, r) == d) return true;
        }
    }
    return false;
}

// Each entry separately admits an assignment (its own (a, n) allowed).
bool tuple_entrywise_realizable(const RVBasket& J, const std::vector<long long>& want) {
    for (size_t k = 0; k < J.size(); ++k) {
        auto [r, v] = J[k];
        bool found = false;
        for (long long ha = 1; ha <= 2 * r && !found; ++ha)
            for (long long hn = 1; hn <= 2 * r && !found; ++hn)
                found = entry_realizable(r, v, want[k], ha, hn);
        if (!found) return false;
    }
    return true;
}

// One even (a, n) serves every entry at once.
bool tuple_globally_realizable(const RVBasket& J, const std::vector<long long>& want) {
    long long R = 1;
    for (auto [r, v] : J) R = lcm_ll(R, r);
    for (long long half_a = 1; half_a <= 2 * R; ++half_a) {
        for (long long half_n = 1; half_n <= 2 * R; ++half_n) {
            bool all = true;
            for (size_t k = 0; k < J.size() && all; ++k)
                all = entry_realizable(J[k].first, J[k].second, want[k], half_a, half_n);
            if (all) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<CoverResidueRow> cover_residue_rows(long long param_r) {
    if (param_r < 2) throw std::domain_error("cover_residue_rows: r must be >= 2");
    std::vector<std::pair<int, RVBasket>> sources = {
        {4, {{4, 2}, {param_r, 1}}},
        {8, {{6, 2}, {2, 1}}},
        {10, {{2, 1}, {2, 1}, {param_r, 1}}},
        {12, {{2, 1}, {3, 1}, {4, 1}}},
    };

    std::vector<CoverResidueRow> rows;
    for (auto& [no, J] : sources) {
        // entries kept in the printed order (the v = 2 entry first where present)
        Rational value = row_value(J);
        std::set<std::vector<long long>> seen;
        unsigned nmask = 1u << J.size();
        for (unsigned mask = 0; mask < nmask; ++mask) {
            bool feasible = true;
            for (size_t k = 0; k < J.size(); ++k)
                if (((mask >> k) & 1u) && J[k].first % 2 != 0) { feasible = false; break; }
            if (!feasible || mask == 0) continue;
            RVBasket target = apply_cover(J, 2, mask);
            if (target.size() > 3) continue;
            try {
                (void)match_type(target);
            } catch (const std::domain_error&) {
                continue;
            }
            if (Rational(2) * value != row_value(target)) continue;
            // residue tuple: r/2 at ramified entries, 0 at etale ones,
            // canonicalised ascending within runs of equal (r, v)
            std::vector<long long> d(J.size(), 0);
            for (size_t k = 0; k < J.size(); ++k)
                if ((mask >> k) & 1u) d[k] = J[k].first / 2;
            for (size_t k = 0; k + 1 < J.size();) {
                size_t end = k + 1;
                while (end < J.size() && J[end] == J[k]) ++end;
                std::sort(d.begin() + k, d.begin() + end);
                k = end;
            }
            if (!seen.insert(d).second) continue;
            rows.push_back({no, J, 2, d, tuple_entrywise_realizable(J, d),
                            tuple_globally_realizable(J, d)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const CoverResidueRow& x, const CoverResidueRow& y) {
        return std::tie(x.source_no, x.d) < std::tie(y.source_no, y.d);
    });
    return rows;
}

std::vector<Rational> c_values_for(long long r, long long v, long long d) {
    std::vector<Rational> out;
    for (long long b = 1; b < r; ++b) {
        if (gcd_ll(b, r) != 1) continue;
        for (long long e = 1; e <= r; ++e) {
            if (residue(e * b, r) != v) continue;
            bool witnessed = false;
            for (long long ha = 1; ha <= 2 * r && !witnessed; ++ha)
                for (long long hn = 1; hn <= 2 * r && !witnessed; ++hn)
                    witnessed = residue(2 * hn - 2 * ha * e, r) == 0
                                && residue(hn - e * ha, r) == d;
            if (!witnessed) continue;
            Rational c = -a_term(r, b, -e) - a_term(r, b, d) + a_term(r, b, d - e);
            if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<long long, long long>> coprime_candidates(int type_no,
                                                                CandidateStage stage) {
    if (type_no != 14 && type_no != 15)
        throw std::domain_error("coprime_candidates: only rows 14 and 15 carry covers");
    // representative concrete baskets; the two integrality values are
    // independent of the parametric even r
    RVBasket J = (type_no == 14) ? RVBasket{{6, 2}} : RVBasket{{4, 1}, {4, 1}};
    long long v = (type_no == 14) ? 2 : 1;

    std::vector<std::pair<long long, long long>> out;
    for (long long ap = 1; ap <= 8; ++ap) {
        for (long long np = 1; np <= 8; ++np) {
            if (gcd_ll(ap, np) != 1) continue;
            long long a = 2 * ap, n = 2 * np;
            if (!integrality_filter(J, a, n)) continue;
            if (stage == CandidateStage::pruned && np > 1) {
                // exclusion through d(2,0) - d(1,0): keep the pair only if
                // some admissible (r, b, e) with the degree-2 cover totally
                // ramified (residue r/2) makes the difference an integer
                bool witness = false;
                for (long long r = 4; r <= 64 && !witness; r += 2) {
                    for (long long b = 1; b < r && !witness; ++b) {
                        if (gcd_ll(b, r) != 1) continue;
                        for (long long e = 1; e <= r && !witness; ++e) {
                            if (residue(n - a * e, r) != 0) continue;
                            long long eb = residue(e * b, r);
                            if (std::min(eb, r - eb) != v) continue;
                            if (residue(np - e * ap, r) != r / 2) continue;
                            std::vector<BasketEntry> basket;
                            long long bb = (2 * eb > r) ? r - b : b;
                            basket.push_back(BasketEntry{r, bb, v, e});
                            if (type_no == 15) basket.push_back(basket.front());
                            Rational val = (type_no == 14) ? Rational(4, r)
                                                           : Rational(2, r);
                            auto prof = solve_Ec2(a, n, basket, Rational(n, a) * val);
                            if (d_difference(prof, 1, 0).is_integer()) witness = true;
                        }
                    }
                }
                if (!witness) continue;
            }
            out.emplace_back(a, n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace threefold
