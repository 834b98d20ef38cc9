#include "threefold/jsonio.hpp"

namespace threefold {

json rational_json(const Rational& q) { return q.str(); }

json profile_to_json(const ContractionProfile& p) {
    json basket = json::array();
    for (const auto& entry : p.basket)
        basket.push_back({{"r", entry.r}, {"b", entry.b}, {"v", entry.v}, {"e", entry.e}});
    return {{"a", p.a},
            {"n", p.n},
            {"E3", rational_json(p.e_cubed)},
            {"e_c2", rational_json(p.e_c2)},
            {"basket", basket}};
}

ContractionProfile profile_from_json(const json& j) {
    long long a = j.at("a").get<long long>();
    long long n = j.at("n").get<long long>();
    Rational e3 = Rational::parse(j.at("E3").get<std::string>());
    std::vector<BasketEntry> basket;
    for (const auto& it : j.at("basket")) {
        BasketEntry entry;
        entry.r = it.at("r").get<long long>();
        entry.b = it.at("b").get<long long>();
        entry.v = it.at("v").get<long long>();
        entry.e = it.at("e").get<long long>();
        basket.push_back(entry);
    }
    return solve_Ec2(a, n, std::move(basket), e3);
}

json chart_report_to_json(const ChartReport& ch) {
    json out = {{"chart", ch.chart_index},
                {"cyclic", ch.cyclic},
                {"order", ch.order},
                {"origin_on_strict_transform", ch.origin_on_strict_transform}};
    if (ch.cyclic) {
        out["weights"] = ch.weights;
    } else {
        json inv = json::array();
        for (const auto& d : ch.invariants) inv.push_back(d.get_str());
        out["invariant_factors"] = inv;
    }
    out["strict_transform_smooth"] = ch.strict_transform_smooth;
    if (ch.verdict_meaningful) {
        out["terminal"] = ch.terminal_quotient;
        if (ch.origin_on_strict_transform)
            out["residual_weights"] = {ch.residual_weights[0], ch.residual_weights[1],
                                       ch.residual_weights[2]};
    } else {
        out["terminal"] = nullptr;
    }
    return out;
}

json verify_report_to_json(const VerifyReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"id", rep.id}, {"checks", checks}, {"verdict", rep.verdict}};
}

}  // namespace threefold
