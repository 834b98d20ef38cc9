#include "threefold/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "threefold/classification.hpp"
#include "threefold/covering.hpp"
#include "threefold/jsonio.hpp"
#include "threefold/latdim.hpp"
#include "threefold/verifier.hpp"

namespace threefold {

namespace {

std::string rv_str(const RVBasket& J) {
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < J.size(); ++k) {
        if (k) os << ",";
        os << "(" << J[k].first << "," << J[k].second << ")";
    }
    os << "}";
    return os.str();
}

json rv_json(const RVBasket& J) {
    json out = json::array();
    for (auto [r, v] : J) out.push_back({{"r", r}, {"v", v}});
    return out;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void emit(std::ostream& out, const std::string& text, const std::string& golden_out) {
    if (golden_out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(golden_out);
    if (!f) throw std::runtime_error("cannot write file: " + golden_out);
    f << text;
}

}  // namespace

std::string format_baskets_text(long long r_max) {
    auto rows = enumerate_baskets(r_max);
    std::vector<std::pair<int, const EnumeratedBasket*>> tagged;
    for (const auto& row : rows) tagged.emplace_back(match_type(row.entries), &row);
    std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first, x.second->entries) < std::tie(y.first, y.second->entries);
    });
    std::ostringstream os;
    os << "# baskets J with sum v(r-v)/(2r) < 1, value = (a/n)E^3 = 2(1 - sum); rmax="
       << r_max << "\n";
    int current = 0;
    for (const auto& [no, row] : tagged) {
        if (no != current) {
            os << "## type " << no << "\n";
            current = no;
        }
        os << "no " << no << ": " << rv_str(row->entries) << " -> " << row->value.str()
           << "\n";
    }
    return os.str();
}

std::string format_covers_text(long long r_max) {
    auto rows = enumerate_prime_covers(r_max);
    std::ostringstream os;
    os << "# degree-p covers between classification baskets; value scales by p; rmax="
       << r_max << "\n";
    for (const auto& row : rows) {
        os << "no " << row.source_no << " " << rv_str(row.source) << " p=" << row.p
           << " ram={";
        bool first = true;
        for (size_t k = 0; k < row.source.size(); ++k) {
            if (!((row.ramified >> k) & 1u)) continue;
            if (!first) os << ",";
            os << (k + 1);
            first = false;
        }
        os << "} => no " << row.target_no << " " << rv_str(row.target) << " value "
           << row.source_value.str() << " -> " << row.target_value.str() << "\n";
    }
    return os.str();
}

std::string format_residues_text(long long param_r) {
    auto rows = cover_residue_rows(param_r);
    std::ostringstream os;
    os << "# residues (n/2 - e a/2) mod r per entry for degree-2 covers; parametric r="
       << param_r << "\n";
    for (const auto& row : rows) {
        os << "no " << row.source_no << " " << rv_str(row.source) << " p=2 d=(";
        for (size_t k = 0; k < row.d.size(); ++k) {
            if (k) os << ",";
            os << row.d[k];
        }
        os << ") entrywise=" << (row.entrywise_realizable ? "yes" : "no")
           << " global=" << (row.globally_realizable ? "yes" : "no") << "\n";
    }
    return os.str();
}

namespace {

int cmd_baskets(std::ostream& out, long long r_max, bool as_json,
                const std::string& golden_out) {
    if (as_json) {
        auto rows = enumerate_baskets(r_max);
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"type", match_type(row.entries)},
                           {"J", rv_json(row.entries)},
                           {"value", rational_json(row.value)}});
        emit(out, json{{"rmax", r_max}, {"baskets", arr}}.dump(2) + "\n", golden_out);
    } else {
        emit(out, format_baskets_text(r_max), golden_out);
    }
    return 0;
}

int cmd_covers(std::ostream& out, long long r_max, long long residues_r, bool as_json,
               const std::string& golden_out) {
    if (residues_r > 0) {
        if (as_json) {
            json arr = json::array();
            for (const auto& row : cover_residue_rows(residues_r))
                arr.push_back({{"type", row.source_no},
                               {"J", rv_json(row.source)},
                               {"p", row.p},
                               {"d", row.d},
                               {"entrywise_realizable", row.entrywise_realizable},
                               {"globally_realizable", row.globally_realizable}});
            emit(out, json{{"r", residues_r}, {"residues", arr}}.dump(2) + "\n", golden_out);
        } else {
            emit(out, format_residues_text(residues_r), golden_out);
        }
        return 0;
    }
    if (as_json) {
        json arr = json::array();
        for (const auto& row : enumerate_prime_covers(r_max)) {
            json ram = json::array();
            for (size_t k = 0; k < row.source.size(); ++k)
                if ((row.ramified >> k) & 1u) ram.push_back(k + 1);
            arr.push_back({{"source_type", row.source_no},
                           {"J", rv_json(row.source)},
                           {"p", row.p},
                           {"ramified", ram},
                           {"target_type", row.target_no},
                           {"J_target", rv_json(row.target)},
                           {"value", rational_json(row.source_value)},
                           {"value_target", rational_json(row.target_value)}});
        }
        emit(out, json{{"rmax", r_max}, {"covers", arr}}.dump(2) + "\n", golden_out);
    } else {
        emit(out, format_covers_text(r_max), golden_out);
    }
    return 0;
}

int cmd_rr(std::ostream& out, const std::string& path, long long imax, bool as_json) {
    ContractionProfile profile = profile_from_json(json::parse(slurp(path)));
    bool integral = true;
    json values = json::array();
    std::ostringstream text;
    text << "profile: a=" << profile.a << " n=" << profile.n
         << " E3=" << profile.e_cubed.str() << " e_c2=" << profile.e_c2.str() << "\n";
    for (long long i = -imax; i <= imax; ++i) {
        for (long long j = -imax; j <= imax; ++j) {
            Rational v = d(profile, i, j);
            if (!v.is_integer()) integral = false;
            if (as_json)
                values.push_back({{"i", i}, {"j", j}, {"d", rational_json(v)}});
            else
                text << "d(" << i << "," << j << ") = " << v.str() << "\n";
        }
    }
    text << (integral ? "all values integral\n"
                      : "warning: non-integer values (numerically inconsistent profile)\n");
    if (as_json) {
        json doc = profile_to_json(profile);
        doc["values"] = values;
        doc["integral"] = integral;
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return 0;
}

int cmd_blowup(std::ostream& out, const std::string& germ_path, const std::string& weights_str,
               bool as_json) {
    QuotientGerm germ = parse_germ(slurp(germ_path));
    BlowupWeights w{parse_weight_list(weights_str)};
    if (static_cast<int>(w.w.size()) != germ.dim)
        throw std::runtime_error("expected " + std::to_string(germ.dim) + " weights");
    if (!is_primitive(germ, w))
        throw std::runtime_error("weight vector is not primitive in the lattice");

    Rational disc = discrepancy(germ, w);
    Rational e3 = e_cubed(germ, w);
    std::vector<ChartReport> charts;
    for (int i = 1; i <= germ.dim; ++i) charts.push_back(chart(germ, w, i));

    if (as_json) {
        json jcharts = json::array();
        for (const auto& ch : charts) jcharts.push_back(chart_report_to_json(ch));
        json doc = {{"germ", print_germ(germ)},
                    {"discrepancy", rational_json(disc)},
                    {"E3", rational_json(e3)},
                    {"charts", jcharts}};
        json orders = json::array();
        for (const auto& eq : germ.equations)
            orders.push_back(rational_json(weighted_order(eq, w)));
        doc["weighted_orders"] = orders;
        doc["assumptions"] = unchecked_hypotheses();
        out << doc.dump(2) << "\n";
    } else {
        out << print_germ(germ);
        out << "discrepancy = " << disc.str() << "\n";
        out << "E^3 = " << e3.str() << "\n";
        for (const auto& ch : charts) {
            out << "chart " << ch.chart_index << ": ";
            if (!ch.cyclic) {
                out << "non-cyclic abelian quotient of order " << ch.order;
            } else {
                out << "1/" << ch.order << "(";
                for (size_t k = 0; k < ch.weights.size(); ++k) {
                    if (k) out << ",";
                    out << ch.weights[k];
                }
                out << ")";
            }
            out << (ch.origin_on_strict_transform ? " origin on strict transform"
                                                  : " origin off strict transform");
            if (ch.verdict_meaningful)
                out << (ch.terminal_quotient ? " terminal" : " NOT terminal");
            else
                out << " (no quotient-point verdict)";
            out << "\n";
        }
        out << "assumed, not checked:\n";
        for (const auto& h : unchecked_hypotheses()) out << "  - " << h << "\n";
    }
    return 0;
}

int cmd_verify(std::ostream& out, const std::string& example_id, bool as_json,
               long long mutations, unsigned long long seed) {
    std::vector<ExampleRecord> selected;
    for (const auto& rec : corpus())
        if (example_id.empty() || rec.id == example_id || rec.base_id == example_id)
            selected.push_back(rec);
    if (selected.empty()) throw std::runtime_error("no example with id '" + example_id + "'");

    bool all_pass = true;
    json jreports = json::array();
    std::ostringstream text;
    for (const auto& rec : selected) {
        VerifyReport rep = verify_example(rec);
        all_pass = all_pass && rep.verdict;
        if (as_json) {
            jreports.push_back(verify_report_to_json(rep));
        } else {
            text << rep.id << ": " << (rep.verdict ? "PASS" : "FAIL") << "\n";
            for (const auto& c : rep.checks)
                if (!c.pass) text << "  " << c.name << ": " << c.detail << "\n";
        }
    }

    json jmut;
    if (mutations > 0) {
        std::mt19937_64 rng(seed);
        long long caught = 0, total = 0;
        for (long long k = 0; k < mutations; ++k) {
            const auto& rec = selected[rng() % selected.size()];
            auto muts = legal_mutations(rec);
            const Mutation& m = muts[rng() % muts.size()];
            ++total;
            if (!mutation_escapes(rec, m)) ++caught;
        }
        jmut = {{"sampled", total}, {"caught", caught}};
        if (!as_json)
            text << "mutations: " << caught << "/" << total << " caught\n";
    }

    if (as_json) {
        json doc = {{"reports", jreports}, {"all_pass", all_pass}};
        if (!jmut.is_null()) doc["mutations"] = jmut;
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
    }
    return all_pass ? 0 : 1;
}

int cmd_dims(std::ostream& out, long long a, long long r1, long long r2, long long imax,
             bool allow_inadmissible, bool as_json) {
    DimParams p{a, r1, r2};
    auto why = admissibility_failure(p);
    if (why && !allow_inadmissible)
        throw std::runtime_error("inadmissible parameters: " + *why
                                 + " (pass --allow-inadmissible to run anyway)");
    DimCheck check;
    try {
        check = check_lemma_dim(p, imax, allow_inadmissible);
    } catch (const std::domain_error& e) {
        // reported, not asserted: the comparison profile cannot be built
        if (as_json) {
            out << json{{"a", a}, {"r1", r1}, {"r2", r2},
                        {"admissible", false}, {"constructible", false},
                        {"admissibility", *why}}.dump(2)
                << "\n";
        } else {
            out << "params a=" << a << " r1=" << r1 << " r2=" << r2 << "\n"
                << "inadmissible: " << *why << "\n"
                << "no comparison profile: " << e.what() << "\n";
        }
        return 0;
    }
    if (as_json) {
        json doc = {{"a", a},          {"r1", r1},
                    {"r2", r2},        {"imax", imax},
                    {"admissible", !why}, {"ok", check.ok}};
        if (why) doc["admissibility"] = *why;
        if (check.counterexample) {
            const auto& ce = *check.counterexample;
            doc["counterexample"] = {{"i2", ce.i2},
                                     {"j", ce.j},
                                     {"count", ce.count},
                                     {"recursion", ce.recursion},
                                     {"riemann_roch", rational_json(ce.riemann_roch)}};
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "params a=" << a << " r1=" << r1 << " r2=" << r2 << " imax=" << imax << "\n";
        if (why) out << "inadmissible: " << *why << "\n";
        if (check.ok) {
            out << "count = recursion = riemann-roch on the whole grid\n";
        } else {
            const auto& ce = *check.counterexample;
            out << "MISMATCH at i=" << ce.i2 << "/2 j=" << ce.j << ": count=" << ce.count
                << " recursion=" << ce.recursion
                << " riemann-roch=" << ce.riemann_roch.str() << "\n";
        }
    }
    if (why) return 0;  // reported, not asserted
    return check.ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for three-fold divisorial contraction data"};
    app.require_subcommand(1);

    long long rmax = 16;
    long long residues_r = 0;
    bool as_json = false;
    std::string golden_out;
    std::string profile_path;
    long long imax = 5;
    std::string germ_path, weights_str;
    std::string example_id;
    long long mutations = 0;
    unsigned long long seed = 20240901ULL;
    long long dim_a = 3, dim_r1 = 5, dim_r2 = 7, dim_imax = 40;
    bool allow_inadmissible = false;

    auto* baskets = app.add_subcommand("baskets", "enumerate classification baskets");
    baskets->add_option("--rmax", rmax, "largest local index")->check(CLI::Range(2LL, 512LL));
    baskets->add_flag("--json", as_json, "emit one JSON document");
    baskets->add_option("--golden-out", golden_out, "write output to this file");

    auto* covers = app.add_subcommand("covers", "enumerate degree-p covers between baskets");
    covers->add_option("--rmax", rmax, "largest local index")->check(CLI::Range(2LL, 512LL));
    covers->add_option("--residues", residues_r,
                       "emit the degree-2 residue table for this parametric r instead");
    covers->add_flag("--json", as_json, "emit one JSON document");
    covers->add_option("--golden-out", golden_out, "write output to this file");

    auto* rr = app.add_subcommand("rr", "evaluate d(i,j) on a profile");
    rr->add_option("--profile", profile_path, "profile JSON file, or - for stdin")->required();
    rr->add_option("--imax", imax, "grid radius")->check(CLI::Range(0LL, 64LL));
    rr->add_flag("--json", as_json, "emit one JSON document");

    auto* blowup = app.add_subcommand("blowup", "weighted blow-up of a quotient germ");
    blowup->add_option("--germ", germ_path, "germ description file, or - for stdin")->required();
    blowup->add_option("--weights", weights_str, "comma-separated weights, e.g. 4,2,1,3")
        ->required();
    blowup->add_flag("--json", as_json, "emit one JSON document");

    auto* verify = app.add_subcommand("verify", "verify the built-in example corpus");
    verify->add_option("--example", example_id, "run one example (id or instance id)");
    verify->add_option("--mutations", mutations, "also sample this many single-site mutations");
    verify->add_option("--seed", seed, "seed for mutation sampling");
    verify->add_flag("--json", as_json, "emit one JSON document");

    auto* dims = app.add_subcommand("dims", "three-way graded dimension check");
    dims->add_option("--a", dim_a, "discrepancy numerator (index 2)")->required();
    dims->add_option("--r1", dim_r1, "first local index")->required();
    dims->add_option("--r2", dim_r2, "second local index")->required();
    dims->add_option("--imax", dim_imax, "check all half-integers i <= imax");
    dims->add_flag("--allow-inadmissible", allow_inadmissible,
                   "report instead of rejecting inadmissible parameters");
    dims->add_flag("--json", as_json, "emit one JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (baskets->parsed()) return cmd_baskets(out, rmax, as_json, golden_out);
        if (covers->parsed()) return cmd_covers(out, rmax, residues_r, as_json, golden_out);
        if (rr->parsed()) return cmd_rr(out, profile_path, imax, as_json);
        if (blowup->parsed()) return cmd_blowup(out, germ_path, weights_str, as_json);
        if (verify->parsed()) return cmd_verify(out, example_id, as_json, mutations, seed);
        if (dims->parsed())
            return cmd_dims(out, dim_a, dim_r1, dim_r2, dim_imax, allow_inadmissible, as_json);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace threefold
