#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "threefold/cli.hpp"
#include "threefold/jsonio.hpp"

#include "schema_check.hpp"

using namespace threefold;

namespace {

int run(std::initializer_list<const char*> args, std::string& out, std::string& err) {
    std::vector<const char*> argv = {"threefold"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream os, es;
    int rc = run_cli(static_cast<int>(argv.size()), argv.data(), os, es);
    out = os.str();
    err = es.str();
    return rc;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/threefold-test-" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("baskets matches the golden file") {
    std::string out, err;
    CHECK(run({"baskets", "--rmax", "16"}, out, err) == 0);
    CHECK(out == read_file(std::string(THREEFOLD_SOURCE_DIR) + "/data/table_baskets_r16.txt"));
}

TEST_CASE("covers matches the golden file") {
    std::string out, err;
    CHECK(run({"covers", "--rmax", "12"}, out, err) == 0);
    CHECK(out == read_file(std::string(THREEFOLD_SOURCE_DIR) + "/data/table_covers_r12.txt"));
}

TEST_CASE("cover residues match the golden file") {
    std::string out, err;
    CHECK(run({"covers", "--residues", "8"}, out, err) == 0);
    CHECK(out == read_file(std::string(THREEFOLD_SOURCE_DIR) + "/data/table_residues_r8.txt"));
}

TEST_CASE("baskets json contains the empty basket") {
    std::string out, err;
    CHECK(run({"baskets", "--rmax", "8", "--json"}, out, err) == 0);
    json doc = json::parse(out);
    bool has_empty = false;
    for (const auto& row : doc.at("baskets"))
        if (row.at("J").empty()) {
            has_empty = true;
            CHECK(row.at("value") == "2");
            CHECK(row.at("type") == 17);
        }
    CHECK(has_empty);
}

TEST_CASE("verify subcommand") {
    std::string out, err;
    CHECK(run({"verify", "--example", "5.4"}, out, err) == 0);
    CHECK(out == "5.4: PASS\n");
    CHECK(run({"verify"}, out, err) == 0);
    CHECK(run({"verify", "--example", "nonsense"}, out, err) == 2);
    CHECK(run({"verify", "--json"}, out, err) == 0);
    json doc = json::parse(out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("reports").size() == 26);
}

TEST_CASE("blowup subcommand") {
    std::string germ = write_temp("germ.txt",
                                  "quotient 1/2(1,1,1,0);\n"
                                  "eq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;\n");
    std::string out, err;
    CHECK(run({"blowup", "--germ", germ.c_str(), "--weights", "4,2,1,3", "--json"}, out, err)
          == 0);
    json doc = json::parse(out);
    CHECK(doc.at("discrepancy") == "1");
    CHECK(doc.at("E3") == "1/6");
    CHECK(doc.at("charts").size() == 4);

    std::string bad = write_temp("bad.txt", "quotient 1/2(1,1,1,0);\neq x1^2 + x3;\n");
    CHECK(run({"blowup", "--germ", bad.c_str(), "--weights", "1,1,1,1"}, out, err) == 2);
    CHECK(err.find("parse error") != std::string::npos);
}

TEST_CASE("rr subcommand round-trips a profile") {
    std::string profile = write_temp(
        "profile.json",
        R"({"a":2,"n":2,"E3":"1/6","basket":[{"r":6,"b":5,"v":2,"e":4},{"r":2,"b":1,"v":1,"e":1}]})");
    std::string out, err;
    CHECK(run({"rr", "--profile", profile.c_str(), "--imax", "4", "--json"}, out, err) == 0);
    json doc = json::parse(out);
    CHECK(doc.at("integral") == true);
    CHECK(doc.at("a") == 2);
    // serialising and re-reading gives the same profile
    auto again = profile_from_json(doc);
    CHECK(again.e_c2 == Rational::parse(doc.at("e_c2").get<std::string>()));
}

TEST_CASE("dims subcommand") {
    std::string out, err;
    CHECK(run({"dims", "--a", "3", "--r1", "5", "--r2", "7", "--imax", "30"}, out, err) == 0);
    CHECK(run({"dims", "--a", "2", "--r1", "5", "--r2", "7", "--imax", "10"}, out, err) == 2);
    CHECK(run({"dims", "--a", "2", "--r1", "5", "--r2", "7", "--imax", "10",
               "--allow-inadmissible"},
              out, err) == 0);
    CHECK(out.find("inadmissible") != std::string::npos);
}

TEST_CASE("json outputs validate against the shipped schemas") {
    auto schema = [](const std::string& name) {
        return json::parse(read_file(std::string(THREEFOLD_SOURCE_DIR) + "/data/schema/"
                                     + name + ".schema.json"));
    };
    auto check = [&](const std::string& name, std::initializer_list<const char*> args) {
        std::string out, err;
        REQUIRE(run(args, out, err) == 0);
        std::string why;
        bool ok = schema_check::validate(schema(name), json::parse(out), &why);
        INFO(name, ": ", why);
        CHECK(ok);
    };
    std::string germ = write_temp("schema-germ.txt",
                                  "quotient 1/2(1,1,1,0);\n"
                                  "eq x1^2 + x4^3 + x2*x3^3*x4 + x2^4 + x3^8;\n");
    std::string profile = write_temp(
        "schema-profile.json",
        R"({"a":2,"n":2,"E3":"1/6","basket":[{"r":6,"b":5,"v":2,"e":4},{"r":2,"b":1,"v":1,"e":1}]})");
    check("baskets", {"baskets", "--rmax", "10", "--json"});
    check("covers", {"covers", "--rmax", "10", "--json"});
    check("residues", {"covers", "--residues", "8", "--json"});
    check("rr", {"rr", "--profile", profile.c_str(), "--imax", "3", "--json"});
    check("blowup", {"blowup", "--germ", germ.c_str(), "--weights", "4,2,1,3", "--json"});
    check("verify", {"verify", "--example", "5.4", "--mutations", "5", "--json"});
    check("dims", {"dims", "--a", "3", "--r1", "5", "--r2", "7", "--imax", "20", "--json"});
    check("dims", {"dims", "--a", "2", "--r1", "5", "--r2", "7", "--imax", "10",
                   "--allow-inadmissible", "--json"});
}

TEST_CASE("a stored e_c2 value is never read back") {
    std::string profile = write_temp(
        "ec2-profile.json",
        R"({"a":1,"n":1,"E3":"2","e_c2":"999","basket":[]})");
    std::string out, err;
    REQUIRE(run({"rr", "--profile", profile.c_str(), "--imax", "1", "--json"}, out, err) == 0);
    json doc = json::parse(out);
    CHECK(doc.at("e_c2") != "999");  // re-derived from d(0,0) = 1
}

TEST_CASE("usage errors exit 2") {
    std::string out, err;
    CHECK(run({"baskets", "--bogus"}, out, err) == 2);
    CHECK(run({"rr"}, out, err) == 2);
    CHECK(run({}, out, err) == 2);
}

TEST_CASE("numerically inconsistent profiles are flagged, not fatal") {
    std::string profile = write_temp(
        "odd-profile.json",
        R"({"a":1,"n":1,"E3":"17","basket":[{"r":2,"b":1,"v":1,"e":1}]})");
    std::string out, err;
    CHECK(run({"rr", "--profile", profile.c_str(), "--imax", "2", "--json"}, out, err) == 0);
    CHECK(json::parse(out).at("integral") == false);
}
