#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "hop/catalog.hpp"
#include "hop/hopfile.hpp"
#include "hop/report.hpp"

using namespace hop;

#ifndef HOP_BIN
#define HOP_BIN "hop"
#endif
#ifndef EXAMPLES_DIR
#define EXAMPLES_DIR "examples"
#endif

namespace {

std::string ex(const std::string& name) {
    return std::string(EXAMPLES_DIR) + "/" + name;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HOP_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace

TEST_CASE("problem files parse into the engine structures") {
    ProblemFile pf = read_problem(ex("p2_0.hop"));
    REQUIRE(pf.hydro.has_value());
    CHECK(pf.n == 2);
    CHECK(is_zero(to_bidist(*pf.hydro) - catalog_entry("P2_0").op));

    ProblemFile df = read_problem(ex("def1_p1.hop"));
    REQUIRE(df.deform1.has_value());
    CHECK(is_zero(to_bidist(*df.deform1) - catalog_entry("DEF1_P1").op));

    ProblemFile gf = read_problem(ex("gas.hop"));
    REQUIRE(gf.hydro.has_value());
    CHECK(is_zero(to_bidist(*gf.hydro) - catalog_entry("GAS_DYNAMICS").op));
}

TEST_CASE("print/parse round trip is stable") {
    for (const char* name : {"p1_0.hop", "p2_0.hop", "gas.hop", "def1_p1.hop",
                             "bad_const_b.hop", "example1.map"}) {
        ProblemFile pf = read_problem(ex(name));
        std::string once = print_problem(pf);
        std::string twice = print_problem(parse_problem(once));
        CHECK(once == twice);
    }
}

TEST_CASE("parse errors carry line numbers and reject bad input") {
    auto fails_with = [](const std::string& text, const std::string& what) {
        try {
            parse_problem(text);
            return false;
        } catch (const ParseError& e) {
            return std::string(e.what()).find(what) != std::string::npos;
        }
    };
    CHECK(fails_with("metric:\ng[1][1] = 1\n", "dimension"));
    CHECK(fails_with("n = 2\nmetric:\ng[1][3] = 1\n", "line 3"));
    CHECK(fails_with("n = 2\nmetric:\ng[2][1] = 1\n", "ascending"));
    CHECK(fails_with("n = 2\nbogus:\n", "unknown section"));
    CHECK(fails_with("n = 2\nmetric:\ng[1][1] = 1 +\n", "line 3"));
    CHECK(fails_with("n = 2\nfunc p(u2);\nfunc p(u2);\n", "twice"));
    // the imaginary unit needs the opt-in flag
    CHECK_THROWS_AS(parse_problem("n = 2\nmetric:\ng[1][1] = i\n", false),
                    ParseError);
    CHECK_NOTHROW(parse_problem("n = 2\nmetric:\ng[1][1] = i\n", true));
}

TEST_CASE("reports serialize to JSON with the fixed shape") {
    Report rep;
    rep.check = "check skew";
    rep.case_name = "demo";
    rep.components.push_back({{1, 2}, "d^0", "u1_x", false});
    finish(rep);
    CHECK(!rep.pass);
    auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["check"] == "check skew");
    CHECK(j["case"] == "demo");
    CHECK(j["pass"] == false);
    CHECK(j["components"][0]["indices"] == nlohmann::json({1, 2}));
    CHECK(j["components"][0]["residual"] == "u1_x");
    CHECK(j.contains("seed"));
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("binary: exit codes follow the pass/fail/usage contract") {
    CHECK(run("check grinberg " + ex("p2_0.hop")).code == 0);
    CHECK(run("check jacobi " + ex("bad_const_b.hop")).code == 1);
    CHECK(run("check skew " + ex("empty.hop")).code == 0);
    CHECK(run("check grinberg " + ex("no_such_file.hop")).code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("binary: grinberg failure names G4 with the squared constant") {
    RunResult r = run("check grinberg " + ex("bad_const_b.hop"));
    CHECK(r.code == 1);
    CHECK(r.out.find("G4") != std::string::npos);
    CHECK(r.out.find("-9") != std::string::npos);
}

TEST_CASE("binary: transform reports the non-tensorial entry") {
    RunResult r =
        run("transform " + ex("example1.map") + " " + ex("metricEx.hop"));
    CHECK(r.code == 0);
    CHECK(r.out.find("nontensorial") != std::string::npos);
    CHECK(r.out.find("u3") != std::string::npos);
}

TEST_CASE("binary: counts and catalog in JSON") {
    RunResult r = run("count --n 3 --degree 2 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["components"][0]["residual"] == "315");
    CHECK(j["components"][1]["residual"] == "432");

    RunResult l = run("catalog list");
    CHECK(l.code == 0);
    CHECK(l.out.find("DEF2_P2") != std::string::npos);

    RunResult v = run("catalog verify --case P1_0 --format json");
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["pass"] == true);
}

TEST_CASE("binary: bracket of a structure with itself vanishes") {
    CHECK(run("bracket " + ex("p2_0.hop") + " " + ex("p2_0.hop")).code == 0);
    CHECK(run("bracket " + ex("bad_const_b.hop") + " " +
              ex("bad_const_b.hop")).code == 1);
}

TEST_CASE("binary: lie derivative along a symmetry field vanishes") {
    RunResult r = run("lie " + ex("scaling_field.hop") + " " + ex("p1_0.hop"));
    CHECK(r.code == 0);
}
