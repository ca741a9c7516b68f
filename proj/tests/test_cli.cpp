// End-to-end tests of the hhint binary: JSON schema, preset examples, exit
// codes, byte-determinism, and the file-based algebra round trip. The binary
// path arrives in HHINT_BIN (set by the test harness).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hhint/algebra.hpp"
#include "hhint/algebra_io.hpp"
#include "hhint/derivations.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("HHINT_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    RunResult r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = std::move(out);
    return r;
}

json parse_report(const RunResult& r) {
    json doc = json::parse(r.out);
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("algebra"));
    REQUIRE(doc.contains("results"));
    REQUIRE(doc.contains("provenance"));
    REQUIRE(doc.contains("version"));
    return doc;
}

}  // namespace

TEST_CASE("algebra command reports dimensions for the presets") {
    RunResult r = run_cli("algebra --preset trunc-poly --vars 2 --p 3");
    CHECK(r.code == 0);
    json d = parse_report(r);
    CHECK(d["algebra"]["dim"] == 9);
    CHECK(d["algebra"]["kind"] == "trunc-poly");
    CHECK(d["results"]["dim"] == 9);
    CHECK(d["results"]["center_dim"] == 9);
    CHECK(d["results"]["radical_dim"] == 8);

    r = run_cli("algebra --preset nakayama --m 2 --n 2 --p 3");
    CHECK(r.code == 0);
    CHECK(parse_report(r)["results"]["dim"] == 6);

    r = run_cli("algebra --preset group --gens '(1 2),(1 2 3)' --p 3");
    CHECK(r.code == 0);
    d = parse_report(r);
    CHECK(d["results"]["dim"] == 6);
    CHECK(d["results"]["radical_dim"].is_null());  // not a p-group, not commutative
}

TEST_CASE("hh1 command matches the library on the three presets") {
    CHECK(parse_report(run_cli("hh1 --preset trunc-poly --vars 2 --p 3"))["results"]["hh1_dim"] ==
          18);
    CHECK(parse_report(run_cli("hh1 --preset nakayama --m 2 --n 2 --p 3"))["results"]["hh1_dim"] ==
          1);
    CHECK(parse_report(
              run_cli("hh1 --preset group --gens '(1 2),(1 2 3)' --p 3"))["results"]["hh1_dim"] ==
          1);
}

TEST_CASE("bracket table on one truncated variable is the Witt algebra") {
    json d = parse_report(run_cli("bracket-table --preset trunc-poly --vars 1 --p 3"));
    REQUIRE(d["results"]["hh1_dim"] == 3);
    auto t = d["results"]["table"];
    // basis d/dx, x d/dx, x^2 d/dx: [D0,D1] = D0, [D0,D2] = 2 D1, [D1,D2] = D2
    CHECK(t[0][1] == json::array({1, 0, 0}));
    CHECK(t[1][0] == json::array({2, 0, 0}));
    CHECK(t[0][2] == json::array({0, 2, 0}));
    CHECK(t[1][2] == json::array({0, 0, 1}));
    CHECK(t[0][0] == json::array({0, 0, 0}));
}

TEST_CASE("integrability verdicts carry provenance and are byte-deterministic") {
    RunResult r1 = run_cli("integrability --preset trunc-poly --vars 2 --p 3");
    RunResult r2 = run_cli("integrability --preset trunc-poly --vars 2 --p 3");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    json d = parse_report(r1);
    CHECK(d["results"]["certified_dim"] == 16);
    CHECK(d["results"]["hh1_dim"] == 18);
    CHECK(d["provenance"] == "EXHAUSTIVE");
    int certified = 0, refuted = 0;
    for (const auto& c : d["results"]["classes"]) {
        if (c["status"] == "certified") {
            ++certified;
            CHECK(c["provenance"] == "CERTIFIED");
        } else if (c["status"] == "obstructed-exact") {
            ++refuted;
            CHECK(c["provenance"] == "EXHAUSTIVE");
            CHECK(c["order"] == 3);
        }
    }
    CHECK(certified == 16);
    CHECK(refuted == 2);
}

TEST_CASE("integrability honors an explicit target order") {
    json d = parse_report(run_cli("integrability --preset trunc-poly --vars 1 --p 2 --order 8"));
    CHECK(d["results"]["target_order"] == 8);
}

TEST_CASE("solvability verdict on the two-variable truncated polynomials") {
    json d = parse_report(run_cli("solvability --preset trunc-poly --vars 2 --p 3"));
    CHECK(d["results"]["verdict"] == "NOT SOLVABLE");
    CHECK(d["results"]["bracket_closed"] == true);
    CHECK(d["results"]["derived_series"] == json::array({16, 15, 15}));
}

TEST_CASE("symgroup tables agree across their columns") {
    json d = parse_report(run_cli("symgroup --p 3 --nmax 10"));
    CHECK(d["results"]["all_agree"] == true);
    d = parse_report(run_cli("symgroup --p 2 --nmax 10"));
    CHECK(d["results"]["all_agree"] == true);
    CHECK(d["results"]["rows"][2]["formula_dim"] == 2);
    d = parse_report(run_cli("symgroup --p 5 --nmax 5"));
    CHECK(d["results"]["rows"][5]["formula_dim"] == 1);
}

TEST_CASE("file preset round-trips a dumped algebra") {
    hhint::Algebra a = hhint::trunc_poly(3, 1);
    std::string path = "/tmp/hhint_cli_roundtrip.alg";
    {
        std::ofstream out(path);
        out << hhint::dump_algebra(a);
    }
    json d = parse_report(run_cli("hh1 --preset file --spec " + path));
    CHECK(d["algebra"]["dim"] == 3);
    CHECK(d["results"]["hh1_dim"] == hhint::hh1(a).dim());

    // declared modulus must match --p when both are given
    RunResult r = run_cli("hh1 --preset file --spec " + path + " --p 5");
    CHECK(r.code == 2);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run_cli("hh1 --preset group --p 3").code == 2);            // missing --gens
    CHECK(run_cli("hh1 --preset file --spec /nonexistent").code == 2);
    CHECK(run_cli("hh1 --preset trunc-poly --vars 2").code == 2);    // missing --p
    CHECK(run_cli("symgroup --p 4").code == 2);                      // composite modulus
    CHECK(run_cli("no-such-command").code == 2);

    std::string path = "/tmp/hhint_cli_bad.alg";
    {
        std::ofstream out(path);
        out << "p = 3\ndim = 1\nunit = 0:1\nmul 0 0 = 5:1\n";  // index out of range
    }
    CHECK(run_cli("hh1 --preset file --spec " + path).code == 2);
}

TEST_CASE("pretty mode prints text instead of JSON") {
    RunResult r = run_cli("solvability --preset trunc-poly --vars 2 --p 3 --pretty");
    CHECK(r.code == 0);
    CHECK(r.out.find("NOT SOLVABLE") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("the negative control makes the selftest fail") {
    RunResult r = run_cli("selftest --negative-control");
    CHECK(r.code == 1);
    json d = json::parse(r.out);
    CHECK(d["results"]["all_pass"] == false);
    bool validation_failed = false;
    for (const auto& item : d["results"]["items"])
        if (item["id"] == "00" && item["pass"] == false) validation_failed = true;
    CHECK(validation_failed);
}
