#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "radtower/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = radtower::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/radtower_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("find-prime subcommand") {
    RunResult r = run_cli({"find-prime", "--lo", "86.49", "--hi", "173", "--a", "10", "--m",
                           "121"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"prime\":\"131\"}\n");

    RunResult none = run_cli({"find-prime", "--lo", "2", "--hi", "3", "--a", "1", "--m", "2"});
    CHECK(none.code == 3);
    CHECK(none.out == "{\"prime\":null}\n");

    RunResult excl = run_cli({"find-prime", "--lo", "100", "--hi", "1000", "--a", "6", "--m",
                              "49", "--exclude", "251"});
    CHECK(excl.code == 0);
    CHECK(excl.out.find("\"349\"") != std::string::npos);
}

TEST_CASE("dedekind subcommand") {
    RunResult r = run_cli({"dedekind", "--poly", "x^3-17", "--q", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"index_coprime\":false}\n");

    RunResult r2 = run_cli({"dedekind", "--poly", "x^3-5", "--q", "3"});
    CHECK(r2.out == "{\"index_coprime\":true}\n");

    RunResult bad = run_cli({"dedekind", "--poly", "2*x^3-5", "--q", "3"});
    CHECK(bad.code == 2);
}

TEST_CASE("discrepancy subcommand on a single-row file") {
    std::string pts = write_temp("pts.csv", "3,0\n");
    RunResult r = run_cli({"discrepancy", "--points", pts, "--tol", "1e-6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\"") != std::string::npos);
    CHECK(r.out.find("1.999999") != std::string::npos);
    CHECK(r.out.find("2.000000") != std::string::npos);
}

TEST_CASE("house, height and eta subcommands") {
    std::string tower = write_temp(
        "tower.json", "{\"ordering_mode\":\"weak\",\"steps\":[{\"p\":\"5\",\"d\":\"3\"}]}");
    RunResult h = run_cli({"house", "--tower", tower, "--elt", "x1"});
    CHECK(h.code == 0);
    CHECK(h.out.find("1.709975946676696989353108") != std::string::npos);

    RunResult w = run_cli({"height", "--tower", tower, "--elt", "x1"});
    CHECK(w.code == 0);
    CHECK(w.out.find("5.3647930414470012") != std::string::npos);

    RunResult wg = run_cli({"height", "--tower", tower, "--elt", "x1", "--gamma", "1"});
    CHECK(wg.code == 0);
    CHECK(wg.out.find("\"degree\":\"3\"") != std::string::npos);
    CHECK(wg.out.find("\"weighted\"") != std::string::npos);

    RunResult e = run_cli({"eta", "--tower", tower, "--step", "1"});
    CHECK(e.code == 0);
    CHECK(e.out.find("1.709975946676696989353108") != std::string::npos);

    CHECK(run_cli({"eta"}).code == 2);  // neither input given


    RunResult bad = run_cli({"house", "--tower", tower, "--elt", "x1^3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("usage error") != std::string::npos);
}

TEST_CASE("bounds-report subcommand json and csv") {
    std::string tower = write_temp(
        "tower2.json",
        "{\"ordering_mode\":\"weak\",\"steps\":[{\"p\":\"251\",\"d\":\"7\"},{\"p\":\"2309\","
        "\"d\":\"11\"}]}");
    RunResult j = run_cli({"bounds-report", "--tower", tower, "--claimed-limit", "2"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"finite_prefix_evidence\":true") != std::string::npos);
    CHECK(j.out.find("\"claimed_limit\":\"2\"") != std::string::npos);

    RunResult c = run_cli({"bounds-report", "--tower", tower, "--format", "csv"});
    CHECK(c.code == 0);
    CHECK(c.out.substr(0, 5) == "step,");
    int lines = 0;
    for (char ch : c.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 3);  // header + two steps
}

TEST_CASE("enumerate-min-house subcommand") {
    std::string tower = write_temp(
        "tower3.json", "{\"ordering_mode\":\"weak\",\"steps\":[{\"p\":\"5\",\"d\":\"3\"}]}");
    RunResult r = run_cli({"enumerate-min-house", "--tower", tower, "--step", "1",
                           "--coeff-bound", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"witness\"") != std::string::npos);
    CHECK(r.out.find("1.7099759") != std::string::npos);
    CHECK(r.out.find("\"count\":120") != std::string::npos);
}

TEST_CASE("lemma-check subcommand") {
    RunResult r = run_cli({"lemma-check", "--name", "closed-forms", "--count", "25", "--seed",
                           "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"violations\": 0") != std::string::npos);

    RunResult bad = run_cli({"lemma-check", "--name", "no-such-suite"});
    CHECK(bad.code == 2);
}

TEST_CASE("construct and verify subcommands round trip; tamper exits 1") {
    std::string cert_path = "/tmp/radtower_test_cert.json";
    RunResult c = run_cli({"construct", "--variant", "b", "--t", "2", "--steps", "2",
                           "--d-seed", "7", "--ordering", "weak", "--out", cert_path});
    CHECK(c.code == 0);
    CHECK(c.out.find("\"251\"") != std::string::npos);

    RunResult v = run_cli({"verify", cert_path});
    CHECK(v.code == 0);
    CHECK(v.out.find("\"pass\": true") != std::string::npos);

    std::ifstream in(cert_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string tampered = ss.str();
    auto pos = tampered.find("\"2309\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 6, "\"2311\"");
    std::string bad_path = write_temp("cert_bad.json", tampered);
    RunResult vb = run_cli({"verify", bad_path});
    CHECK(vb.code == 1);
    CHECK(vb.out.find("congruence") != std::string::npos);
}

TEST_CASE("search exhaustion exits 3") {
    RunResult r = run_cli({"construct", "--variant", "a", "--t", "2", "--steps", "1",
                           "--d-seed", "7"});
    CHECK(r.code == 3);
    CHECK(r.out.find("search_exhausted") != std::string::npos);
}

TEST_CASE("identical argv and seed give byte-identical stdout") {
    std::vector<std::string> argv = {"lemma-check", "--name", "l2-lower-bound", "--count",
                                     "40", "--seed", "123"};
    RunResult a = run_cli(argv);
    RunResult b = run_cli(argv);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    std::vector<std::string> cons = {"construct", "--variant", "b", "--t", "2", "--steps",
                                     "2", "--d-seed", "7"};
    CHECK(run_cli(cons).out == run_cli(cons).out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"house", "--tower", "/nonexistent.json", "--elt", "x1"}).code == 2);
    CHECK(run_cli({"bogus-subcommand"}).code == 2);
    CHECK(run_cli({"find-prime", "--lo", "10", "--hi", "5", "--a", "1", "--m", "2"}).code ==
          2);
    CHECK(run_cli({"construct", "--variant", "b", "--t", "2", "--steps", "1", "--d-seed",
                   "7", "--format", "yaml"})
              .code == 2);
}

TEST_CASE("malformed certificate is a usage error") {
    std::string garbage = write_temp("cert_garbage.json", "{not json at all");
    RunResult r = run_cli({"verify", garbage});
    CHECK(r.code == 2);

    std::string wrong_schema = write_temp(
        "cert_schema.json",
        "{\"schema\": 99, \"variant\": \"house-b\", \"params\": {}, \"tower\": {}, "
        "\"per_step\": [], \"report\": {}, \"toolchain\": {}}");
    CHECK(run_cli({"verify", wrong_schema}).code == 2);
}

TEST_CASE("unreachable tolerance exits 4") {
    // a disk of radius 1/2 cannot support a 1e-9 discrepancy enclosure
    std::string pts = write_temp("pts_wide.csv", "3,0,0.5\n");
    RunResult r = run_cli({"discrepancy", "--points", pts, "--tol", "1e-9"});
    CHECK(r.code == 4);
    CHECK(r.out.find("precision_failure") != std::string::npos);
}

TEST_CASE("csv format for scalar subcommands") {
    RunResult r = run_cli({"dedekind", "--poly", "x^3-5", "--q", "5", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "index_coprime\ntrue\n");

    RunResult fp = run_cli({"find-prime", "--lo", "128", "--hi", "256", "--a", "6", "--m",
                            "49", "--format", "csv"});
    CHECK(fp.out == "prime\n251\n");
}
