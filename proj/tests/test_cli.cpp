#include "doctest.h"
#include "helpers.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "sbp/json_io.hpp"

#ifndef SBP_CLI_BINARY
#error "SBP_CLI_BINARY must point at the built command-line tool"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(SBP_CLI_BINARY) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe))
        result.stdout_text.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string("/tmp/sbp_cli_") + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
    return path;
}

const char* kMonoidX = R"({
  "name": "X", "elements": ["0", "s"], "identity": "0",
  "table": [["0", "s"], ["s", "s"]]
})";

const char* kMonoidB = R"({
  "name": "B", "elements": ["1", "t"], "identity": "1",
  "table": [["1", "t"], ["t", "t"]]
})";

}  // namespace

TEST_CASE("examples subcommand") {
    SUBCASE("list names every record") {
        auto result = run_cli("examples list");
        CHECK(result.exit_code == 0);
        CHECK(result.stdout_text.find("A1") != std::string::npos);
        CHECK(result.stdout_text.find("product") != std::string::npos);
    }
    SUBCASE("running A1 reports the failing axiom and exits 1") {
        auto result = run_cli("--json examples run A1");
        CHECK(result.exit_code == 1);
        auto j = sbp::json_io::parse_text(result.stdout_text);
        CHECK(j.at("result").at("verified") == false);
        bool found = false;
        for (const auto& axiom : j.at("result").at("axioms")) {
            if (axiom.at("law") == "kq+sp=1") {
                found = true;
                CHECK(axiom.at("ok") == false);
                CHECK(axiom.at("failures").at(0).at("witness").at(0) == "d");
            }
        }
        CHECK(found);
    }
    SUBCASE("running A6 verifies, reports commutativity and exits 0") {
        auto result = run_cli("--json examples run A6");
        CHECK(result.exit_code == 0);
        auto j = sbp::json_io::parse_text(result.stdout_text);
        CHECK(j.at("result").at("verified") == true);
        bool commutative_fact = false;
        for (const auto& fact : j.at("result").at("facts"))
            if (fact.at("name") == "commutative")
                commutative_fact = fact.at("actual") == "true" && fact.at("matched") == true;
        CHECK(commutative_fact);
    }
    SUBCASE("run --all reproduces every expectation") {
        auto result = run_cli("examples run --all");
        CHECK(result.exit_code == 0);
        CHECK(result.stdout_text.find("all expectations reproduced") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    SUBCASE("unknown subcommand exits 2") { CHECK(run_cli("frobnicate").exit_code == 2); }
    SUBCASE("missing file exits 2") { CHECK(run_cli("validate /nonexistent").exit_code == 2); }
    SUBCASE("unknown example exits 2") { CHECK(run_cli("examples run zzz").exit_code == 2); }
}

TEST_CASE("validate subcommand") {
    auto good = write_temp("good.json", kMonoidX);
    CHECK(run_cli("validate " + good).exit_code == 0);

    auto bad = write_temp("bad.json", R"({
      "name": "M", "elements": ["0", "a"], "identity": "0",
      "table": [["0", "a"], ["a", ""]]
    })");
    auto result = run_cli("--json validate " + bad);
    CHECK(result.exit_code == 1);
    auto j = sbp::json_io::parse_text(result.stdout_text);
    CHECK(j.at("ok") == false);
    CHECK(j.at("failures").at(0).at("law") == "totality");
}

TEST_CASE("verify, schreier and roundtrip on a diagram file") {
    auto d = helpers::corpus("chain");
    auto path = write_temp("chain.json", sbp::json_io::diagram_to_json(d).dump(2));

    CHECK(run_cli("verify " + path).exit_code == 0);

    auto schreier = run_cli("--json schreier " + path);
    CHECK(schreier.exit_code == 0);
    CHECK(sbp::json_io::parse_text(schreier.stdout_text).at("schreier") == false);

    auto roundtrip = run_cli("--json roundtrip " + path);
    CHECK(roundtrip.exit_code == 0);
    auto j = sbp::json_io::parse_text(roundtrip.stdout_text);
    CHECK(j.at("roundtrip") == true);
    CHECK(j.at("carrier_size") == 3);

    auto cokernel = run_cli("--json cokernel " + path);
    CHECK(cokernel.exit_code == 0);
    CHECK(sbp::json_io::parse_text(cokernel.stdout_text).at("cokernel") == true);
}

TEST_CASE("a sibling monoid bundle supplies the tables") {
    const auto& d = helpers::corpus("simple");
    auto full = sbp::json_io::diagram_to_json(d);
    sbp::json_io::Json bundle;
    bundle["monoids"] = full.at("monoids");
    full.erase("monoids");
    auto diagram_path = write_temp("bare_diagram.json", full.dump(2));
    auto bundle_path = write_temp("bundle.json", bundle.dump(2));

    CHECK(run_cli("verify " + diagram_path).exit_code == 2);  // tables unknown
    CHECK(run_cli("verify " + diagram_path + " --monoids " + bundle_path).exit_code == 0);
    CHECK(run_cli("schreier " + diagram_path + " --monoids " + bundle_path).exit_code == 0);
}

TEST_CASE("a failing diagram exits 1 with witnesses") {
    auto path = write_temp("a1.json",
                           sbp::json_io::diagram_to_json(helpers::corpus("A1")).dump(2));
    auto result = run_cli("--json verify " + path);
    CHECK(result.exit_code == 1);
    auto j = sbp::json_io::parse_text(result.stdout_text);
    CHECK(j.at("ok") == false);
}

TEST_CASE("extract then synthesize through files") {
    auto diagram_path = write_temp(
        "simple.json", sbp::json_io::diagram_to_json(helpers::corpus("simple")).dump(2));
    auto pa_path = std::string("/tmp/sbp_cli_simple_pa.json");
    CHECK(run_cli("extract " + diagram_path + " -o " + pa_path).exit_code == 0);

    CHECK(run_cli("pa-verify " + pa_path).exit_code == 0);
    CHECK(run_cli("roundtrip " + pa_path).exit_code == 0);

    auto out_path = std::string("/tmp/sbp_cli_simple_synth.json");
    CHECK(run_cli("synthesize " + pa_path + " -o " + out_path).exit_code == 0);
    auto back = sbp::json_io::diagram_from_json(sbp::json_io::parse_file(out_path), {});
    CHECK(back.A->size() == 3);
}

TEST_CASE("construct and enumerate") {
    auto x_path = write_temp("x.json", kMonoidX);
    auto b_path = write_temp("b.json", kMonoidB);
    auto rel_path = write_temp("rel.json", R"({
      "R": [["0", "1"], ["s", "1"], ["0", "t"]],
      "u": {"1": "0", "t": "0"},
      "q": {"0,1": "0", "s,1": "s", "0,t": "0"}
    })");

    auto construct = run_cli("--json construct --x " + x_path + " --b " + b_path +
                             " --relation " + rel_path);
    CHECK(construct.exit_code == 0);
    auto j = sbp::json_io::parse_text(construct.stdout_text);
    CHECK(j.at("candidate_tables") == 2);
    CHECK(j.at("accepted") == 1);
    CHECK(j.at("rejected").at(0).at("reason") == "sum-mismatch");

    auto enumerate = run_cli("--json enumerate --x " + x_path + " --b " + b_path);
    CHECK(enumerate.exit_code == 0);
    auto e = sbp::json_io::parse_text(enumerate.stdout_text);
    CHECK(e.at("complete") == true);
    CHECK(e.at("count").get<std::size_t>() > 0);
}

TEST_CASE("pullback subcommand") {
    const auto& d = helpers::corpus("A5");
    auto diagram_path =
        write_temp("a5_pull.json", sbp::json_io::diagram_to_json(d).dump(2));
    // h: {1,t} -> B with t |-> c, carrying its own monoid table
    auto h_path = write_temp("hom.json", R"({
      "monoids": [{
        "name": "C", "elements": ["1", "t"], "identity": "1",
        "table": [["1", "t"], ["t", "t"]]
      }],
      "domain": "C", "codomain": "B", "kind": "hom",
      "map": {"1": "0", "t": "c"}
    })");
    auto result = run_cli("--json pullback " + diagram_path + " " + h_path);
    CHECK(result.exit_code == 0);
    auto j = sbp::json_io::parse_text(result.stdout_text);
    CHECK(j.at("carrier_size") == 5);
    auto back = sbp::json_io::diagram_from_json(j.at("diagram"), {});
    CHECK(sbp::verify(back).ok());
}

TEST_CASE("pa-verify honors jobs and exhaustive-witness flags") {
    auto pa = helpers::worked_pa();
    pa.rho[1] = 1;  // 0^t = s: breaks a unit law and the associativity law
    auto path = write_temp("broken_pa.json", sbp::json_io::pa_to_json(pa).dump(2));
    auto serial = run_cli("--json --exhaustive-witnesses pa-verify " + path);
    CHECK(serial.exit_code == 1);
    auto parallel = run_cli("--json --exhaustive-witnesses --jobs 3 pa-verify " + path);
    CHECK(parallel.exit_code == 1);
    CHECK(sbp::json_io::parse_text(serial.stdout_text).at("laws") ==
          sbp::json_io::parse_text(parallel.stdout_text).at("laws"));
}

TEST_CASE("complete subcommand") {
    const auto& d = helpers::corpus("A5");
    sbp::json_io::Json bundle;
    bundle["monoids"] = sbp::json_io::Json::array(
        {sbp::json_io::monoid_to_json(*d.X), sbp::json_io::monoid_to_json(*d.A),
         sbp::json_io::monoid_to_json(*d.B)});
    bundle["X"] = d.X->name();
    bundle["A"] = d.A->name();
    bundle["B"] = d.B->name();
    bundle["k"] = sbp::json_io::map_to_json(d.k, true);
    bundle["p"] = sbp::json_io::map_to_json(d.p, true);
    auto path = write_temp("ext.json", bundle.dump(2));

    auto result = run_cli("--json complete --bundle " + path);
    CHECK(result.exit_code == 0);
    CHECK(sbp::json_io::parse_text(result.stdout_text).at("count") == 2);
}

TEST_CASE("nat-demo subcommand") {
    auto result = run_cli("--json nat-demo --bound 5");
    CHECK(result.exit_code == 0);
    auto j = sbp::json_io::parse_text(result.stdout_text);
    CHECK(j.at("ok") == true);
    CHECK(j.at("note") == "partial verification (bounded)");
}

TEST_CASE("JSON reports reparse to identical bytes") {
    auto result = run_cli("--json examples run A6");
    auto j = sbp::json_io::parse_text(result.stdout_text);
    CHECK(j.dump(2) + "\n" == result.stdout_text);
}

TEST_CASE("identical inputs produce identical reports up to timing") {
    auto path = write_temp("det.json",
                           sbp::json_io::diagram_to_json(helpers::corpus("A7")).dump(2));
    auto first = sbp::json_io::parse_text(run_cli("--json verify " + path).stdout_text);
    auto second = sbp::json_io::parse_text(run_cli("--json verify " + path).stdout_text);
    first["timing_ms"] = 0;
    second["timing_ms"] = 0;
    CHECK(first.dump(2) == second.dump(2));
}

TEST_CASE("the max-size flag limits accepted inputs") {
    auto path = write_temp("x_again.json", kMonoidX);
    CHECK(run_cli("--max-size 1 validate " + path).exit_code == 1);  // reported, not a crash
    CHECK(run_cli("--max-size 4 validate " + path).exit_code == 0);
}
