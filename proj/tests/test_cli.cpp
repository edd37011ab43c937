#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "edgereg/json_io.hpp"

using namespace edgereg;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the installed binary through the shell, stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("EDGEREG_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string temp_graph_file(const std::string& contents) {
    std::string path = "cli_input_graph.txt";
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("reg output format") {
    auto r = run_cli("reg --family cycle:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "reg I(C5) = 3\n");

    CHECK(run_cli("reg --family path:4 --power 2").out == "reg I(P4)^2 = 4\n");
    CHECK(run_cli("reg --family complete:2 --squares --power 2").out == "reg J(K2)^2 = 4\n");
    CHECK(run_cli("reg --family cycle:5 --whiskered").out == "reg I(C5*) = 3\n");
    CHECK(run_cli("reg --family path:3 --squares --polarize").out == "reg J(P3)^pol = 3\n");
    CHECK(run_cli("reg --family path:3 --squares --polarize --power 2").out ==
          "reg (J(P3)^pol)^2 = 5\n");
}

TEST_CASE("bounds output") {
    auto r = run_cli("bounds --family cycle:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "alpha = 2\nc = 1\nhansen = 3\nkwok = 5/2\n");

    auto json_run = run_cli("bounds --family cycle:5 --format json");
    auto j = nlohmann::json::parse(json_run.out);
    CHECK(j.at("alpha") == 2);
    CHECK(j.at("hansen") == 3);
    CHECK(j.at("kwok") == "5/2");
}

TEST_CASE("alpha and nu") {
    auto r = run_cli("alpha --family path:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("alpha = 3") != std::string::npos);
    CHECK(r.out.find("witness = {1, 3, 5}") != std::string::npos);

    CHECK(run_cli("nu --family path:5").out == "nu = 2\n");
    CHECK(run_cli("nu --family cycle:5").out == "nu = 1\n");
}

TEST_CASE("whisker emits the input format") {
    auto r = run_cli("whisker --family path:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4 3\n1 2\n1 3\n2 4\n");

    auto path = temp_graph_file(r.out);
    auto again = run_cli("reg --input " + path);
    CHECK(again.exit_code == 0);
    CHECK(again.out == "reg I(G) = 2\n");
    std::remove(path.c_str());
}

TEST_CASE("ideal json round trip") {
    auto r = run_cli("ideal --family complete:2 --squares --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("name") == "J(K2)");
    auto i = ideal_from_json(j);
    CHECK(i.gens() == std::vector<Multidegree>{{0, 2}, {1, 1}, {2, 0}});

    auto text = run_cli("ideal --family complete:2 --squares");
    CHECK(text.out == "ring: x1 x2\nx2^2\nx1*x2\nx1^2\n");
}

TEST_CASE("betti text and json") {
    auto r = run_cli("betti --family path:2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("regularity = 2") != std::string::npos);
    CHECK(r.out.find("projective dimension = 0") != std::string::npos);

    auto json_run = run_cli("betti --family cycle:5 --format json");
    auto table = betti_from_json(nlohmann::json::parse(json_run.out));
    CHECK(table.regularity() == 3);
    CHECK(table.projective_dimension() == 2);
    CHECK(table.total(0) == 5);
}

TEST_CASE("check all on a small graph") {
    auto r = run_cli("check --all --family path:3 --smax 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] main s=1") != std::string::npos);
    CHECK(r.out.find("[PASS] witness_socle s=2") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("ok: ") != std::string::npos);

    auto named = run_cli("check --checks main,bht_lower --family path:3 --smax 1");
    CHECK(named.exit_code == 0);
    CHECK(named.out.find("hansen") == std::string::npos);

    auto json_run = run_cli("check --all --family path:3 --smax 1 --format json");
    auto j = nlohmann::json::parse(json_run.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("reg").at("I").at("1") == 2);
}

TEST_CASE("sweep single instance") {
    auto r = run_cli("sweep --family path:3 --format csv");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 4);  // header plus one row per power
    CHECK(r.out.find("graph_id,n,e,s,c,nu_G,nu_Gstar") == 0);
    CHECK(r.out.find("P3,3,2,1,1,1,2,2,3,3,3,2,2,pass") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    auto text = run_cli("sweep --family path:3 --smax 1");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("1 graphs, 0 failed verdicts, 0 resource errors") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("reg --no-such-flag").exit_code == 2);
    CHECK(run_cli("reg").exit_code == 2);                     // neither graph source
    CHECK(run_cli("reg --family path:3 --input x").exit_code == 2);
    CHECK(run_cli("reg --family pentagon:5").exit_code == 2);
    CHECK(run_cli("reg --family cycle:5 --field p8").exit_code == 2);
    CHECK(run_cli("reg --family cycle:5 --field p10001").exit_code == 2);  // composite
    CHECK(run_cli("reg --family cycle:5 --field z5").exit_code == 2);
    CHECK(run_cli("bounds --family random:4,0,7").exit_code == 2);  // no edges
    CHECK(run_cli("betti --family random:4,0,7").exit_code == 2);   // zero ideal
    CHECK(run_cli("reg --family cycle:5 --format csv").exit_code == 2);

    auto bad = temp_graph_file("3 2\n1 2\nbogus\n");
    auto r = run_cli("reg --input " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
    std::remove(bad.c_str());
}

TEST_CASE("resource limits exit 3") {
    CHECK(run_cli("reg --family cycle:5 --lattice-cap 4").exit_code == 3);
    CHECK(run_cli("check --all --family cycle:5 --smax 1 --lattice-cap 4").exit_code == 3);
    // a capped sweep reports the error but completes
    auto r = run_cli("sweep --family cycle:5 --smax 1 --lattice-cap 4");
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("1 resource errors") != std::string::npos);
}

TEST_CASE("prime field agrees with the rationals") {
    auto q = run_cli("reg --family cycle:5");
    auto p = run_cli("reg --family cycle:5 --field p1000003");
    CHECK(p.exit_code == 0);
    CHECK(p.out == q.out);

    auto betti_p = run_cli("betti --family path:4 --power 2 --field p65537 --format json");
    CHECK(betti_p.exit_code == 0);
    auto table = betti_from_json(nlohmann::json::parse(betti_p.out));
    CHECK(table.regularity() == 4);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("reg --help").exit_code == 0);
}
