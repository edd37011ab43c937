#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "edgereg/betti.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/ideal.hpp"
#include "edgereg/json_io.hpp"

using namespace edgereg;
using nlohmann::json;

TEST_CASE("graph round trip") {
    auto g = cycle_graph(5);
    auto j = graph_to_json(g);
    CHECK(j.at("n") == 5);
    CHECK(j.at("edges").size() == 5);
    CHECK(graph_from_json(j) == g);

    CHECK(graph_from_json(graph_to_json(Graph::make(3, {}))) == Graph::make(3, {}));
}

TEST_CASE("graph_from_json validates") {
    CHECK_THROWS_AS(graph_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 2}, {"edges", {{1, 3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", "3"}, {"edges", json::array()}}),
                    std::invalid_argument);
}

TEST_CASE("ideal round trip") {
    auto i = power(add_squares(edge_ideal(path_graph(3))), 2);
    auto j = ideal_to_json(i);
    CHECK(ideal_from_json(j) == i);

    CHECK_THROWS_AS(ideal_from_json(json{{"ring", {"x1"}}}), std::invalid_argument);
    CHECK_THROWS_AS(ideal_from_json(json{{"ring", {"x1"}}, {"gens", {{1, 2}}}}),
                    std::invalid_argument);  // arity mismatch
}

TEST_CASE("betti round trip") {
    auto table = betti_multigraded(edge_ideal(cycle_graph(5)));
    auto j = betti_to_json(table);
    CHECK(j.at("regularity") == 3);
    auto back = betti_from_json(j);
    CHECK(back == table);

    auto zero = betti_to_json(BettiTable{Ring::x_vars(2), {}});
    CHECK(zero.at("regularity").is_null());
    CHECK(betti_from_json(zero).entries.empty());
}

TEST_CASE("betti_from_json validates") {
    auto table = betti_multigraded(edge_ideal(path_graph(2)));
    auto j = betti_to_json(table);

    auto bad = j;
    bad["entries"][0]["dim"] = 0;
    CHECK_THROWS_AS(betti_from_json(bad), std::invalid_argument);

    bad = j;
    bad["entries"][0]["a"] = {1, 1, 1};
    CHECK_THROWS_AS(betti_from_json(bad), std::invalid_argument);

    bad = j;
    bad["regularity"] = 7;  // inconsistent with the entries
    CHECK_THROWS_AS(betti_from_json(bad), std::invalid_argument);
}

TEST_CASE("report serialization") {
    auto report = run_all("P3", path_graph(3), 2);
    auto j = report_to_json(report);
    CHECK(j.at("graph_id") == "P3");
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("c") == 1);
    CHECK(j.at("reg").at("I").at("1") == 2);
    CHECK(j.at("reg").at("Istar").at("2") == 5);
    CHECK(j.at("checks").size() == report.outcomes.size());
    CHECK(j.at("resource_error").is_null());

    auto sweep = run_corpus({{"P3", path_graph(3), 1}});
    auto sj = sweep_to_json(sweep);
    CHECK(sj.at("reports").size() == 1);
    CHECK(sj.at("failed_verdicts") == 0);
}
