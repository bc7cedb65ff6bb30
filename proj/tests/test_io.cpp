#include <string>

#include "doctest.h"
#include "hnk/io.hpp"
#include "json.hpp"

using namespace hnk;
using nlohmann::json;

TEST_CASE("graph JSON shape") {
    const HGraph g(GraphParams{3, 1});
    const json j = json::parse(to_json(g));
    CHECK(j["n"] == 3);
    CHECK(j["k"] == 1);
    CHECK(j["component"] == "whole");
    REQUIRE(j["vertices"].size() == 8);
    // ascending encoded order
    for (std::size_t i = 1; i < 8; ++i) {
        REQUIRE(j["vertices"][i - 1].get<int>() < j["vertices"][i].get<int>());
    }
    REQUIRE(j["edges"].size() == 12);
    for (const auto& e : j["edges"]) {
        REQUIRE(e.size() == 2);
        REQUIRE(e[0].get<int>() < e[1].get<int>());
    }
}

TEST_CASE("component JSON carries the filter name") {
    const HGraph g(GraphParams{4, 2, Component::even});
    const json j = json::parse(to_json(g));
    CHECK(j["component"] == "even");
    CHECK(j["vertices"].size() == 8);
}

TEST_CASE("DOT export lists labeled vertices and each edge once") {
    const HGraph g(GraphParams{3, 3});
    const std::string dot = to_dot(g);
    CHECK(dot.find("v0 [label=\"{}\"]") != std::string::npos);
    CHECK(dot.find("v7 [label=\"{1,2,3}\"]") != std::string::npos);
    CHECK(dot.find("v0 -- v7;") != std::string::npos);
    // matching has 4 edges; count the separators
    std::size_t edges = 0;
    for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
         pos = dot.find(" -- ", pos + 1)) {
        ++edges;
    }
    CHECK(edges == 4);
}

TEST_CASE("export output is byte-stable across runs") {
    const HGraph g(GraphParams{5, 2, Component::odd});
    CHECK(to_dot(g) == to_dot(HGraph(GraphParams{5, 2, Component::odd})));
    CHECK(to_json(g) == to_json(HGraph(GraphParams{5, 2, Component::odd})));
}

TEST_CASE("symmetry element JSON shape") {
    const SymmetryElement e = SymmetryElement::extended_a(
        Subset::of(5, {1, 3}), Permutation::transposition(6, 1, 6));
    const json j = json::parse(to_json(e));
    CHECK(j["translation"] == 0b101);
    CHECK(j["family"] == "extA");
    REQUIRE(j["perm"].size() == 6);
    CHECK(j["perm"][0] == 6);
    CHECK(j["perm"][5] == 1);
}

TEST_CASE("order-verification record shape") {
    const HGraph g(GraphParams{5, 3});
    const AutOrderResult oracle = aut_order_detail(g);
    const PredictedOrder predicted = predicted_aut_order(5, 3);
    const json j = json::parse(aut_report_entry_json(g, oracle, predicted, 0));
    CHECK(j["n"] == 5);
    CHECK(j["k"] == 3);
    CHECK(j["component"] == "whole");
    CHECK(j["oracle_order"] == 23040);
    CHECK(j["predicted_order"] == "23040");
    CHECK(j["agrees"] == true);
    CHECK(j["stabilizer_order"] == 720);
    CHECK(j["elements_outside_known_group"] == 0);
}

TEST_CASE("order-verification record with no prediction") {
    const HGraph g(GraphParams{4, 2});
    const AutOrderResult oracle = aut_order_detail(g);
    const PredictedOrder predicted = predicted_aut_order(4, 2);
    const json j = json::parse(aut_report_entry_json(g, oracle, predicted, 1));
    CHECK(j["predicted_order"].is_null());
    CHECK(j["agrees"].is_null());
    CHECK(j["oracle_order"] == 294912);
}
