#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace iswp;
using namespace testsupport;

TEST_CASE("named pattern generators produce the expected graphs") {
    REQUIRE(generate_pattern_by_name("clique:4").graph == complete_graph(4));
    REQUIRE(generate_pattern_by_name("path:5").graph == path_graph(5));
    REQUIRE(generate_pattern_by_name("cycle:5").graph == cycle_graph(5));
    Graph pm = generate_pattern_by_name("perfect_matching:6").graph;
    REQUIRE(pm.order() == 6);
    REQUIRE(pm.size() == 3);
    REQUIRE(pm.has_edge(0, 1));
    REQUIRE(pm.has_edge(2, 3));
    REQUIRE(pm.has_edge(4, 5));
    REQUIRE_THROWS_AS(generate_pattern_by_name("perfect_matching:5"), input_error);
    REQUIRE_THROWS_AS(generate_pattern_by_name("cycle:2"), input_error);
    REQUIRE_THROWS_AS(generate_pattern_by_name("mystery:3"), input_error);
    REQUIRE_THROWS_AS(generate_pattern_by_name("clique:x"), input_error);
}

TEST_CASE("grid generator: order, size, degrees") {
    PatternResult pr = generate_pattern_by_name("grid:3:4");
    REQUIRE(pr.graph.order() == 12);
    REQUIRE(pr.graph.size() == 2 * 12 - 3 - 4); // rc grid has 2rc - r - c edges
    REQUIRE_FALSE(pr.minor_map.has_value());    // 4 != C(3,2)

    PatternResult g3 = generate_pattern_by_name("grid3");
    REQUIRE(g3.graph.order() == 9);
    REQUIRE(g3.graph.size() == 12);
    REQUIRE(g3.minor_map.has_value());
    REQUIRE(g3.minor_map->k == 3);
    MinorMapReport report = validate_minor_map(g3.graph, *g3.minor_map);
    REQUIRE(report.valid);
}

TEST_CASE("clique_grid carries a valid identity map for every k") {
    for (int k = 2; k <= 5; ++k) {
        PatternResult pr = generate_pattern(PatternFamily::clique_grid, {k});
        REQUIRE(pr.graph.order() == k * (k * (k - 1) / 2));
        REQUIRE(pr.minor_map.has_value());
        REQUIRE(pr.minor_map->k == k);
        MinorMapReport report = validate_minor_map(pr.graph, *pr.minor_map);
        REQUIRE(report.valid);
    }
}

TEST_CASE("subdivided grid carries a valid branch-set map") {
    for (int k = 3; k <= 5; ++k) {
        PatternResult pr = generate_pattern(PatternFamily::subdivided_grid, {k});
        Graph base = detail::make_grid(k, k);
        REQUIRE(pr.graph.order() == k * k + base.size());
        REQUIRE(pr.minor_map.has_value());
        MinorMapReport report = validate_minor_map(pr.graph, *pr.minor_map);
        CAPTURE(k, report.violations.size());
        REQUIRE(report.valid);
        // Every image is a branch set of more than one vertex somewhere.
        bool saw_multi = false;
        for (const auto& image : pr.minor_map->images) saw_multi |= image.size() > 1;
        REQUIRE(saw_multi);
    }
}
