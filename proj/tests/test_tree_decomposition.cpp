#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace iswp;
using namespace testsupport;

TEST_CASE("single bag decomposition is valid with width n-1") {
    Graph g = complete_graph(4);
    TreeDecomposition td = single_bag_decomposition(g);
    REQUIRE(td.width() == 3);
    REQUIRE(validate_tree_decomposition(g, td).valid);
}

TEST_CASE("greedy decomposition achieves the known widths of named graphs") {
    REQUIRE(greedy_tree_decomposition(path_graph(6)).width() == 1);
    REQUIRE(greedy_tree_decomposition(cycle_graph(6)).width() == 2);
    REQUIRE(greedy_tree_decomposition(complete_graph(5)).width() == 4);
    REQUIRE(greedy_tree_decomposition(Graph(4)).width() == 0);
    // Min-degree elimination on the 3x3 grid: treewidth is 3, the heuristic
    // may lose slightly but must stay close.
    int w = greedy_tree_decomposition(generate_pattern_by_name("grid3").graph).width();
    REQUIRE(w >= 3);
    REQUIRE(w <= 4);
}

TEST_CASE("greedy decompositions validate on every small graph class") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graph_classes(n)) {
            TreeDecomposition td = greedy_tree_decomposition(g);
            TdReport report = validate_tree_decomposition(g, td);
            CAPTURE(n, serialize_graph(g));
            REQUIRE(report.valid);
        }
}

TEST_CASE("validation catches the three violation kinds") {
    Graph g = path_graph(3);

    // Vertex 2 missing from every bag.
    TreeDecomposition td;
    td.n = 3;
    td.bags = {{0, 1}};
    td.tree = Graph(1);
    TdReport report = validate_tree_decomposition(g, td);
    REQUIRE_FALSE(report.valid);
    bool saw1 = false;
    for (const auto& v : report.violations) saw1 |= v.condition == 1;
    REQUIRE(saw1);

    // Edge {1,2} in no bag.
    td.bags = {{0, 1}, {2}};
    td.tree = path_graph(2);
    report = validate_tree_decomposition(g, td);
    REQUIRE_FALSE(report.valid);
    bool saw2 = false;
    for (const auto& v : report.violations) saw2 |= v.condition == 2;
    REQUIRE(saw2);

    // Occurrences of vertex 0 do not form a subtree.
    td.bags = {{0, 1}, {1, 2}, {0, 2}};
    td.tree = path_graph(3);
    report = validate_tree_decomposition(g, td);
    REQUIRE_FALSE(report.valid);
    bool saw3 = false;
    for (const auto& v : report.violations) saw3 |= v.condition == 3;
    REQUIRE(saw3);
}

TEST_CASE("tree decomposition serialization round-trips") {
    for (const Graph& g : {path_graph(5), cycle_graph(5), complete_graph(4)}) {
        TreeDecomposition td = greedy_tree_decomposition(g);
        TreeDecomposition back = parse_tree_decomposition(serialize_tree_decomposition(td));
        REQUIRE(back.bags == td.bags);
        REQUIRE(back.tree == td.tree);
        REQUIRE(back.n == td.n);
    }
}

TEST_CASE("tree decomposition parser rejects malformed files") {
    REQUIRE_THROWS_AS(parse_tree_decomposition(""), input_error);
    // Declared width does not match the bags.
    REQUIRE_THROWS_AS(parse_tree_decomposition("td 1 1 2\nb 0 0 1\n"), input_error);
    // Edges forming a cycle instead of a tree.
    REQUIRE_THROWS_AS(
        parse_tree_decomposition(
            "td 3 2 3\nb 0 0 1\nb 1 1 2\nb 2 0 2\ne 0 1\ne 1 2\ne 0 2\n"),
        input_error);
    // Bag id out of range.
    REQUIRE_THROWS_AS(parse_tree_decomposition("td 1 2 2\nb 1 0 1\n"), input_error);
    // Vertex repeated in a bag.
    REQUIRE_THROWS_AS(parse_tree_decomposition("td 1 2 2\nb 0 0 0\n"), input_error);
}
