#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <functional>
#include <map>

using namespace iswp;
using namespace testsupport;

namespace {

const PropertyFamily& prop(const std::string& name) {
    static std::map<std::string, PropertyFamily> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, find_property(name)).first;
    return it->second;
}

} // namespace

TEST_CASE("clique, independent set, and their union") {
    for (int k = 0; k <= 4; ++k) {
        for (EdgeMask m = 0; m <= full_mask(k); ++m) {
            bool is_clique = m == full_mask(k);
            bool is_empty = m == 0;
            REQUIRE(prop("clique").holds(k, m) == is_clique);
            REQUIRE(prop("independent_set").holds(k, m) == is_empty);
            REQUIRE(prop("clique_or_is").holds(k, m) == (is_clique || is_empty));
        }
    }
}

TEST_CASE("connected matches the graph-level definition") {
    for (int k = 0; k <= 4; ++k)
        for (EdgeMask m = 0; m <= full_mask(k); ++m)
            REQUIRE(prop("connected").holds(k, m) == is_connected(graph_from_mask(k, m)));
}

TEST_CASE("fixed-pattern encodings: matching, sub_path, sub_cycle") {
    // Matching on k=4: the pairing edges (0,1) and (2,3) must be present.
    EdgeMask pairing =
        (EdgeMask(1) << pair_bit(0, 1)) | (EdgeMask(1) << pair_bit(2, 3));
    for (EdgeMask m = 0; m <= full_mask(4); ++m)
        REQUIRE(prop("matching").holds(4, m) == ((m & pairing) == pairing));
    // Odd arity never satisfies.
    for (EdgeMask m = 0; m <= full_mask(3); ++m)
        REQUIRE_FALSE(prop("matching").holds(3, m));

    EdgeMask path = (EdgeMask(1) << pair_bit(0, 1)) | (EdgeMask(1) << pair_bit(1, 2));
    for (EdgeMask m = 0; m <= full_mask(3); ++m) {
        REQUIRE(prop("sub_path").holds(3, m) == ((m & path) == path));
        REQUIRE(prop("sub_cycle").holds(3, m) == (m == full_mask(3)));
    }
    REQUIRE_FALSE(prop("sub_cycle").holds(2, full_mask(2)));
}

TEST_CASE("even_edges counts parity") {
    REQUIRE(prop("even_edges").holds(3, 0));
    REQUIRE_FALSE(prop("even_edges").holds(3, 1));
    REQUIRE_FALSE(prop("even_edges").holds(3, full_mask(3)));
    REQUIRE(prop("even_edges").holds(4, full_mask(4)));
}

TEST_CASE("induced path and cycle recognize exactly the right graphs") {
    for (int k = 2; k <= 4; ++k)
        for (EdgeMask m = 0; m <= full_mask(k); ++m) {
            Graph g = graph_from_mask(k, m);
            bool path_like = are_isomorphic(g, path_graph(k));
            REQUIRE(prop("induced_path").holds(k, m) == path_like);
            if (k >= 3) {
                bool cycle_like = are_isomorphic(g, cycle_graph(k));
                REQUIRE(prop("induced_cycle").holds(k, m) == cycle_like);
            }
        }
    REQUIRE_FALSE(prop("induced_cycle").holds(2, full_mask(2)));
}

TEST_CASE("treewidth_ge_2 holds exactly on graphs containing a cycle") {
    for (int k = 0; k <= 4; ++k)
        for (EdgeMask m = 0; m <= full_mask(k); ++m) {
            Graph g = graph_from_mask(k, m);
            // A graph contains a cycle iff some component has >= as many
            // edges as vertices; equivalently it is not a forest.
            bool is_forest = true;
            std::vector<int> parent(k);
            for (int i = 0; i < k; ++i) parent[i] = i;
            std::function<int(int)> find = [&](int x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            for (auto [u, v] : g.edges()) {
                int ru = find(u), rv = find(v);
                if (ru == rv) is_forest = false;
                parent[ru] = rv;
            }
            REQUIRE(prop("treewidth_ge_2").holds(k, m) == !is_forest);
        }
}

TEST_CASE("evaluate_property checks the arity") {
    LabelledGraph tri(complete_graph(3));
    REQUIRE(evaluate_property(prop("clique"), 3, tri) == 1);
    REQUIRE_THROWS_AS(evaluate_property(prop("clique"), 4, tri), input_error);
}

TEST_CASE("declared flags agree with exhaustive checks at k <= 4") {
    Limits lim;
    for (const auto& phi : builtin_properties()) {
        // Symmetric: invariant under every permutation at k <= 4.
        bool symmetric = true;
        for (int k = 0; k <= 4 && symmetric; ++k) {
            std::vector<int> perm(k);
            for (int i = 0; i < k; ++i) perm[i] = i;
            do {
                for (EdgeMask m = 0; m <= full_mask(k); ++m)
                    if (phi.holds(k, m) != phi.holds(k, permute_mask(m, perm))) {
                        symmetric = false;
                        break;
                    }
            } while (symmetric && std::next_permutation(perm.begin(), perm.end()));
        }
        CAPTURE(phi.name);
        REQUIRE(symmetric == phi.symmetric);

        // Monotone + uniformly monotone against the checker.
        bool monotone = true, uniform = true;
        for (int k = 0; k <= 4; ++k) {
            UniformityReport r = check_uniformly_monotone(phi, k, lim);
            monotone = monotone && r.monotone;
            uniform = uniform && r.uniform;
        }
        REQUIRE(monotone == phi.monotone);
        REQUIRE(uniform == phi.uniformly_monotone);
    }
}

TEST_CASE("truth tables load, evaluate, and round-trip") {
    // Encode "has at least one edge" at k = 2 with one satisfying row.
    TruthTable t;
    t.k = 2;
    t.satisfying = {EdgeMask(1)};
    std::string text = serialize_truth_table(t);
    TruthTable back = parse_truth_table(text);
    REQUIRE(back.k == 2);
    REQUIRE(back.satisfying == t.satisfying);

    PropertyFamily phi = table_property(back);
    REQUIRE(phi.holds(2, 1));
    REQUIRE_FALSE(phi.holds(2, 0));
    REQUIRE_FALSE(phi.holds(3, 1)); // other arities evaluate to 0
}

TEST_CASE("truth table rows may use any labelling") {
    // Mask 1 = edge (1,2) under labelling 2,1,3 names the same labelled
    // graph as the identity labelling row; a conflicting value must throw.
    std::string consistent = "phi 3\n1 2,1,3 1\n";
    TruthTable t = parse_truth_table(consistent);
    PropertyFamily phi = table_property(t);
    REQUIRE(phi.holds(3, 1));
    REQUIRE_FALSE(phi.holds(3, 2));

    REQUIRE_THROWS_AS(parse_truth_table("phi 3\n1 1,2,3 1\n1 2,1,3 0\n"), input_error);
    REQUIRE_THROWS_AS(parse_truth_table("phi 3\n1 1,1,3 1\n"), input_error); // not a bijection
    REQUIRE_THROWS_AS(parse_truth_table("phi 3\n8 1,2,3 1\n"), input_error); // mask too wide
    REQUIRE_THROWS_AS(parse_truth_table("phi 3\n1 1,2,3 2\n"), input_error); // bad value
    REQUIRE_THROWS_AS(parse_truth_table("nope\n"), input_error);
}

TEST_CASE("table-backed properties support the analysis pipeline") {
    // "Contains edge (1,2)" at k = 3: rows for every mask containing bit 0.
    TruthTable t;
    t.k = 3;
    for (EdgeMask m = 0; m <= full_mask(3); ++m)
        if (m & 1) t.satisfying.insert(m);
    PropertyFamily phi = table_property(t);
    REQUIRE(phi.monotone);
    REQUIRE_FALSE(phi.symmetric);
    auto minimal = enumerate_minimal_labelled(phi, 3);
    REQUIRE(minimal.size() == 1);
    REQUIRE(minimal.front().mask() == 1);
}
