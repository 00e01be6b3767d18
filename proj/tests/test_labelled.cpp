#include "test_support.hpp"

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

using namespace iswp;
using namespace testsupport;

TEST_CASE("pair bits are colexicographic and order-free") {
    REQUIRE(pair_bit(0, 1) == 0);
    REQUIRE(pair_bit(0, 2) == 1);
    REQUIRE(pair_bit(1, 2) == 2);
    REQUIRE(pair_bit(0, 3) == 3);
    REQUIRE(pair_bit(3, 0) == 3); // endpoints swap freely
    REQUIRE(pair_count(5) == 10);
    REQUIRE(full_mask(4) == 0x3f);
    REQUIRE(std::popcount(full_mask(11)) == 55);
    REQUIRE_THROWS_AS(check_mask_order(12), input_error);
    REQUIRE_THROWS_AS(check_mask_order(-1), input_error);
}

TEST_CASE("mask and graph conversions round-trip") {
    SplitMix64 rng(5);
    for (int k = 0; k <= 6; ++k) {
        for (int rep = 0; rep < 20; ++rep) {
            EdgeMask m = rng.next() & full_mask(k);
            Graph g = graph_from_mask(k, m);
            REQUIRE(LabelledGraph(g).mask() == m);
        }
    }
    REQUIRE_THROWS_AS(graph_from_mask(3, EdgeMask(1) << 3), input_error);
}

TEST_CASE("mask of a tuple reads the induced labelled graph") {
    Graph g = path_graph(4); // 0-1-2-3
    REQUIRE(mask_from_tuple(g, {0, 1, 2, 3}) ==
            ((EdgeMask(1) << pair_bit(0, 1)) | (EdgeMask(1) << pair_bit(1, 2)) |
             (EdgeMask(1) << pair_bit(2, 3))));
    // Reversing the tuple relabels: 3-2-1-0 is again a path in order.
    REQUIRE(mask_from_tuple(g, {3, 2, 1, 0}) == mask_from_tuple(g, {0, 1, 2, 3}));
    // 0,2 are non-adjacent: the pair (position 0, position 1) contributes no bit.
    REQUIRE((mask_from_tuple(g, {0, 2, 1, 3}) & 1) == 0);
}

TEST_CASE("permute_mask acts on labels") {
    // Pull-back convention: result has edge (a,b) iff the input has edge
    // (perm[a], perm[b]). For the single edge (0,1) and perm = (1,2,0) the
    // preimage pair is {0,2} since perm[0]=1 and perm[2]=0.
    EdgeMask e01 = EdgeMask(1) << pair_bit(0, 1);
    std::vector<int> perm{1, 2, 0};
    REQUIRE(permute_mask(e01, perm) == (EdgeMask(1) << pair_bit(0, 2)));

    // Identity and inverse behaviour on random masks.
    SplitMix64 rng(6);
    for (int rep = 0; rep < 50; ++rep) {
        int k = 5;
        EdgeMask m = rng.next() & full_mask(k);
        std::vector<int> p{0, 1, 2, 3, 4};
        for (int i = k - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
        std::vector<int> inv(k);
        for (int i = 0; i < k; ++i) inv[p[i]] = i;
        REQUIRE(permute_mask(permute_mask(m, p), inv) == m);
        REQUIRE(std::popcount(permute_mask(m, p)) == std::popcount(m));
    }
}

TEST_CASE("mask hex rendering") {
    REQUIRE(mask_to_hex(0) == "0");
    REQUIRE(mask_to_hex(0x3f) == "3f");
    REQUIRE(mask_to_hex(0x21) == "21");
}
