#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace iswp;
using namespace testsupport;

namespace {

// Slow reference check: does some function rainbow this subset?
bool covers_all_subsets(const HashFamily& fam) {
    bool ok = true;
    for_each_subset(fam.n, fam.k, [&](const std::vector<int>& s) {
        ok = detail::family_covers(fam, s);
        return ok;
    });
    return ok;
}

} // namespace

TEST_CASE("greedy families rainbow every subset") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}, {7, 3}, {8, 4}, {5, 5}}) {
        HashFamily fam = build_greedy_family(n, k);
        CAPTURE(n, k);
        REQUIRE(fam.n == n);
        REQUIRE(fam.k == k);
        REQUIRE_FALSE(fam.functions.empty());
        for (const auto& fn : fam.functions) {
            REQUIRE(static_cast<int>(fn.size()) == n);
            for (int c : fn) {
                REQUIRE(c >= 1);
                REQUIRE(c <= k);
            }
        }
        REQUIRE(covers_all_subsets(fam));
        FamilyValidation val = validate_k_perfect_family(fam);
        REQUIRE(val.perfect);
        REQUIRE(val.mode == "exhaustive");
    }
    // The first emitted function rainbows the lexicographically first subset.
    HashFamily fam = build_greedy_family(6, 3);
    REQUIRE(fam.functions.front()[0] == 1);
    REQUIRE(fam.functions.front()[1] == 2);
    REQUIRE(fam.functions.front()[2] == 3);
}

TEST_CASE("edge arities collapse to single functions") {
    // k = 1: one colour suffices for every singleton.
    HashFamily ones = build_greedy_family(9, 1);
    REQUIRE(ones.functions.size() == 1);
    REQUIRE(validate_k_perfect_family(ones).perfect);
    // k = n: the identity-like rainbow covers the only subset.
    HashFamily full = build_greedy_family(5, 5);
    REQUIRE(full.functions.size() == 1);
    REQUIRE(validate_k_perfect_family(full).perfect);
}

TEST_CASE("two-stage composed construction is perfect") {
    // n above k^2 exercises the modular outer maps composed with the inner
    // greedy family on k^2 cells.
    HashFamily fam = build_fks_family(40, 3);
    REQUIRE(fam.n == 40);
    REQUIRE(fam.k == 3);
    FamilyValidation val = validate_k_perfect_family(fam);
    REQUIRE(val.mode == "exhaustive");
    REQUIRE(val.perfect);

    // At n <= k^2 the construction falls back to the plain greedy cover.
    HashFamily small = build_fks_family(9, 3);
    REQUIRE(validate_k_perfect_family(small).perfect);
}

TEST_CASE("validation refutes a broken family with a witness") {
    HashFamily fam = build_greedy_family(6, 3);
    for (auto& fn : fam.functions)
        for (int& c : fn) c = 1; // monochrome: nothing is rainbowed
    FamilyValidation val = validate_k_perfect_family(fam);
    REQUIRE_FALSE(val.perfect);
    REQUIRE(static_cast<int>(val.uncovered.size()) == 3);
    REQUIRE_FALSE(detail::family_covers(fam, val.uncovered));

    // Sampled mode (forced by a tiny budget) also catches it.
    Limits tight;
    tight.node_budget = 1;
    FamilyValidation sampled = validate_k_perfect_family(fam, tight, 64, 7);
    REQUIRE(sampled.mode == "sampled");
    REQUIRE_FALSE(sampled.perfect);
}

TEST_CASE("default builder validates and reports its mode") {
    HashFamily fam = build_k_perfect_family(10, 3);
    REQUIRE(fam.validation_mode == "exhaustive");
    REQUIRE(covers_all_subsets(fam));
}

TEST_CASE("family construction rejects bad arguments") {
    REQUIRE_THROWS_AS(build_greedy_family(4, 0), input_error);
    REQUIRE_THROWS_AS(build_greedy_family(4, 5), input_error);
    REQUIRE_THROWS_AS(build_k_perfect_family(0, 0), input_error);
    HashFamily ragged;
    ragged.n = 4;
    ragged.k = 2;
    ragged.functions = {{1, 2, 1}};
    REQUIRE_THROWS_AS(validate_k_perfect_family(ragged), input_error);
    HashFamily off;
    off.n = 3;
    off.k = 2;
    off.functions = {{1, 2, 3}};
    REQUIRE_THROWS_AS(validate_k_perfect_family(off), input_error);
    Limits lim;
    lim.node_budget = 10;
    REQUIRE_THROWS_AS(build_greedy_family(10, 4, lim), budget_error);
}
